#include "nlie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "nlie/cocycle.hpp"
#include "nlie/cohomology.hpp"

namespace nlie::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxWitnesses = 20;

// ---- input ----

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t read_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar read_scalar(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(where, "scalar must be a string \"p/q\" or an integer");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, std::string("malformed scalar: ") + e.what());
  }
}

std::vector<std::size_t> read_increasing(const Json& j, std::size_t length, std::size_t bound, const std::string& where,
                                         const std::string& what) {
  if (!j.is_array()) fail(where, "expected an array of indices");
  if (j.size() != length) fail(where, "expected " + std::to_string(length) + " indices");
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::size_t i = read_count(j[r], where + "[" + std::to_string(r) + "]");
    if (i >= bound) fail(where, "index " + std::to_string(i) + " out of range");
    if (!out.empty() && i <= out.back()) fail(where, "non-increasing " + what + " key");
    out.push_back(i);
  }
  return out;
}

// sparse {"k": scalar} map
Vector read_sparse(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object {\"index\": scalar}");
  Vector v(dim);
  for (const auto& [key, value] : j.items()) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(where, "key \"" + key + "\" is not an index");
    }
    if (k >= dim) fail(where, "index " + key + " out of range");
    v[k] = read_scalar(value, where + "." + key);
  }
  return v;
}

Json write_sparse(const Vector& v) {
  Json out = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) out[std::to_string(k)] = format_scalar(v[k]);
  }
  return out;
}

Json write_tuple(const SmallTuple& t) { return Json(t.to_vector()); }

Json write_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  const std::string root = "document";
  if (read_count(field(doc, "format", root), "format") != 1) fail("format", "unsupported format version");
  const Json& fld = field(doc, "field", root);
  if (!fld.is_string() || fld.get<std::string>() != "rational") fail("field", "only \"rational\" is supported");
  const std::size_t n = read_count(field(doc, "arity", root), "arity");
  const std::size_t m = read_count(field(doc, "dim", root), "dim");
  if (n < 2 || n > kMaxWordLength + 1) fail("arity", "must lie in [2, " + std::to_string(kMaxWordLength + 1) + "]");
  if (m == 0) fail("dim", "must be positive");

  InputDocument out;
  out.algebra = std::make_shared<NLieAlgebra>(n, m);
  const Json& brackets = field(doc, "brackets", root);
  if (!brackets.is_array()) fail("brackets", "expected an array");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string where = "brackets[" + std::to_string(b) + "]";
    const auto args = read_increasing(field(brackets[b], "args", where), n, m, where + ".args", "bracket");
    if (!seen.insert(args).second) fail(where + ".args", "duplicate bracket key");
    out.algebra->set_bracket(args, read_sparse(field(brackets[b], "value", where), m, where + ".value"));
  }

  const auto rep_it = doc.find("rep");
  const auto theta_it = doc.find("theta");
  if (rep_it == doc.end() && theta_it == doc.end()) return out;
  if (rep_it == doc.end()) fail("theta", "requires a \"rep\" block giving dim_v");

  const std::size_t d = read_count(field(*rep_it, "dim_v", "rep"), "rep.dim_v");
  if (d == 0) fail("rep.dim_v", "must be positive");
  Representation rho(out.algebra, d);
  if (auto it = rep_it->find("rho"); it != rep_it->end()) {
    if (!it->is_array()) fail("rep.rho", "expected an array");
    std::set<std::vector<std::size_t>> seen_rho;
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string where = "rep.rho[" + std::to_string(r) + "]";
      const Json& entry = (*it)[r];
      const auto args = read_increasing(field(entry, "args", where), n - 1, m, where + ".args", "rho");
      if (!seen_rho.insert(args).second) fail(where + ".args", "duplicate rho key");
      const Json& rows = field(entry, "matrix", where);
      if (!rows.is_array() || rows.size() != d) fail(where + ".matrix", "expected " + std::to_string(d) + " rows");
      Matrix mat(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        const std::string rw = where + ".matrix[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != d) fail(rw, "expected " + std::to_string(d) + " entries");
        for (std::size_t k = 0; k < d; ++k) mat(i, k) = read_scalar(rows[i][k], rw + "[" + std::to_string(k) + "]");
      }
      rho.set_rho(args, std::move(mat));
    }
  }
  out.has_rep = true;
  out.rep.emplace(std::move(rho));

  if (theta_it != doc.end()) {
    if (!theta_it->is_array()) fail("theta", "expected an array");
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen_theta;
    for (std::size_t t = 0; t < theta_it->size(); ++t) {
      const std::string where = "theta[" + std::to_string(t) + "]";
      const Json& entry = (*theta_it)[t];
      const std::size_t g = read_count(field(entry, "g", where), where + ".g");
      if (g >= m) fail(where + ".g", "index out of range");
      const auto vargs = read_increasing(field(entry, "vargs", where), n - 1, d, where + ".vargs", "theta");
      if (!seen_theta.insert({g, vargs}).second) fail(where, "duplicate theta key");
      out.rep->set_theta(g, vargs, read_sparse(field(entry, "value", where), d, where + ".value"));
    }
    out.has_theta = true;
  }
  return out;
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_input(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string write_input(const NLieAlgebra& algebra, const GeneralizedRepresentation* rep) {
  Json doc;
  doc["format"] = 1;
  doc["field"] = "rational";
  doc["arity"] = algebra.arity();
  doc["dim"] = algebra.dim();
  Json brackets = Json::array();
  for (const auto& [w, v] : algebra.table()) {
    if (is_zero(v)) continue;
    brackets.push_back(Json{{"args", w.to_vector()}, {"value", write_sparse(v)}});
  }
  doc["brackets"] = std::move(brackets);
  if (rep) {
    Json rho = Json::array();
    for (const auto& [w, mat] : rep->rho().table()) {
      if (mat.is_zero()) continue;
      rho.push_back(Json{{"args", w.to_vector()}, {"matrix", write_matrix(mat)}});
    }
    doc["rep"] = Json{{"dim_v", rep->dim_v()}, {"rho", std::move(rho)}};
    if (!rep->theta().empty()) {
      Json theta = Json::array();
      for (const auto& [key, v] : rep->theta()) {
        if (is_zero(v)) continue;
        theta.push_back(Json{{"g", key.first}, {"vargs", key.second.to_vector()}, {"value", write_sparse(v)}});
      }
      doc["theta"] = std::move(theta);
    }
  }
  return doc.dump(2) + "\n";
}

namespace {

// ---- commands ----

struct Outcome {
  Json report;
  std::vector<std::string> summary;
  int code = kPass;

  void violation() { code = std::max(code, static_cast<int>(kViolation)); }
};

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

const GeneralizedRepresentation& require_rep(const InputDocument& doc) {
  if (!doc.rep) throw InputError("this command needs a \"rep\" block");
  return *doc.rep;
}

void require_valid_algebra(const NLieAlgebra& g) {
  if (!check_fundamental_identity(g).empty()) throw InputError("algebra violates the fundamental identity");
}

void require_genrep(const GeneralizedRepresentation& rep) {
  require_valid_algebra(rep.algebra());
  const Cochain sq = check_generalized_rep(rep);
  if (!sq.is_zero()) {
    throw InputError("not a generalized representation: [mu, mu] has " + std::to_string(sq.table().size()) +
                     " nonzero entries");
  }
}

std::string describe_pattern(const KeySpace& keys, std::uint64_t key, const DirectSumSpace& space) {
  std::vector<std::size_t> ids(keys.degree());
  std::size_t tail = 0;
  keys.decode(key, ids, tail);
  std::string s = "(";
  for (auto b : ids) {
    for (auto i : keys.blocks().word(b)) s += space.in_g(i) ? 'g' : 'V';
    s += ',';
  }
  s += space.in_g(tail) ? 'g' : 'V';
  return s + ")";
}

Outcome verify_algebra(const InputDocument& doc) {
  const NLieAlgebra& g = *doc.algebra;
  Outcome o;
  const auto violations = check_fundamental_identity(g);
  const Cochain pi = structure_cochain(g);
  const Cochain sq = graded_bracket(pi, pi);
  const bool fi = violations.empty();
  const bool pi_zero = sq.is_zero();

  Json witnesses = Json::array();
  for (std::size_t i = 0; i < violations.size() && i < kMaxWitnesses; ++i) {
    const auto& v = violations[i];
    witnesses.push_back(Json{{"x", v.x.to_vector()},
                             {"y", v.y.to_vector()},
                             {"lhs", write_sparse(v.lhs)},
                             {"rhs", write_sparse(v.rhs)},
                             {"residual", write_sparse(v.rhs - v.lhs)}});
  }
  o.report["fundamental_identity"] =
      Json{{"holds", fi}, {"violations", violations.size()}, {"witnesses", std::move(witnesses)}};
  o.report["pi_squared"] = Json{{"zero", pi_zero}, {"nonzero_keys", sq.table().size()}};
  o.report["agree"] = fi == pi_zero;

  o.summary.push_back(std::string("fundamental identity: ") + verdict(fi) + " (" + std::to_string(violations.size()) +
                      " violating pairs)");
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
    const auto& v = violations[i];
    std::ostringstream line;
    line << "  x = " << Json(v.x.to_vector()).dump() << ", y = " << Json(v.y.to_vector()).dump()
         << ", rhs - lhs = " << write_sparse(v.rhs - v.lhs).dump();
    o.summary.push_back(line.str());
  }
  o.summary.push_back(std::string("[pi, pi] = 0: ") + verdict(pi_zero) + " (" + std::to_string(sq.table().size()) +
                      " nonzero keys)");
  o.summary.push_back(std::string("checks agree: ") + (fi == pi_zero ? "yes" : "NO"));
  if (!fi || !pi_zero) o.violation();
  return o;
}

Outcome verify_rep(const InputDocument& doc) {
  const GeneralizedRepresentation& rep = require_rep(doc);
  Outcome o;
  const bool fi = check_fundamental_identity(*doc.algebra).empty();
  o.report["algebra_valid"] = fi;
  if (!fi) {
    o.summary.push_back("algebra violates the fundamental identity; representation not checked");
    o.violation();
    return o;
  }
  const auto violations = check_representation(rep.rho());
  std::size_t commutator = 0;
  Json witnesses = Json::array();
  for (const auto& v : violations) {
    if (v.identity == RepIdentity::commutator) ++commutator;
    if (witnesses.size() < kMaxWitnesses) {
      witnesses.push_back(Json{{"identity", v.identity == RepIdentity::commutator ? "commutator" : "bracket_in_last_slot"},
                               {"first", write_tuple(v.first)},
                               {"second", write_tuple(v.second)},
                               {"residual", write_matrix(v.residual)}});
    }
  }
  GeneralizedRepresentation plain(rep.rho());
  const Cochain sq = check_generalized_rep(plain);
  const bool ok = violations.empty();
  o.report["representation"] = Json{{"holds", ok},
                                    {"commutator_violations", commutator},
                                    {"bracket_in_last_slot_violations", violations.size() - commutator},
                                    {"witnesses", std::move(witnesses)}};
  o.report["mu_squared_without_theta"] = Json{{"zero", sq.is_zero()}, {"nonzero_keys", sq.table().size()}};
  o.report["agree"] = ok == sq.is_zero();
  o.summary.push_back(std::string("representation identities: ") + verdict(ok) + " (" + std::to_string(commutator) +
                      " commutator, " + std::to_string(violations.size() - commutator) + " bracket-in-last-slot violations)");
  o.summary.push_back(std::string("[mu, mu] = 0 with theta = 0: ") + verdict(sq.is_zero()));
  o.summary.push_back(std::string("checks agree: ") + (ok == sq.is_zero() ? "yes" : "NO"));
  if (!ok || !sq.is_zero()) o.violation();
  return o;
}

Outcome verify_genrep(const InputDocument& doc) {
  const GeneralizedRepresentation& rep = require_rep(doc);
  Outcome o;
  const bool fi = check_fundamental_identity(*doc.algebra).empty();
  o.report["algebra_valid"] = fi;
  if (!fi) {
    o.summary.push_back("algebra violates the fundamental identity; [mu, mu] not checked");
    o.violation();
    return o;
  }
  const DirectSumSpace space = direct_sum(rep);
  const Cochain sq = check_generalized_rep(rep);
  std::map<std::string, std::size_t> by_pattern;
  Json witnesses = Json::array();
  for (const auto& [key, value] : sq.table()) {
    ++by_pattern[describe_pattern(sq.keys(), key, space)];
    if (witnesses.size() < kMaxWitnesses) {
      witnesses.push_back(Json{{"key", describe_key(sq.keys(), key)}, {"value", write_sparse(value)}});
    }
  }
  Json patterns = Json::object();
  for (const auto& [p, count] : by_pattern) patterns[p] = count;
  o.report["mu_squared"] = Json{{"zero", sq.is_zero()},
                                {"nonzero_keys", sq.table().size()},
                                {"by_pattern", std::move(patterns)},
                                {"witnesses", std::move(witnesses)}};
  o.summary.push_back(std::string("[mu, mu] = 0: ") + verdict(sq.is_zero()) + " (" +
                      std::to_string(sq.table().size()) + " nonzero keys)");
  for (const auto& [p, count] : by_pattern) o.summary.push_back("  " + p + ": " + std::to_string(count));
  if (!sq.is_zero()) o.violation();
  return o;
}

Outcome cohomology(const InputDocument& doc, ComplexKind kind, std::size_t max_degree) {
  const GeneralizedRepresentation& rep = require_rep(doc);
  if (kind == ComplexKind::generalized) require_genrep(rep);
  // the classical complex only sees rho
  const CohomologyReport r = cohomology_report(rep, kind, max_degree);
  Outcome o;
  o.report["complex"] = to_string(kind);
  o.report["arity"] = r.arity;
  o.report["g_dim"] = r.g_dim;
  o.report["v_dim"] = r.v_dim;
  o.report["max_degree"] = r.max_degree;
  Json degrees = Json::array();
  o.summary.push_back("complex: " + to_string(kind) + ", degrees 0.." + std::to_string(max_degree));
  o.summary.push_back("  p      dim C     rank d      dim Z      dim B      dim H  B in Z");
  for (const auto& d : r.degrees) {
    degrees.push_back(Json{{"degree", d.degree},
                           {"dim_c", d.dim_c},
                           {"rank_d", d.rank_d},
                           {"dim_z", d.dim_z},
                           {"dim_b", d.dim_b},
                           {"dim_h", d.dim_h},
                           {"image_in_kernel", d.image_in_kernel}});
    std::ostringstream line;
    line << "  " << d.degree;
    for (auto x : {static_cast<std::int64_t>(d.dim_c), static_cast<std::int64_t>(d.rank_d),
                   static_cast<std::int64_t>(d.dim_z), static_cast<std::int64_t>(d.dim_b), d.dim_h}) {
      std::string s = std::to_string(x);
      line << std::string(11 - std::min<std::size_t>(11, s.size()), ' ') << s;
    }
    line << "  " << (d.image_in_kernel ? "yes" : "NO");
    o.summary.push_back(line.str());
  }
  o.report["degrees"] = std::move(degrees);
  o.report["inclusions_hold"] = r.inclusions_hold();
  if (!r.inclusions_hold()) o.violation();
  return o;
}

Json crosscheck_json(const CrosscheckResult& c) {
  return Json{{"battery_empty", c.battery_empty},
              {"d_zero_on_support", c.d_zero_on_support},
              {"d_zero", c.d_zero},
              {"agree", c.agree},
              {"discrepancies", c.discrepancies},
              {"outside_support", c.outside_support_count}};
}

Outcome cocycle_check_one(const GeneralizedRepresentation& rep, std::size_t samples, std::uint64_t seed) {
  require_genrep(rep);
  const DirectSumSpace space = direct_sum(rep);
  const std::size_t n = rep.algebra().arity();
  Rng rng(seed);
  Outcome o;

  // genuine 1-cocycles: random combinations of a kernel basis of d at degree 0
  const CochainBasis c0 = CochainBasis::restricted(space, n, 0);
  const CochainBasis c1 = CochainBasis::restricted(space, n, 1);
  const NewComplex complex(rep);
  const SparseMatrix d0 = assemble_matrix([&](const Cochain& a) { return complex.apply(a); }, c0, c1);
  const RankResult kernel = rank_and_kernel(d0, true);

  auto run_sample = [&](const Matrix& alpha, const char* kind, bool expect_cocycle) {
    const CrosscheckResult c = crosscheck_one_cocycle(rep, alpha);
    const auto mismatches = one_cocycle_mismatches(rep, alpha);
    const bool ok = c.agree && mismatches.empty() && (!expect_cocycle || (c.battery_empty && c.d_zero));
    Json j = crosscheck_json(c);
    j["kind"] = kind;
    j["residuals_match_d"] = mismatches.empty();
    j["mismatched_keys"] = mismatches;
    j["pass"] = ok;
    if (!ok) o.violation();
    return j;
  };

  Json samples_json = Json::array();
  std::size_t passed = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Json j = run_sample(random_matrix(rng, space.v_dim, space.g_dim), "random", false);
    passed += j["pass"].get<bool>();
    samples_json.push_back(std::move(j));
  }
  for (std::size_t s = 0; s < samples && !kernel.kernel.empty(); ++s) {
    SparseColumn x;
    for (const auto& k : kernel.kernel) x = sparse_add(x, random_scalar(rng), k);
    Json j = run_sample(one_cochain_matrix(c0.from_coordinates(x), space), "cocycle", true);
    passed += j["pass"].get<bool>();
    samples_json.push_back(std::move(j));
  }
  o.report["degree"] = 1;
  o.report["seed"] = seed;
  o.report["cocycle_space_dim"] = kernel.nullity;
  o.report["samples"] = std::move(samples_json);
  o.summary.push_back("1-cocycle identity vs d on " + std::to_string(o.report["samples"].size()) +
                      " samples (kernel of d0 has dim " + std::to_string(kernel.nullity) + ")");
  o.summary.push_back("  passed: " + std::to_string(passed) + "/" + std::to_string(o.report["samples"].size()));
  return o;
}

Outcome cocycle_check_two(const GeneralizedRepresentation& rep, std::size_t samples, std::uint64_t seed,
                          Reading reading) {
  require_genrep(rep);
  const std::size_t n = rep.algebra().arity();
  if (n < 3) throw InputError("the 2-cocycle battery needs arity n >= 3");
  const DirectSumSpace space = direct_sum(rep);
  const NewComplex complex(rep);
  const CochainBasis c0 = CochainBasis::restricted(space, n, 0);
  const SignTable& signs = frozen_sign_table();
  Rng rng(seed);
  Outcome o;

  std::map<std::string, std::size_t> failing_equations;
  std::map<std::string, std::size_t> uncovered;
  auto run_sample = [&](const TwoCochainTriple& beta, const char* kind, bool expect_cocycle) {
    const CrosscheckResult c = crosscheck_two_cocycle(rep, beta, reading);
    const EquationComparison cmp = compare_equations(rep, beta, signs, reading);
    for (const auto& g : cmp.groups) {
      if (g.matches) continue;
      for (const auto& name : g.equations) ++failing_equations[name];
    }
    for (const auto& u : cmp.uncovered) {
      uncovered["beta" + std::to_string(u.component) + " on " + describe(u.pattern, n)] += u.nonzero_keys;
    }
    const bool ok = c.agree && cmp.all_match() && (!expect_cocycle || (c.battery_empty && c.d_zero));
    Json j = crosscheck_json(c);
    j["kind"] = kind;
    j["equations_match_d"] = cmp.all_match();
    j["pass"] = ok;
    if (!ok) o.violation();
    return j;
  };

  Json samples_json = Json::array();
  std::size_t passed = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Json j = run_sample(random_triple(rng, space, n), "random", false);
    passed += j["pass"].get<bool>();
    samples_json.push_back(std::move(j));
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const Cochain gamma = random_cochain(rng, c0);
    Json j = run_sample(triple_from_cochain(complex.apply(gamma), space), "coboundary", true);
    passed += j["pass"].get<bool>();
    samples_json.push_back(std::move(j));
  }
  Json signs_json = Json::object();
  for (const auto& [name, s] : signs) signs_json[name] = s;
  Json failing = Json::object();
  for (const auto& [name, count] : failing_equations) failing[name] = count;
  Json uncovered_json = Json::object();
  for (const auto& [k, count] : uncovered) uncovered_json[k] = count;

  o.report["degree"] = 2;
  o.report["seed"] = seed;
  o.report["reading"] = to_string(reading);
  o.report["sign_table"] = std::move(signs_json);
  o.report["failing_equations"] = std::move(failing);
  o.report["outside_equation_support"] = std::move(uncovered_json);
  o.report["samples"] = std::move(samples_json);

  const std::size_t total = o.report["samples"].size();
  o.summary.push_back("2-cocycle equations (" + to_string(reading) + " reading) vs d on " + std::to_string(total) +
                      " samples");
  o.summary.push_back("  passed: " + std::to_string(passed) + "/" + std::to_string(total));
  for (const auto& [name, count] : failing_equations) {
    o.summary.push_back("  identity " + name + " disagrees with d on " + std::to_string(count) +
                        " samples");
  }
  for (const auto& [k, count] : uncovered) {
    o.summary.push_back("  outside equation support: " + k + " (" + std::to_string(count) + " nonzero keys)");
  }
  return o;
}

// ---- selftest ----

constexpr const char* kSelftestA4 = R"({"format": 1, "field": "rational", "arity": 3, "dim": 4,
  "brackets": [{"args": [0,1,2], "value": {"3": "1"}}, {"args": [0,1,3], "value": {"2": "-1"}},
               {"args": [0,2,3], "value": {"1": "1"}}, {"args": [1,2,3], "value": {"0": "-1"}}]})";

// abelian g, rho(X) = c_X N with N^2 = 0
constexpr const char* kSelftestAbelian = R"({"format": 1, "field": "rational", "arity": 3, "dim": 3,
  "brackets": [],
  "rep": {"dim_v": 2, "rho": [{"args": [0,1], "matrix": [["0","1"],["0","0"]]},
                              {"args": [0,2], "matrix": [["0","-2/3"],["0","0"]]},
                              {"args": [1,2], "matrix": [["0","5"],["0","0"]]}]}})";

// 3-Lie bracket f(x)[y,z] + cyclic on span(e0) + (span(h,k) ⋉ span(a,b))
constexpr const char* kSelftestTheta = R"({"format": 1, "field": "rational", "arity": 3, "dim": 3,
  "brackets": [{"args": [0,1,2], "value": {"2": "1"}}],
  "rep": {"dim_v": 2, "rho": [{"args": [0,1], "matrix": [["0","0"],["0","1"]]},
                              {"args": [0,2], "matrix": [["0","0"],["-1","0"]]}]},
  "theta": [{"g": 0, "vargs": [0,1], "value": {"1": "1"}}]})";

struct SelftestCase {
  std::string name;
  GeneralizedRepresentation rep;
};

std::vector<SelftestCase> selftest_cases() {
  std::vector<SelftestCase> out;
  const InputDocument a4 = parse_input(kSelftestA4);
  out.push_back({"A4 adjoint", GeneralizedRepresentation(adjoint_rep(a4.algebra))});
  out.push_back({"abelian m=3 nilpotent rho", *parse_input(kSelftestAbelian).rep});
  out.push_back({"trace-form theta", *parse_input(kSelftestTheta).rep});
  return out;
}

Outcome selftest() {
  Outcome o;
  Json cases = Json::array();
  Rng rng(20240601);
  for (const auto& c : selftest_cases()) {
    const GeneralizedRepresentation& rep = c.rep;
    const DirectSumSpace space = direct_sum(rep);
    const std::size_t n = rep.algebra().arity();
    Json checks = Json::object();
    auto record = [&](const char* name, bool ok) {
      checks[name] = ok;
      o.summary.push_back(c.name + ": " + name + " " + verdict(ok));
      if (!ok) o.violation();
    };

    const MuElement mu = build_mu(rep);
    record("[mu,mu]=0", graded_bracket(mu.total, mu.total).is_zero());

    // d^2 = 0 and closure on every basis element of degree 0 and random ones of degree 1
    bool d2 = true;
    bool closure = true;
    bool antisym = true;
    auto check_alpha = [&](const Cochain& alpha) {
      try {
        const Cochain da = new_differential(mu, alpha);
        d2 = d2 && new_differential(mu, da).is_zero();
      } catch (const ConsistencyError&) {
        closure = false;
      }
      const std::size_t p = alpha.degree();
      const Cochain ab = graded_bracket(mu.total, alpha);
      const Cochain ba = graded_bracket(alpha, mu.total);
      antisym = antisym && (ab + Scalar(parity_sign(p)) * ba).is_zero();
    };
    const CochainBasis c0 = CochainBasis::restricted(space, n, 0);
    for (std::uint64_t j = 0; j < c0.size(); ++j) check_alpha(c0.unit(j));
    const CochainBasis c1 = CochainBasis::restricted(space, n, 1);
    for (int s = 0; s < 5; ++s) check_alpha(random_cochain(rng, c1));
    record("d^2=0", d2);
    record("closure", closure);
    record("bracket antisymmetry", antisym);

    // restriction to g recovers the classical differential
    bool restriction = true;
    for (std::size_t p = 0; p <= 1; ++p) {
      const CochainBasis cl = CochainBasis::classical(space.g_dim, space.v_dim, n, p);
      for (std::uint64_t j = 0; j < cl.size(); ++j) {
        const Cochain alpha = cl.unit(j);
        const Cochain lhs = restrict_to_g(new_differential(mu, embed(alpha, space)), space);
        restriction = restriction && lhs == delta_rho(rep.rho(), alpha);
      }
    }
    record("restriction to g", restriction);
    cases.push_back(Json{{"name", c.name}, {"checks", std::move(checks)}});
  }
  o.report["cases"] = std::move(cases);
  return o;
}

Json wrap(const std::string& command, const std::string& file, Outcome& o) {
  Json report;
  report["command"] = command;
  if (!file.empty()) report["file"] = file;
  report["status"] = o.code == kPass ? "pass" : "violation";
  report["exit_code"] = o.code;
  for (auto& [k, v] : o.report.items()) report[k] = std::move(v);
  return report;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"n-Lie algebra representations and cohomology"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool quiet = false;
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_flag("--quiet", quiet, "suppress the text summary");

  std::string file;
  auto* va = app.add_subcommand("verify-algebra", "fundamental identity and [pi, pi] = 0");
  auto* vr = app.add_subcommand("verify-rep", "representation identities");
  auto* vg = app.add_subcommand("verify-genrep", "[mu, mu] = 0");
  auto* co = app.add_subcommand("cohomology", "cocycle, coboundary and cohomology dimensions");
  auto* cc = app.add_subcommand("cocycle-check", "explicit cocycle identities against d");
  auto* st = app.add_subcommand("selftest", "identities on built-in instances");
  for (auto* sub : {va, vr, vg, co, cc}) sub->add_option("file", file, "input document")->required();

  std::string complex_name = "new";
  std::size_t max_degree = 2;
  co->add_option("--complex", complex_name, "new | classical")->check(CLI::IsMember({"new", "classical"}));
  co->add_option("--max-degree", max_degree, "highest block degree, at most 3")
      ->check(CLI::Range(std::size_t{0}, kMaxCohomologyDegree));

  int degree = 1;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  std::string reading_name = "completed";
  cc->add_option("--degree", degree, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  cc->add_option("--random", samples, "random samples of each kind");
  cc->add_option("--seed", seed, "PRNG seed");
  cc->add_option("--reading", reading_name, "printed | completed")->check(CLI::IsMember({"printed", "completed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Outcome o;
  try {
    if (sub == st) {
      o = selftest();
    } else {
      const InputDocument doc = parse_input_file(file);
      if (sub == va) {
        o = verify_algebra(doc);
      } else if (sub == vr) {
        o = verify_rep(doc);
      } else if (sub == vg) {
        o = verify_genrep(doc);
      } else if (sub == co) {
        o = cohomology(doc, complex_name == "new" ? ComplexKind::generalized : ComplexKind::classical, max_degree);
      } else {
        const GeneralizedRepresentation& rep = require_rep(doc);
        o = degree == 1 ? cocycle_check_one(rep, samples, seed)
                        : cocycle_check_two(rep, samples, seed,
                                            reading_name == "printed" ? Reading::printed : Reading::completed);
      }
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kViolation;
  }

  const Json report = wrap(sub->get_name(), file, o);
  if (!quiet) {
    for (const auto& line : o.summary) out << line << "\n";
    out << "status: " << report["status"].get<std::string>() << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "input error: cannot write " << out_path << "\n";
      return kInputError;
    }
    f << report.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace nlie::cli
