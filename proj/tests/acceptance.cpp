// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

#include "nlie/cocycle.hpp"
#include "nlie/cohomology.hpp"
#include "nlie/random.hpp"
#include "support.hpp"

using namespace nlie;
namespace t = nlie::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> log;  // failure witnesses, first 20

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (log.size() < 20) log.push_back(what);
    }
  }
};

std::vector<CohomologyReport> g_reports;

void emit(const GeneralizedRepresentation& rep, ComplexKind kind, std::size_t max_degree) {
  g_reports.push_back(cohomology_report(rep, kind, max_degree));
}

// ---- 1: fundamental identity vs [pi, pi] ----

Outcome fi_vs_pi_squared() {
  Outcome o;
  Rng rng(101);
  std::vector<std::pair<std::string, std::shared_ptr<NLieAlgebra>>> valid = {
      {"abelian n=2", t::abelian(2, 3)},
      {"abelian n=3", t::abelian(3, 4)},
      {"A4", t::a4()},
      {"random Lie (sl2 frame)", t::change_basis(*t::sl2(), t::random_invertible(rng, 3))},
      {"random Lie (solvable frame)", t::change_basis(*t::solvable3(), t::random_invertible(rng, 3))},
      {"random Lie (heisenberg frame)", t::change_basis(*t::heisenberg(), t::random_invertible(rng, 3))},
      {"A4 new frame", t::change_basis(*t::a4(), t::random_invertible(rng, 4))}};
  std::vector<std::pair<std::string, std::shared_ptr<NLieAlgebra>>> invalid = {
      {"bad Jacobi", t::bad_jacobi()},
      {"A4 +1", t::perturb(*t::a4(), 0, 0, Scalar(1))},
      {"A4 -2", t::perturb(*t::a4(), 2, 3, Scalar(-2))},
      {"A4 +1/3", t::perturb(*t::a4(), 3, 1, Scalar(1, 3))},
      {"sl2 +1", t::perturb(*t::sl2(), 1, 0, Scalar(1))},
      {"heisenberg +1/2", t::perturb(*t::heisenberg(), 1, 0, Scalar(1, 2))},
      {"A4 +1 off-diagonal", t::perturb(*t::a4(), 1, 1, Scalar(1))}};
  std::size_t agree = 0, total = 0;
  auto run = [&](const auto& list, bool expect_valid) {
    for (const auto& [name, a] : list) {
      const bool fi = check_fundamental_identity(*a).empty();
      const Cochain pi = structure_cochain(*a);
      const bool sq = graded_bracket(pi, pi).is_zero();
      ++total;
      agree += fi == sq;
      o.require(fi == sq, name + ": FI " + (fi ? "holds" : "fails") + ", [pi,pi]=0 " + (sq ? "holds" : "fails"));
      o.require(fi == expect_valid, name + ": expected " + (expect_valid ? "valid" : "invalid"));
    }
  };
  run(valid, true);
  run(invalid, false);
  o.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(valid.size()) +
             " valid, " + std::to_string(invalid.size()) + " invalid)";
  return o;
}

// ---- 2: d o d = 0 ----

Outcome d_squared() {
  Outcome o;
  std::size_t basis = 0, random = 0;
  for (const auto* name : {"a4_adjoint.json", "abelian_n3_m3_rho.json"}) {
    const NewComplex cx(t::load_rep(name));
    Rng rng(202);
    for (std::size_t p = 0; p <= 1; ++p) {
      const CochainBasis b = CochainBasis::restricted(cx.space(), cx.arity(), p);
      for (std::uint64_t j = 0; j < b.size(); ++j) {
        ++basis;
        o.require(cx.apply(cx.apply(b.unit(j))).is_zero(), std::string(name) + ": basis " + std::to_string(j));
      }
    }
    for (int s = 0; s < 50; ++s) {
      const std::size_t p = s % 2;
      const Cochain a = random_cochain(rng, CochainBasis::restricted(cx.space(), cx.arity(), p));
      ++random;
      o.require(cx.apply(cx.apply(a)).is_zero(), std::string(name) + ": random sample " + std::to_string(s));
    }
  }
  o.detail = std::to_string(basis) + " basis and " + std::to_string(random) + " random cochains";
  return o;
}

// ---- 3: restriction to g is delta_rho ----

Outcome restriction() {
  Outcome o;
  std::size_t count = 0;
  for (const auto* name : {"a4_adjoint.json", "abelian_n3_m3_rho.json"}) {
    const auto rep = t::load_rep(name);
    const NewComplex cx(rep);
    const DirectSumSpace s = cx.space();
    for (std::size_t p = 0; p <= 1; ++p) {
      const CochainBasis b = CochainBasis::classical(s.g_dim, s.v_dim, cx.arity(), p);
      for (std::uint64_t j = 0; j < b.size(); ++j) {
        ++count;
        const Cochain a = b.unit(j);
        o.require(restrict_to_g(cx.apply(embed(a, s)), s) == delta_rho(rep.rho(), a),
                  std::string(name) + ": degree " + std::to_string(p) + " basis " + std::to_string(j));
      }
    }
  }
  o.detail = std::to_string(count) + " basis cochains";
  return o;
}

// ---- 4: [pi, alpha] = delta_ad(alpha) ----

Outcome pi_bracket_is_adjoint_coboundary() {
  Outcome o;
  std::size_t count = 0;
  for (auto [name, alg] : {std::pair{"abelian", t::abelian(3, 4)}, {"A4", t::a4()}}) {
    const Cochain pi = structure_cochain(*alg);
    const Representation ad = adjoint_rep(alg);
    for (std::size_t p = 0; p <= 2; ++p) {
      const CochainBasis b = CochainBasis::classical(alg->dim(), alg->dim(), alg->arity(), p);
      for (std::uint64_t j = 0; j < b.size(); ++j) {
        ++count;
        const Cochain a = b.unit(j);
        o.require(graded_bracket(pi, a) == delta_rho(ad, a),
                  std::string(name) + ": degree " + std::to_string(p) + " basis " + std::to_string(j));
      }
    }
  }
  o.detail = std::to_string(count) + " basis cochains, degrees 0-2";
  return o;
}

// ---- 5: coboundaries are cocycles ----

Matrix kernel_alpha(const GeneralizedRepresentation& rep, Rng& rng) {
  const DirectSumSpace s = direct_sum(rep);
  const std::size_t n = rep.algebra().arity();
  const CochainBasis c0 = CochainBasis::classical(s.g_dim, s.v_dim, n, 0);
  const SparseMatrix m = assemble_matrix([&](const Cochain& a) { return delta_rho(rep.rho(), a); }, c0,
                                         CochainBasis::classical(s.g_dim, s.v_dim, n, 1));
  const RankResult r = rank_and_kernel(m, true);
  SparseColumn combo;
  for (const auto& k : r.kernel) combo = sparse_add(combo, random_scalar(rng), k);
  return one_cochain_matrix(embed(c0.from_coordinates(combo), s), s);
}

Outcome coboundaries_are_cocycles() {
  Outcome o;
  emit(t::load_rep("a4_adjoint.json"), ComplexKind::classical, 2);
  emit(t::load_rep("a4_adjoint.json"), ComplexKind::generalized, 1);
  emit(t::load_rep("abelian_n3_m3_rho.json"), ComplexKind::generalized, 1);
  emit(t::load_rep("trace_form_theta.json"), ComplexKind::generalized, 2);
  emit(t::load_rep("sl2_adjoint.json"), ComplexKind::classical, 3);
  emit(t::load_rep("abelian_n3_m4_v2.json"), ComplexKind::generalized, 2);

  std::size_t samples = 0;
  for (const auto* name : {"a4_adjoint.json", "abelian_n3_m3_rho.json", "trace_form_theta.json"}) {
    const auto rep = t::load_rep(name);
    const NewComplex cx(rep);
    const DirectSumSpace s = cx.space();
    Rng rng(505);
    for (int k = 0; k < 10; ++k) {
      const Cochain dg = cx.apply(random_cochain(rng, CochainBasis::restricted(s, cx.arity(), 0)));
      const ResidualReport two = two_cocycle_residuals(rep, triple_from_cochain(dg, s));
      o.require(two.empty(), std::string(name) + ": d(gamma) sample " + std::to_string(k) + " fails the 2-cocycle battery");
      const ResidualReport one = one_cocycle_residual(rep, kernel_alpha(rep, rng));
      o.require(one.empty(), std::string(name) + ": 1-cocycle sample " + std::to_string(k) + " fails the 1-cocycle battery");
      samples += 2;
    }
  }
  std::size_t degrees = 0;
  for (const auto& r : g_reports)
    for (const auto& d : r.degrees) {
      ++degrees;
      o.require(d.image_in_kernel, "report " + to_string(r.kind) + ": image of d_" + std::to_string(d.degree - 1) +
                                       " not in the kernel of d_" + std::to_string(d.degree));
      o.require(d.dim_b <= d.dim_z, "report " + to_string(r.kind) + ": dim B > dim Z at degree " +
                                        std::to_string(d.degree));
    }
  o.detail = "image in kernel on " + std::to_string(degrees) + " degrees of " + std::to_string(g_reports.size()) +
             " reports; " + std::to_string(samples) + " battery samples empty";
  return o;
}

// ---- 6: batteries vs d ----

Outcome cross_oracle() {
  Outcome o;
  std::size_t alphas = 0, betas = 0, groups = 0;
  for (const auto* name : {"a4_adjoint.json", "abelian_n3_m3_rho.json", "trace_form_theta.json"}) {
    const auto rep = t::load_rep(name);
    const NewComplex cx(rep);
    const DirectSumSpace s = cx.space();
    Rng rng(606);
    for (int k = 0; k < 50; ++k) {
      // every fifth sample is a genuine cocycle so both directions are exercised
      const Matrix alpha = k % 5 == 0 ? kernel_alpha(rep, rng) : random_matrix(rng, s.v_dim, s.g_dim);
      const CrosscheckResult c = crosscheck_one_cocycle(rep, alpha);
      ++alphas;
      o.require(c.agree, std::string(name) + ": alpha " + std::to_string(k) + " battery/d disagree");
      for (const auto& d : c.discrepancies) o.require(false, std::string(name) + ": alpha " + std::to_string(k) + " at " + d);
      for (const auto& d : one_cocycle_mismatches(rep, alpha))
        o.require(false, std::string(name) + ": alpha " + std::to_string(k) + " residual != d at " + d);
    }
    for (int k = 0; k < 50; ++k) {
      const TwoCochainTriple beta =
          k % 5 == 0 ? triple_from_cochain(cx.apply(random_cochain(rng, CochainBasis::restricted(s, 3, 0))), s)
                     : random_triple(rng, s, 3);
      const CrosscheckResult c = crosscheck_two_cocycle(rep, beta);
      ++betas;
      o.require(c.agree && c.outside_support_count == 0,
                std::string(name) + ": beta " + std::to_string(k) + " battery/d disagree");
      for (const auto& d : c.discrepancies) o.require(false, std::string(name) + ": beta " + std::to_string(k) + " at " + d);
      if (k < 10) {
        const EquationComparison cmp = compare_equations(rep, beta, frozen_sign_table());
        for (const auto& g : cmp.groups) {
          ++groups;
          for (auto key : g.mismatched_keys) {
            std::string eqs;
            for (const auto& e : g.equations) eqs += e + " ";
            o.require(false, std::string(name) + ": " + eqs + "!= d at " + describe_key(KeySpace(s.dim(), 3, 2), key));
          }
        }
        for (const auto& u : cmp.uncovered)
          o.require(false, std::string(name) + ": d(beta" + std::to_string(u.component) + ") uncovered on " +
                               describe(u.pattern, 3));
      }
    }
  }
  o.detail = std::to_string(alphas) + " alphas, " + std::to_string(betas) + " betas, " + std::to_string(groups) +
             " identity groups compared under the frozen signs";
  return o;
}

// ---- 7: counts on the abelian fixture ----

Outcome abelian_counts() {
  Outcome o;
  const CohomologyReport r = cohomology_report(t::load_rep("abelian_n3_m4_v2.json"), ComplexKind::generalized, 2);
  std::ostringstream detail;
  for (const auto& d : r.degrees) {
    const std::uint64_t oracle = t::count_keys(6, 3, d.degree, 4) * 2;
    o.require(d.rank_d == 0, "degree " + std::to_string(d.degree) + ": nonzero differential");
    o.require(d.dim_c == oracle, "degree " + std::to_string(d.degree) + ": dim C " + std::to_string(d.dim_c) +
                                     " vs enumeration " + std::to_string(oracle));
    o.require(static_cast<std::uint64_t>(d.dim_h) == d.dim_c, "degree " + std::to_string(d.degree) + ": H != C");
    detail << "C" << d.degree << "=" << d.dim_c << " ";
  }
  o.require(r.degrees.size() == 3 && r.degrees[1].dim_c == 176 && r.degrees[2].dim_c == 2696,
            "expected dim C1 = 176 and dim C2 = 2696");
  o.detail = detail.str() + "(enumeration oracle agrees, all differentials zero)";
  return o;
}

// ---- 8: rank oracle ----

Outcome rank_oracle() {
  Outcome o;
  std::ostringstream detail;
  for (const auto* name : {"a4_adjoint.json", "a4_random_theta.json"}) {
    const auto rep = t::load_rep(name);
    const DirectSumSpace s = direct_sum(rep);
    const std::size_t n = rep.algebra().arity();
    std::vector<std::pair<std::string, SparseMatrix>> mats;
    mats.emplace_back("delta_rho p=0",
                      assemble_matrix([&](const Cochain& a) { return delta_rho(rep.rho(), a); },
                                      CochainBasis::classical(s.g_dim, s.v_dim, n, 0),
                                      CochainBasis::classical(s.g_dim, s.v_dim, n, 1)));
    if (check_generalized_rep(rep).is_zero()) {
      const NewComplex cx(rep);
      mats.emplace_back("d p=0", assemble_matrix([&](const Cochain& a) { return cx.apply(a); },
                                                 CochainBasis::restricted(s, n, 0), CochainBasis::restricted(s, n, 1)));
    }
    for (const auto& [label, m] : mats) {
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column_dense(j));
      const std::size_t fast = rank_and_kernel(m, false).rank;
      const std::size_t naive = t::naive_rank(cols);
      o.require(fast == naive, std::string(name) + " " + label + ": " + std::to_string(fast) + " vs " + std::to_string(naive));
      if (detail.tellp() > 0) detail << "; ";
      detail << name << " " << label << " rank " << fast;
    }
  }
  o.detail = detail.str();
  return o;
}

// ---- 9: determinism of the CLI ----

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "nlie_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t runs = 0, rejected = 0;
  std::vector<std::filesystem::path> fixtures;
  for (const auto& entry : std::filesystem::directory_iterator(NLIE_FIXTURE_DIR))
    if (entry.path().extension() == ".json") fixtures.push_back(entry.path());
  std::sort(fixtures.begin(), fixtures.end());
  for (const auto& path : fixtures) {
    const auto doc = t::load_fixture(path.filename().string());
    std::vector<std::string> commands = {"verify-algebra"};
    if (doc.rep) {
      commands.push_back("verify-rep");
      commands.push_back("verify-genrep");
      commands.push_back("cohomology --complex classical --max-degree 1");
      commands.push_back("cocycle-check --degree 1 --random 3");
      if (doc.algebra->arity() >= 3) commands.push_back("cocycle-check --degree 2 --random 2");
    }
    for (const auto& cmd : commands) {
      std::string outputs[2], errors[2];
      int codes[2];
      for (int k = 0; k < 2; ++k) {
        const auto out = dir / ("run" + std::to_string(k) + ".json");
        const auto err = dir / ("run" + std::to_string(k) + ".err");
        std::filesystem::remove(out);
        const std::string line = std::string(NLIE_TOOL) + " --quiet --out " + out.string() + " " + cmd + " " +
                                 path.string() + " 2>" + err.string();
        codes[k] = WEXITSTATUS(std::system(line.c_str()));
        outputs[k] = slurp(out);
        errors[k] = slurp(err);
      }
      ++runs;
      const std::string what = path.filename().string() + " " + cmd;
      o.require(codes[0] == codes[1], what + ": exit codes differ");
      o.require(outputs[0] == outputs[1], what + ": reports differ");
      o.require(errors[0] == errors[1], what + ": diagnostics differ");
      if (codes[0] == 2) {
        // rejected input: no report, only the diagnostic
        ++rejected;
        o.require(!errors[0].empty(), what + ": input error without a diagnostic");
      } else {
        o.require(!outputs[0].empty(), what + ": no report written");
      }
    }
  }
  o.detail = std::to_string(runs) + " command/fixture pairs run twice, byte-identical (" + std::to_string(rejected) +
             " rejected as input errors)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"fundamental identity <=> [pi,pi]=0", fi_vs_pi_squared},
      {"d o d = 0", d_squared},
      {"restriction of d to g equals delta_rho", restriction},
      {"[pi, alpha] = adjoint coboundary", pi_bracket_is_adjoint_coboundary},
      {"coboundaries are cocycles", coboundaries_are_cocycles},
      {"cocycle batteries <=> d = 0, frozen signs", cross_oracle},
      {"abelian counts and zero differential", abelian_counts},
      {"rank oracle agreement", rank_oracle},
      {"CLI determinism", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name << ": " << o.detail
              << " [" << std::fixed << std::setprecision(1) << secs << "s]\n";
    for (const auto& l : o.log) std::cout << "        " << l << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
