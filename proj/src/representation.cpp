#include "nlie/representation.hpp"

#include <string>

namespace nlie {

Representation::Representation(std::shared_ptr<const NLieAlgebra> algebra, std::size_t dim_v)
    : algebra_(std::move(algebra)), dim_v_(dim_v) {
  if (!algebra_) throw InputError("representation needs an algebra");
  if (dim_v == 0) throw InputError("representation space must have positive dimension");
}

void Representation::set_rho(std::span<const std::size_t> word, Matrix m) {
  if (word.size() + 1 != algebra_->arity()) throw InputError("rho key must have n-1 indices");
  for (auto a : word) {
    if (a >= algebra_->dim()) throw InputError("rho key index " + std::to_string(a) + " out of range");
  }
  auto w = WedgeWord::from_increasing(word);
  if (m.rows() != dim_v_ || m.cols() != dim_v_) throw InputError("rho matrix must be dim_v x dim_v");
  if (m.is_zero()) {
    table_.erase(w);
  } else {
    table_[w] = std::move(m);
  }
}

void Representation::set_rho(std::initializer_list<std::size_t> word, Matrix m) {
  set_rho(std::span<const std::size_t>(word.begin(), word.size()), std::move(m));
}

Matrix Representation::rho(const SmallTuple& args) const {
  auto sw = normalize_tuple(args);
  if (sw.sign == 0) return Matrix(dim_v_, dim_v_);
  auto it = table_.find(sw.word);
  if (it == table_.end()) return Matrix(dim_v_, dim_v_);
  return sw.sign > 0 ? it->second : Scalar(-1) * it->second;
}

Vector Representation::act(const SmallTuple& args, const Vector& v) const {
  auto sw = normalize_tuple(args);
  if (sw.sign == 0) return Vector(dim_v_);
  auto it = table_.find(sw.word);
  if (it == table_.end()) return Vector(dim_v_);
  Vector out = it->second.apply(v);
  return sw.sign > 0 ? out : -out;
}

Representation adjoint_rep(std::shared_ptr<const NLieAlgebra> algebra) {
  if (!algebra) throw InputError("adjoint_rep needs an algebra");
  const auto violations = check_fundamental_identity(*algebra);
  if (!violations.empty()) {
    const auto& v = violations.front();
    std::string msg = "adjoint representation refused: fundamental identity fails at x=(";
    for (auto i : v.x) msg += std::to_string(i) + ",";
    msg.back() = ')';
    msg += " y=(";
    for (auto i : v.y) msg += std::to_string(i) + ",";
    msg.back() = ')';
    throw InputError(msg);
  }
  const std::size_t m = algebra->dim();
  Representation rep(algebra, m);
  for (const auto& w : shared_word_basis(m, algebra->arity() - 1)->words()) {
    Matrix ad(m, m);
    for (std::size_t y = 0; y < m; ++y) {
      const Vector col = algebra->act(w.indices(), y);
      for (std::size_t r = 0; r < m; ++r) ad(r, y) = col[r];
    }
    rep.set_rho(w.to_vector(), std::move(ad));
  }
  return rep;
}

namespace {

// rho(word with slot `slot` replaced by the vector v)
Matrix rho_with_slot(const Representation& rep, const SmallTuple& word, std::size_t slot, const Vector& v) {
  Matrix out(rep.dim_v(), rep.dim_v());
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (sgn(v[t]) == 0) continue;
    SmallTuple args = word;
    args.set(slot, t);
    out = out + v[t] * rep.rho(args);
  }
  return out;
}

}  // namespace

std::vector<RepViolation> check_representation(const Representation& rep) {
  const NLieAlgebra& a = rep.algebra();
  const std::size_t n = a.arity();
  const std::size_t m = a.dim();
  std::vector<RepViolation> out;

  const auto words = shared_word_basis(m, n - 1);
  for (const auto& x : words->words()) {
    const Matrix rx = rep.rho(x.indices());
    for (const auto& y : words->words()) {
      const Matrix ry = rep.rho(y.indices());
      Matrix lhs = rx * ry - ry * rx;
      Matrix rhs(rep.dim_v(), rep.dim_v());
      for (std::size_t i = 0; i < n - 1; ++i) {
        rhs = rhs + rho_with_slot(rep, y.indices(), i, a.act(x.indices(), y[i]));
      }
      Matrix residual = lhs - rhs;
      if (!residual.is_zero()) out.push_back({RepIdentity::commutator, x.indices(), y.indices(), std::move(residual)});
    }
  }

  const auto shorts = shared_word_basis(m, n - 2);
  const auto longs = shared_word_basis(m, n);
  for (const auto& x : shorts->words()) {
    for (const auto& y : longs->words()) {
      SmallTuple xs = x.indices();
      xs.push_back(0);
      Matrix lhs = rho_with_slot(rep, xs, n - 2, a.bracket_basis(y.indices()));
      Matrix rhs(rep.dim_v(), rep.dim_v());
      for (std::size_t i = 0; i < n; ++i) {
        SmallTuple xi = x.indices();
        xi.push_back(y[i]);
        const Matrix term = rep.rho(y.indices().without(i)) * rep.rho(xi);
        rhs = rhs + Scalar(parity_sign(n - (i + 1))) * term;
      }
      Matrix residual = lhs - rhs;
      if (!residual.is_zero()) out.push_back({RepIdentity::bracket_in_last_slot, x.indices(), y.indices(), std::move(residual)});
    }
  }
  return out;
}

GeneralizedRepresentation::GeneralizedRepresentation(Representation rho) : rho_(std::move(rho)) {}

void GeneralizedRepresentation::set_theta(std::size_t g, std::span<const std::size_t> vargs, Vector value) {
  const std::size_t n = algebra().arity();
  if (g >= algebra().dim()) throw InputError("theta g index " + std::to_string(g) + " out of range");
  if (vargs.size() + 1 != n) throw InputError("theta key must have n-1 V indices");
  for (auto v : vargs) {
    if (v >= dim_v()) throw InputError("theta V index " + std::to_string(v) + " out of range");
  }
  auto w = WedgeWord::from_increasing(vargs);
  if (value.size() != dim_v()) throw InputError("theta value has wrong dimension");
  if (is_zero(value)) {
    theta_.erase({g, w});
  } else {
    theta_[{g, w}] = std::move(value);
  }
}

void GeneralizedRepresentation::set_theta(std::size_t g, std::initializer_list<std::size_t> vargs, Vector value) {
  set_theta(g, std::span<const std::size_t>(vargs.begin(), vargs.size()), std::move(value));
}

Vector GeneralizedRepresentation::theta_basis(std::size_t g, const SmallTuple& vargs) const {
  auto sw = normalize_tuple(vargs);
  if (sw.sign == 0) return Vector(dim_v());
  auto it = theta_.find({g, sw.word});
  if (it == theta_.end()) return Vector(dim_v());
  return sw.sign > 0 ? it->second : -it->second;
}

DirectSumSpace direct_sum(const GeneralizedRepresentation& rep) { return {rep.algebra().dim(), rep.dim_v()}; }

std::size_t v_count(const DirectSumSpace& space, const WedgeWord& block, std::size_t tail) {
  std::size_t c = space.in_g(tail) ? 0 : 1;
  for (auto w : block) c += space.in_g(w) ? 0 : 1;
  return c;
}

namespace {

// Tabulates a skew n-ary map on W given its value on an argument list.
template <class F>
Cochain tabulate_degree_one(const DirectSumSpace& space, std::size_t arity, F&& f) {
  const std::size_t w_dim = space.dim();
  Cochain c(w_dim, w_dim, arity, 1);
  const auto& words = c.keys().blocks();
  for (std::size_t b = 0; b < words.size(); ++b) {
    for (std::size_t z = 0; z < w_dim; ++z) {
      if (words.word(b).contains(z)) continue;
      SmallTuple args = words.word(b).indices();
      args.push_back(z);
      Vector v = f(args);
      if (!is_zero(v)) c.set(c.keys().encode(std::span<const std::size_t>(&b, 1), z), std::move(v));
    }
  }
  return c;
}

Vector embed_g(const DirectSumSpace& space, const Vector& x) {
  Vector out(space.dim());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
  return out;
}

Vector embed_v(const DirectSumSpace& space, const Vector& v) {
  Vector out(space.dim());
  for (std::size_t j = 0; j < v.size(); ++j) out[space.from_v(j)] = v[j];
  return out;
}

}  // namespace

Cochain build_pi(const NLieAlgebra& algebra, const DirectSumSpace& space) {
  return tabulate_degree_one(space, algebra.arity(), [&](const SmallTuple& args) {
    for (auto a : args) {
      if (!space.in_g(a)) return Vector(space.dim());
    }
    return embed_g(space, algebra.bracket_basis(args));
  });
}

Cochain build_rho_bar(const Representation& rep, const DirectSumSpace& space) {
  const std::size_t n = rep.algebra().arity();
  return tabulate_degree_one(space, n, [&](const SmallTuple& args) {
    std::size_t v_pos = n;
    SmallTuple g_args;
    for (std::size_t i = 0; i < n; ++i) {
      if (space.in_g(args[i])) {
        g_args.push_back(args[i]);
      } else if (v_pos == n) {
        v_pos = i;
      } else {
        return Vector(space.dim());
      }
    }
    if (v_pos == n) return Vector(space.dim());
    const Vector v = unit_vector(rep.dim_v(), args[v_pos] - space.g_dim);
    // (-1)^{n-i} with 1-based i = v_pos + 1
    return Scalar(parity_sign(n - (v_pos + 1))) * embed_v(space, rep.act(g_args, v));
  });
}

Cochain build_theta_bar(const GeneralizedRepresentation& rep, const DirectSumSpace& space) {
  const std::size_t n = rep.algebra().arity();
  return tabulate_degree_one(space, n, [&](const SmallTuple& args) {
    std::size_t g_pos = n;
    SmallTuple v_args;
    for (std::size_t i = 0; i < n; ++i) {
      if (!space.in_g(args[i])) {
        v_args.push_back(args[i] - space.g_dim);
      } else if (g_pos == n) {
        g_pos = i;
      } else {
        return Vector(space.dim());
      }
    }
    if (g_pos == n) return Vector(space.dim());
    return Scalar(parity_sign(n - (g_pos + 1))) * embed_v(space, rep.theta_basis(args[g_pos], v_args));
  });
}

MuElement build_mu(const GeneralizedRepresentation& rep) {
  const DirectSumSpace space = direct_sum(rep);
  Cochain pi = build_pi(rep.algebra(), space);
  Cochain rho_bar = build_rho_bar(rep.rho(), space);
  Cochain theta_bar = build_theta_bar(rep, space);
  Cochain total = pi + rho_bar + theta_bar;
  return {space, std::move(pi), std::move(rho_bar), std::move(theta_bar), std::move(total)};
}

PatternParts split_by_pattern(const Cochain& c, const DirectSumSpace& space) {
  if (c.degree() != 1 || c.space_dim() != space.dim()) throw InputError("split_by_pattern needs a degree-1 cochain on W");
  const std::size_t n = c.arity();
  PatternParts parts{Cochain(c.space_dim(), c.value_dim(), n, 1), Cochain(c.space_dim(), c.value_dim(), n, 1),
                     Cochain(c.space_dim(), c.value_dim(), n, 1), Cochain(c.space_dim(), c.value_dim(), n, 1)};
  std::size_t block = 0;
  std::size_t tail = 0;
  for (const auto& [key, value] : c.table()) {
    c.keys().decode(key, std::span<std::size_t>(&block, 1), tail);
    const std::size_t vc = v_count(space, c.keys().blocks().word(block), tail);
    if (vc == 0) {
      parts.all_g.set(key, value);
    } else if (vc == 1) {
      parts.one_v.set(key, value);
    } else if (vc == n - 1) {
      parts.one_g.set(key, value);
    } else {
      parts.other.set(key, value);
    }
  }
  return parts;
}

Cochain check_generalized_rep(const GeneralizedRepresentation& rep) {
  const MuElement mu = build_mu(rep);
  return graded_bracket(mu.total, mu.total);
}

}  // namespace nlie
