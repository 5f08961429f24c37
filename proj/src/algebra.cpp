#include "nlie/algebra.hpp"

#include <string>

namespace nlie {

NLieAlgebra::NLieAlgebra(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim) {
  if (arity < 2) throw InputError("arity must be at least 2");
  if (arity > kMaxWordLength + 1) throw InputError("arity exceeds supported maximum");
  if (dim == 0) throw InputError("algebra dimension must be positive");
}

void NLieAlgebra::set_bracket(std::span<const std::size_t> args, Vector value) {
  if (args.size() != arity_) throw InputError("bracket key must have exactly n indices");
  for (auto a : args) {
    if (a >= dim_) throw InputError("bracket key index " + std::to_string(a) + " out of range");
  }
  auto word = WedgeWord::from_increasing(args);
  if (value.size() != dim_) throw InputError("bracket value has wrong dimension");
  if (is_zero(value)) {
    table_.erase(word);
  } else {
    table_[word] = std::move(value);
  }
}

void NLieAlgebra::set_bracket(std::initializer_list<std::size_t> args, Vector value) {
  set_bracket(std::span<const std::size_t>(args.begin(), args.size()), std::move(value));
}

Vector NLieAlgebra::bracket_basis(const SmallTuple& args) const {
  auto sw = normalize_tuple(args);
  if (sw.sign == 0) return Vector(dim_);
  auto it = table_.find(sw.word);
  if (it == table_.end()) return Vector(dim_);
  return sw.sign > 0 ? it->second : -it->second;
}

Vector NLieAlgebra::act(const SmallTuple& x, std::size_t y) const {
  SmallTuple args = x;
  args.push_back(y);
  return bracket_basis(args);
}

Vector NLieAlgebra::act(const SmallTuple& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t t = 0; t < y.size(); ++t) {
    if (sgn(y[t]) != 0) add_scaled(out, y[t], act(x, t));
  }
  return out;
}

Vector bracket_eval(const NLieAlgebra& algebra, std::span<const SpaceVector> args) {
  std::vector<Vector> plain;
  plain.reserve(args.size());
  for (const auto& a : args) {
    if (a.space != Space::g) throw InputError("bracket arguments must lie in g");
    plain.push_back(a.coeffs);
  }
  return bracket_eval(algebra, std::span<const Vector>(plain));
}

Vector bracket_eval(const NLieAlgebra& algebra, std::span<const Vector> args) {
  if (args.size() != algebra.arity()) throw InputError("bracket needs exactly n arguments");
  std::vector<const Vector*> ptrs;
  for (const auto& a : args) {
    if (a.size() != algebra.dim()) throw InputError("bracket argument has wrong dimension");
    ptrs.push_back(&a);
  }
  Vector out(algebra.dim());
  expand_multilinear(std::span<const Vector* const>(ptrs), [&](const SmallTuple& idx, const Scalar& c) {
    auto sw = normalize_tuple(idx);
    if (sw.sign == 0) return;
    auto it = algebra.table().find(sw.word);
    if (it != algebra.table().end()) add_scaled(out, sw.sign * c, it->second);
  });
  return out;
}

std::vector<FIViolation> check_fundamental_identity(const NLieAlgebra& algebra) {
  const std::size_t n = algebra.arity();
  const std::size_t m = algebra.dim();
  std::vector<FIViolation> out;
  const auto xs = shared_word_basis(m, n - 1);
  const auto ys = shared_word_basis(m, n);
  for (const auto& x : xs->words()) {
    for (const auto& y : ys->words()) {
      Vector lhs = algebra.act(x.indices(), algebra.bracket_basis(y.indices()));
      Vector rhs(m);
      for (std::size_t i = 0; i < n; ++i) {
        const Vector xy = algebra.act(x.indices(), y[i]);
        for (std::size_t t = 0; t < m; ++t) {
          if (sgn(xy[t]) == 0) continue;
          SmallTuple args = y.indices();
          args.set(i, t);
          add_scaled(rhs, xy[t], algebra.bracket_basis(args));
        }
      }
      if (lhs != rhs) out.push_back({x, y, std::move(lhs), std::move(rhs)});
    }
  }
  return out;
}

WedgeCombination fundamental_bracket(const NLieAlgebra& algebra, const WedgeCombination& x,
                                     const WedgeCombination& y) {
  WedgeCombination out;
  for (const auto& [xw, xc] : x) {
    if (xw.size() + 1 != algebra.arity()) throw InputError("fundamental object has wrong size");
    for (const auto& [yw, yc] : y) {
      if (yw.size() + 1 != algebra.arity()) throw InputError("fundamental object has wrong size");
      const Scalar c = xc * yc;
      for (std::size_t i = 0; i < yw.size(); ++i) {
        const Vector xy = algebra.act(xw.indices(), yw[i]);
        for (const auto& [w, a] : replace_slot(yw, i + 1, xy)) add_term(out, w, c * a);
      }
    }
  }
  return out;
}

}  // namespace nlie
