#pragma once

#include <map>
#include <span>
#include <vector>

#include "nlie/basis.hpp"
#include "nlie/scalar.hpp"

namespace nlie {

enum class Space { g, v, sum };

/// Coefficient vector tagged with the space it lives in.
struct SpaceVector {
  Space space = Space::g;
  Vector coeffs;
};

/// Finite-dimensional n-Lie algebra given by structure constants on
/// increasing n-tuples of basis indices. The skew extension is computed on
/// the fly and never stored.
class NLieAlgebra {
 public:
  /// Abelian algebra (zero bracket).
  NLieAlgebra(std::size_t arity, std::size_t dim);

  /// `args` strictly increasing, in range; `value` of length dim().
  void set_bracket(std::span<const std::size_t> args, Vector value);
  void set_bracket(std::initializer_list<std::size_t> args, Vector value);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  const std::map<WedgeWord, Vector>& table() const { return table_; }

  /// Bracket of basis vectors given in any order.
  Vector bracket_basis(const SmallTuple& args) const;
  /// Left multiplication by the fundamental object `x` (n-1 indices) on e_y.
  Vector act(const SmallTuple& x, std::size_t y) const;
  Vector act(const SmallTuple& x, const Vector& y) const;

  friend bool operator==(const NLieAlgebra&, const NLieAlgebra&) = default;

 private:
  std::size_t arity_;
  std::size_t dim_;
  std::map<WedgeWord, Vector> table_;
};

/// Multilinear skew extension on arbitrary vectors in g.
Vector bracket_eval(const NLieAlgebra& algebra, std::span<const SpaceVector> args);
Vector bracket_eval(const NLieAlgebra& algebra, std::span<const Vector> args);

struct FIViolation {
  WedgeWord x;  // n-1 indices
  WedgeWord y;  // n indices
  Vector lhs;
  Vector rhs;
};

/// Exhaustive Filippov-identity check over increasing basis tuples. Empty
/// result means the bracket is an n-Lie bracket.
std::vector<FIViolation> check_fundamental_identity(const NLieAlgebra& algebra);

/// [X, Y]_F = sum_i (y_1, ..., X.y_i, ..., y_{n-1}) extended bilinearly.
WedgeCombination fundamental_bracket(const NLieAlgebra& algebra, const WedgeCombination& x,
                                     const WedgeCombination& y);

/// Calls f(indices, coefficient) for every nonzero basis term of the tensor
/// product of `args`.
template <class F>
void expand_multilinear(std::span<const Vector* const> args, F&& f) {
  SmallTuple idx;
  for (std::size_t r = 0; r < args.size(); ++r) idx.push_back(0);
  auto rec = [&](auto&& self, std::size_t pos, const Scalar& coeff) -> void {
    if (pos == args.size()) {
      f(idx, coeff);
      return;
    }
    const Vector& v = *args[pos];
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (sgn(v[t]) == 0) continue;
      idx.set(pos, t);
      self(self, pos + 1, coeff * v[t]);
    }
  };
  rec(rec, 0, Scalar(1));
}

}  // namespace nlie
