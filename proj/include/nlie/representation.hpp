#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/cochain.hpp"

namespace nlie {

/// rho : Lambda^{n-1} g -> gl(V), stored on increasing words only.
class Representation {
 public:
  Representation(std::shared_ptr<const NLieAlgebra> algebra, std::size_t dim_v);

  void set_rho(std::span<const std::size_t> word, Matrix m);
  void set_rho(std::initializer_list<std::size_t> word, Matrix m);

  const NLieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const NLieAlgebra>& algebra_ptr() const { return algebra_; }
  std::size_t dim_v() const { return dim_v_; }
  const std::map<WedgeWord, Matrix>& table() const { return table_; }

  /// rho on basis vectors in any order (zero on repeats).
  Matrix rho(const SmallTuple& args) const;
  /// rho(args)(v)
  Vector act(const SmallTuple& args, const Vector& v) const;

 private:
  std::shared_ptr<const NLieAlgebra> algebra_;
  std::size_t dim_v_;
  std::map<WedgeWord, Matrix> table_;
};

/// ad_X y = [x_1, ..., x_{n-1}, y]. Refuses algebras violating the
/// fundamental identity.
Representation adjoint_rep(std::shared_ptr<const NLieAlgebra> algebra);

enum class RepIdentity {
  commutator,            // [rho(X), rho(Y)] = rho([X, Y]_F)
  bracket_in_last_slot,  // rho(x, [y_1..y_n]) = sum_i (-1)^{n-i} rho(y..^y_i..) rho(x, y_i)
};

struct RepViolation {
  RepIdentity identity = RepIdentity::commutator;
  SmallTuple first;   // X (n-1 indices) or x (n-2 indices)
  SmallTuple second;  // Y (n-1 indices) or y (n indices)
  Matrix residual;    // lhs - rhs
};

/// Exhaustive check of both representation identities on basis tuples.
std::vector<RepViolation> check_representation(const Representation& rep);

/// (V; rho, theta) with theta : g -> Hom(Lambda^{n-1} V, V), stored on
/// (g index, increasing V-word).
class GeneralizedRepresentation {
 public:
  explicit GeneralizedRepresentation(Representation rho);

  void set_theta(std::size_t g, std::span<const std::size_t> vargs, Vector value);
  void set_theta(std::size_t g, std::initializer_list<std::size_t> vargs, Vector value);

  const Representation& rho() const { return rho_; }
  const NLieAlgebra& algebra() const { return rho_.algebra(); }
  std::size_t dim_v() const { return rho_.dim_v(); }
  const std::map<std::pair<std::size_t, WedgeWord>, Vector>& theta() const { return theta_; }

  /// theta(e_g)(v_1 ^ ... ^ v_{n-1}) for basis V-indices in any order.
  Vector theta_basis(std::size_t g, const SmallTuple& vargs) const;

 private:
  Representation rho_;
  std::map<std::pair<std::size_t, WedgeWord>, Vector> theta_;
};

/// g (+) V with g occupying indices [0, m) and V occupying [m, m + d).
struct DirectSumSpace {
  std::size_t g_dim = 0;
  std::size_t v_dim = 0;

  std::size_t dim() const { return g_dim + v_dim; }
  bool in_g(std::size_t w) const { return w < g_dim; }
  std::size_t from_v(std::size_t j) const { return g_dim + j; }

  friend bool operator==(const DirectSumSpace&, const DirectSumSpace&) = default;
};

DirectSumSpace direct_sum(const GeneralizedRepresentation& rep);

/// Degree-1 element pi + rho_bar + theta_bar on W = g (+) V and its parts.
struct MuElement {
  DirectSumSpace space;
  Cochain pi;
  Cochain rho_bar;
  Cochain theta_bar;
  Cochain total;
};

Cochain build_pi(const NLieAlgebra& algebra, const DirectSumSpace& space);
Cochain build_rho_bar(const Representation& rep, const DirectSumSpace& space);
Cochain build_theta_bar(const GeneralizedRepresentation& rep, const DirectSumSpace& space);
MuElement build_mu(const GeneralizedRepresentation& rep);

/// Number of V-arguments among the n arguments of a degree-1 key.
std::size_t v_count(const DirectSumSpace& space, const WedgeWord& block, std::size_t tail);

/// Splits a degree-1 cochain on W by argument pattern: all-g, exactly one
/// V argument, exactly one g argument, everything else. For n = 2 the middle
/// two classes coincide and land in `one_v`.
struct PatternParts {
  Cochain all_g;
  Cochain one_v;
  Cochain one_g;
  Cochain other;
};
PatternParts split_by_pattern(const Cochain& c, const DirectSumSpace& space);

/// [mu, mu]; zero iff (rho, theta) is a generalized representation.
Cochain check_generalized_rep(const GeneralizedRepresentation& rep);

}  // namespace nlie
