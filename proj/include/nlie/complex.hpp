#pragma once

#include <memory>

#include "nlie/cochain.hpp"
#include "nlie/representation.hpp"

namespace nlie {

/// Classical coboundary of a V-valued cochain on g (space dim m, value dim d).
Cochain delta_rho(const Representation& rep, const Cochain& alpha);

/// C^p(g, V) -> cochains on W = g (+) V with values in W (V part only),
/// supported on pure-g keys.
Cochain embed(const Cochain& alpha, const DirectSumSpace& space);

/// Keeps the pure-g keys of a cochain on W and projects values onto V.
Cochain restrict_to_g(const Cochain& alpha, const DirectSumSpace& space);

/// True iff every key has a g argument or the value is zero.
bool vanishes_on_all_v(const Cochain& alpha, const DirectSumSpace& space);
/// True iff every stored value lies in the V summand.
bool is_v_valued(const Cochain& alpha, const DirectSumSpace& space);
bool is_restricted(const Cochain& alpha, const DirectSumSpace& space);

/// True iff every block and the tail of `key` lie in V.
bool all_v_key(const KeySpace& keys, std::uint64_t key, const DirectSumSpace& space);

/// d(alpha) = [mu, alpha] with the input and output checked to lie in the
/// restricted subcomplex. Does not check [mu, mu] = 0.
Cochain new_differential(const MuElement& mu, const Cochain& alpha);

/// The new complex of a generalized representation. Construction refuses
/// pairs with [mu, mu] != 0.
class NewComplex {
 public:
  explicit NewComplex(const GeneralizedRepresentation& rep);

  const MuElement& mu() const { return mu_; }
  const DirectSumSpace& space() const { return mu_.space; }
  std::size_t arity() const { return mu_.total.arity(); }

  /// Restricted cochain of degree p with the given table left empty.
  Cochain zero(std::size_t degree) const;
  Cochain apply(const Cochain& alpha) const { return new_differential(mu_, alpha); }

 private:
  MuElement mu_;
};

}  // namespace nlie
