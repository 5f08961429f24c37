#pragma once

#include <cstdint>
#include <map>

#include "nlie/algebra.hpp"
#include "nlie/basis.hpp"
#include "nlie/scalar.hpp"

namespace nlie {

/// Degree-p multilinear map on (Lambda^{n-1} W)^{(x)p} (x) W with values in a
/// space of dimension value_dim. Blocks are skew internally; the tail slot is
/// independent of the last block. Stored sparsely by key index.
class Cochain {
 public:
  Cochain(std::size_t space_dim, std::size_t value_dim, std::size_t arity, std::size_t degree);

  std::size_t space_dim() const { return keys_.space_dim(); }
  std::size_t value_dim() const { return value_dim_; }
  std::size_t arity() const { return keys_.arity(); }
  std::size_t degree() const { return keys_.degree(); }
  const KeySpace& keys() const { return keys_; }
  const std::map<std::uint64_t, Vector>& table() const { return table_; }

  const Vector* find(std::uint64_t key) const;
  /// Value at a canonical key (zero if absent).
  Vector value(const CochainKey& key) const;
  /// Value on arbitrary block tuples: each block is sorted with its sign.
  Vector value_on(std::span<const SmallTuple> blocks, std::size_t tail) const;

  void set(std::uint64_t key, Vector value);
  void set(const CochainKey& key, Vector value) { set(keys_.index(key), std::move(value)); }
  void add(std::uint64_t key, const Scalar& coeff, const Vector& value);

  bool is_zero() const { return table_.empty(); }
  bool same_shape(const Cochain& other) const;

  friend bool operator==(const Cochain& a, const Cochain& b);
  friend Cochain operator+(Cochain a, const Cochain& b);
  friend Cochain operator-(Cochain a, const Cochain& b);
  friend Cochain operator*(const Scalar& s, Cochain a);

 private:
  KeySpace keys_;
  std::size_t value_dim_;
  std::map<std::uint64_t, Vector> table_;
};

/// alpha o beta, the shuffle composition of cochains (alpha outer).
/// Requires equal spaces and beta's values to live in that space.
Cochain compose(const Cochain& alpha, const Cochain& beta);

/// [alpha, beta] = (-1)^{pq} alpha o beta - beta o alpha.
Cochain graded_bracket(const Cochain& alpha, const Cochain& beta);

/// The bracket of `algebra` as a degree-1 cochain on g with values in g.
Cochain structure_cochain(const NLieAlgebra& algebra);

}  // namespace nlie
