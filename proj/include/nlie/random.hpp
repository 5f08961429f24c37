#pragma once

// Deterministic sampling. Every random object is drawn from a single
// std::mt19937_64 stream seeded by the caller; entries are consumed in
// basis order. A random scalar is (r1 % 7 - 3) / (1 + r2 % 3) for two
// consecutive draws r1, r2, so roughly one entry in seven is zero.

#include <random>

#include "nlie/cohomology.hpp"
#include "nlie/scalar.hpp"

namespace nlie {

using Rng = std::mt19937_64;

Scalar random_scalar(Rng& rng);
Vector random_vector(Rng& rng, std::size_t dim);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
/// Random element of the span of `basis` (every coordinate drawn).
Cochain random_cochain(Rng& rng, const CochainBasis& basis);

}  // namespace nlie
