#pragma once

// Shared instances and independent oracles for the test suite. Nothing here
// calls into the library's enumeration or elimination code.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nlie/cli.hpp"
#include "nlie/cocycle.hpp"
#include "nlie/random.hpp"
#include "nlie/representation.hpp"

namespace nlie::testing {

std::string fixture_path(const std::string& name);
cli::InputDocument load_fixture(const std::string& name);
GeneralizedRepresentation load_rep(const std::string& name);

std::shared_ptr<NLieAlgebra> abelian(std::size_t arity, std::size_t dim);
/// [e1,e2,e3] = e4 and cyclic, 0-based.
std::shared_ptr<NLieAlgebra> a4();
/// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
std::shared_ptr<NLieAlgebra> sl2();
/// [x,y] = z.
std::shared_ptr<NLieAlgebra> heisenberg();
/// [e0,e1] = e1, [e0,e2] = e2 + e1 (non-nilpotent solvable).
std::shared_ptr<NLieAlgebra> solvable3();
/// The Jacobi-failing bracket [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e2.
std::shared_ptr<NLieAlgebra> bad_jacobi();

Matrix inverse(const Matrix& m);
/// Product of random unit lower and unit upper triangular matrices.
Matrix random_invertible(Rng& rng, std::size_t dim);
/// Bracket transported along e_i -> P e_i: [x..]' = P^{-1} [P x ..].
std::shared_ptr<NLieAlgebra> change_basis(const NLieAlgebra& a, const Matrix& p);
/// rho'(X) = Q rho(X) Q^{-1}.
Representation conjugate(const Representation& r, const Matrix& q);
/// Copy with every bracket entry kept and one coefficient shifted.
std::shared_ptr<NLieAlgebra> perturb(const NLieAlgebra& a, std::size_t word, std::size_t coord, const Scalar& by);
Representation perturb(const Representation& r, std::size_t word, std::size_t row, std::size_t col, const Scalar& by);

/// Plain Jacobi identity for n = 2, directly on structure constants.
bool jacobi_holds(const NLieAlgebra& a);

/// Dense Gauss-Jordan over Q on the given columns.
std::size_t naive_rank(std::vector<Vector> columns);

/// C(n, k) by the multiplicative formula.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Counts degree-p keys over a space of dim w_dim by walking bitmasks; if
/// v_from < w_dim, keys whose every index is >= v_from are skipped.
std::uint64_t count_keys(std::size_t w_dim, std::size_t arity, std::size_t degree, std::size_t v_from);

/// All degree-p keys from the bitmask walk, sorted.
std::vector<CochainKey> brute_keys(std::size_t w_dim, std::size_t arity, std::size_t degree);

/// Naive parity by counting inversions (0 on repeats).
int inversion_sign(const std::vector<std::size_t>& t);

}  // namespace nlie::testing
