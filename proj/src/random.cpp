#include "nlie/random.hpp"

namespace nlie {

Scalar random_scalar(Rng& rng) {
  const auto num = static_cast<long>(rng() % 7) - 3;
  const auto den = static_cast<long>(1 + rng() % 3);
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Vector random_vector(Rng& rng, std::size_t dim) {
  Vector v(dim);
  for (auto& x : v) x = random_scalar(rng);
  return v;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng);
  }
  return m;
}

Cochain random_cochain(Rng& rng, const CochainBasis& basis) {
  SparseColumn x;
  for (std::uint64_t j = 0; j < basis.size(); ++j) {
    Scalar s = random_scalar(rng);
    if (sgn(s) != 0) x.emplace_back(j, std::move(s));
  }
  return basis.from_coordinates(x);
}

}  // namespace nlie
