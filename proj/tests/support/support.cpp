#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#ifndef NLIE_FIXTURE_DIR
#error "NLIE_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace nlie::testing {

std::string fixture_path(const std::string& name) { return std::string(NLIE_FIXTURE_DIR) + "/" + name; }

cli::InputDocument load_fixture(const std::string& name) { return cli::parse_input_file(fixture_path(name)); }

GeneralizedRepresentation load_rep(const std::string& name) {
  auto doc = load_fixture(name);
  return *doc.rep;
}

std::shared_ptr<NLieAlgebra> abelian(std::size_t arity, std::size_t dim) {
  return std::make_shared<NLieAlgebra>(arity, dim);
}

namespace {

Vector e(std::size_t dim, std::size_t i, int s = 1) {
  Vector v = zero_vector(dim);
  v[i] = s;
  return v;
}

}  // namespace

std::shared_ptr<NLieAlgebra> a4() {
  auto a = std::make_shared<NLieAlgebra>(3, 4);
  a->set_bracket({0, 1, 2}, e(4, 3));
  a->set_bracket({0, 1, 3}, e(4, 2, -1));
  a->set_bracket({0, 2, 3}, e(4, 1));
  a->set_bracket({1, 2, 3}, e(4, 0, -1));
  return a;
}

std::shared_ptr<NLieAlgebra> sl2() {
  auto a = std::make_shared<NLieAlgebra>(2, 3);
  a->set_bracket({0, 1}, e(3, 1, 2));
  a->set_bracket({0, 2}, e(3, 2, -2));
  a->set_bracket({1, 2}, e(3, 0));
  return a;
}

std::shared_ptr<NLieAlgebra> heisenberg() {
  auto a = std::make_shared<NLieAlgebra>(2, 3);
  a->set_bracket({0, 1}, e(3, 2));
  return a;
}

std::shared_ptr<NLieAlgebra> solvable3() {
  auto a = std::make_shared<NLieAlgebra>(2, 3);
  a->set_bracket({0, 1}, e(3, 1));
  a->set_bracket({0, 2}, e(3, 2) + e(3, 1));
  return a;
}

std::shared_ptr<NLieAlgebra> bad_jacobi() {
  auto a = std::make_shared<NLieAlgebra>(2, 3);
  a->set_bracket({0, 1}, e(3, 2));
  a->set_bracket({0, 2}, e(3, 0));
  a->set_bracket({1, 2}, e(3, 1));
  return a;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a(piv, c)) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const Scalar s = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= s;
      inv(c, j) /= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      const Scalar f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix random_invertible(Rng& rng, std::size_t dim) {
  Matrix lower = Matrix::identity(dim);
  Matrix upper = Matrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_scalar(rng);
      upper(j, i) = random_scalar(rng);
    }
  }
  return lower * upper;
}

namespace {

Vector column(const Matrix& m, std::size_t j) {
  Vector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

}  // namespace

std::shared_ptr<NLieAlgebra> change_basis(const NLieAlgebra& a, const Matrix& p) {
  const Matrix pinv = inverse(p);
  const std::size_t n = a.arity();
  auto out = std::make_shared<NLieAlgebra>(n, a.dim());
  for (const auto& w : shared_word_basis(a.dim(), n)->words()) {
    std::vector<Vector> args;
    for (auto i : w) args.push_back(column(p, i));
    Vector v = pinv.apply(bracket_eval(a, std::span<const Vector>(args)));
    if (!is_zero(v)) out->set_bracket(std::span<const std::size_t>(w.to_vector()), std::move(v));
  }
  return out;
}

Representation conjugate(const Representation& r, const Matrix& q) {
  const Matrix qinv = inverse(q);
  Representation out(r.algebra_ptr(), r.dim_v());
  for (const auto& [w, m] : r.table()) out.set_rho(std::span<const std::size_t>(w.to_vector()), q * m * qinv);
  return out;
}

std::shared_ptr<NLieAlgebra> perturb(const NLieAlgebra& a, std::size_t word, std::size_t coord, const Scalar& by) {
  auto out = std::make_shared<NLieAlgebra>(a);
  const WedgeWord& w = shared_word_basis(a.dim(), a.arity())->word(word);
  Vector v = a.bracket_basis(w.indices());
  v[coord] += by;
  out->set_bracket(std::span<const std::size_t>(w.to_vector()), std::move(v));
  return out;
}

Representation perturb(const Representation& r, std::size_t word, std::size_t row, std::size_t col, const Scalar& by) {
  Representation out = r;
  const WedgeWord& w = shared_word_basis(r.algebra().dim(), r.algebra().arity() - 1)->word(word);
  Matrix m = r.rho(w.indices());
  m(row, col) += by;
  out.set_rho(std::span<const std::size_t>(w.to_vector()), std::move(m));
  return out;
}

bool jacobi_holds(const NLieAlgebra& a) {
  const std::size_t m = a.dim();
  // c[i][j] = [e_i, e_j]
  std::vector<std::vector<Vector>> c(m, std::vector<Vector>(m, zero_vector(m)));
  for (const auto& [w, v] : a.table()) {
    c[w[0]][w[1]] = v;
    c[w[1]][w[0]] = -v;
  }
  auto br = [&](const Vector& x, std::size_t j) {
    Vector out = zero_vector(m);
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(x[i]) != 0) add_scaled(out, x[i], c[i][j]);
    return out;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j]
        Vector s = br(c[i][j], k) + br(c[j][k], i) + br(c[k][i], j);
        if (!is_zero(s)) return false;
      }
  return true;
}

std::size_t naive_rank(std::vector<Vector> columns) {
  if (columns.empty()) return 0;
  const std::size_t rows = columns.front().size();
  // work on rows of the transpose: rank is the same
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows && rank < columns.size(); ++r) {
    std::size_t piv = rank;
    while (piv < columns.size() && sgn(columns[piv][r]) == 0) ++piv;
    if (piv == columns.size()) continue;
    std::swap(columns[rank], columns[piv]);
    for (std::size_t c = rank + 1; c < columns.size(); ++c) {
      if (sgn(columns[c][r]) == 0) continue;
      const Scalar f = columns[c][r] / columns[rank][r];
      for (std::size_t i = r; i < rows; ++i) columns[c][i] -= f * columns[rank][i];
    }
    ++rank;
  }
  return rank;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::vector<std::uint32_t> block_masks(std::size_t w_dim, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << w_dim); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == k) out.push_back(mask);
  return out;
}

}  // namespace

std::uint64_t count_keys(std::size_t w_dim, std::size_t arity, std::size_t degree, std::size_t v_from) {
  const auto masks = block_masks(w_dim, arity - 1);
  const std::uint32_t v_mask = ((1u << w_dim) - 1) & ~((1u << v_from) - 1);
  std::uint64_t count = 0;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t depth, bool all_v) {
    if (depth == degree) {
      for (std::size_t t = 0; t < w_dim; ++t)
        if (!(all_v && t >= v_from)) ++count;
      return;
    }
    for (auto m : masks) rec(depth + 1, all_v && (m & ~v_mask) == 0);
  };
  rec(0, true);
  return count;
}

std::vector<CochainKey> brute_keys(std::size_t w_dim, std::size_t arity, std::size_t degree) {
  const auto masks = block_masks(w_dim, arity - 1);
  std::vector<CochainKey> out;
  CochainKey key;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == degree) {
      for (std::size_t t = 0; t < w_dim; ++t) {
        key.tail = t;
        out.push_back(key);
      }
      return;
    }
    for (auto m : masks) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < w_dim; ++i)
        if (m & (1u << i)) idx.push_back(i);
      key.blocks.push_back(WedgeWord::from_increasing(idx));
      rec(depth + 1);
      key.blocks.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

int inversion_sign(const std::vector<std::size_t>& t) {
  int s = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) s = -s;
    }
  return s;
}

}  // namespace nlie::testing
