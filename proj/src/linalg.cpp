#include "nlie/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace nlie {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

Vector SparseMatrix::column_dense(std::size_t j) const {
  Vector out(rows);
  for (const auto& [r, v] : columns[j]) out[r] = v;
  return out;
}

SparseColumn sparse_from_dense(const Vector& v) {
  SparseColumn out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  }
  return out;
}

SparseColumn sparse_add(const SparseColumn& a, const Scalar& s, const SparseColumn& b) {
  SparseColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Scalar x = a[i].second + s * b[j].second;
      if (sgn(x) != 0) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseColumn SparseMatrix::apply(const SparseColumn& x) const {
  SparseColumn out;
  for (const auto& [j, c] : x) out = sparse_add(out, c, columns[j]);
  return out;
}

namespace {

using IntColumn = std::vector<std::pair<std::uint64_t, mpz_class>>;

// a * x - b * y
IntColumn combine(const mpz_class& a, const IntColumn& x, const mpz_class& b, const IntColumn& y) {
  IntColumn out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  mpz_class t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      t = a * x[i].second - b * y[j].second;
      if (sgn(t) != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

void accumulate_gcd(mpz_class& g, const IntColumn& c) {
  for (const auto& [r, v] : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
}

void divide_exact(IntColumn& c, const mpz_class& g) {
  for (auto& [r, v] : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators; returns the integer column and the scale applied.
std::pair<IntColumn, mpz_class> to_integers(const SparseColumn& c) {
  mpz_class l = 1;
  for (const auto& [r, v] : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntColumn out;
  out.reserve(c.size());
  for (const auto& [r, v] : c) {
    mpz_class x = v.get_num() * (l / v.get_den());
    out.emplace_back(r, std::move(x));
  }
  return {std::move(out), l};
}

struct Pivot {
  IntColumn column;
  IntColumn combo;
};

}  // namespace

RankResult rank_and_kernel(const SparseMatrix& m, bool want_kernel) {
  RankResult result;
  std::vector<Pivot> pivots;
  std::unordered_map<std::uint64_t, std::size_t> by_row;
  std::vector<mpz_class> scales;
  if (want_kernel) scales.resize(m.cols());

  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto [col, scale] = to_integers(m.columns[j]);
    IntColumn combo;
    if (want_kernel) {
      scales[j] = scale;
      combo.emplace_back(j, 1);
    }
    while (!col.empty()) {
      auto it = by_row.find(col.front().first);
      if (it == by_row.end()) break;
      const Pivot& p = pivots[it->second];
      const mpz_class& pa = p.column.front().second;
      const mpz_class& cb = col.front().second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pa.get_mpz_t(), cb.get_mpz_t());
      const mpz_class a = pa / g;
      const mpz_class b = cb / g;
      col = combine(a, col, b, p.column);
      if (want_kernel) combo = combine(a, combo, b, p.combo);
      mpz_class content = 0;
      accumulate_gcd(content, col);
      if (want_kernel && content != 1) accumulate_gcd(content, combo);
      if (content > 1) {
        divide_exact(col, content);
        if (want_kernel) divide_exact(combo, content);
      }
    }
    if (col.empty()) {
      if (want_kernel) {
        // combo_j applies to the scaled column s_j * M_j
        SparseColumn k;
        k.reserve(combo.size());
        for (const auto& [c, v] : combo) k.emplace_back(c, Scalar(v * scales[c]));
        result.kernel.push_back(std::move(k));
      }
      ++result.nullity;
      continue;
    }
    by_row.emplace(col.front().first, pivots.size());
    pivots.push_back({std::move(col), std::move(combo)});
    result.pivot_columns.push_back(j);
    ++result.rank;
  }
  return result;
}

}  // namespace nlie
