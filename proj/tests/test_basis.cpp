#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "nlie/basis.hpp"
#include "support.hpp"

using namespace nlie;
using nlie::testing::inversion_sign;

namespace {

SignedWedge norm(std::vector<std::size_t> t, std::size_t dim) { return normalize_wedge(t, dim); }

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("normalize_wedge examples") {
  auto a = norm({1, 0}, 4);
  CHECK(a.sign == -1);
  CHECK(a.word.to_vector() == std::vector<std::size_t>{0, 1});

  CHECK(norm({2, 2}, 4).sign == 0);

  auto b = norm({3, 0, 2}, 4);
  CHECK(b.sign == 1);
  CHECK(b.word.to_vector() == std::vector<std::size_t>{0, 2, 3});

  CHECK_THROWS_AS(norm({0, 4}, 4), InputError);
}

TEST_CASE("normalize_wedge is idempotent on sorted tuples") {
  for (std::size_t dim = 1; dim <= 6; ++dim)
    for (std::size_t k = 1; k <= dim; ++k)
      for (const WordBasis basis(dim, k); const auto& w : basis.words()) {
        auto s = norm(w.to_vector(), dim);
        CHECK(s.sign == 1);
        CHECK(s.word == w);
      }
}

TEST_CASE("normalize_wedge sign follows permutation parity") {
  std::vector<std::vector<std::size_t>> tuples = {{0, 3, 5}, {1, 2, 4, 6}, {7, 0, 2, 5}, {2, 9}};
  for (const auto& t : tuples) {
    const int base = norm(t, 10).sign;
    std::vector<std::size_t> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> moved(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) moved[i] = t[perm[i]];
      CHECK(norm(moved, 10).sign == inversion_sign(perm) * base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("shuffle_sign examples") {
  auto s = [](std::vector<std::size_t> j, std::size_t n) { return shuffle_sign(j, n); };
  CHECK(s({1, 2}, 3).sign == 1);
  CHECK(s({2}, 2).sign == -1);
  auto t = s({2, 3}, 3);
  CHECK(t.sign == 1);
  CHECK(t.i == std::vector<std::size_t>{1});
  CHECK(t.k == 1);
  CHECK(s({1}, 3).k == 0);
  CHECK_THROWS_AS(s({}, 3), InputError);
  CHECK_THROWS_AS(s({4}, 3), InputError);
}

TEST_CASE("shuffle_sign agrees with brute-force parity for N <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> j, i;
      for (std::size_t x = 1; x <= n; ++x) ((mask >> (x - 1)) & 1 ? j : i).push_back(x);
      const ShuffleSplit sp = shuffle_sign(j, n);
      std::vector<std::size_t> perm = j;
      perm.insert(perm.end(), i.begin(), i.end());
      CHECK(sp.sign == inversion_sign(perm));
      CHECK(sp.i == i);
      // k: insertion point of j_{q+1} among I
      std::size_t k = 0;
      while (k < i.size() && i[k] < j.back()) ++k;
      CHECK(sp.k == k);
    }
  }
}

TEST_CASE("shuffle sign composes with reorderings of J and I") {
  // sign(J,I) * parity(a on J) * parity(b on I) = parity of the full arrangement
  const std::size_t n = 6;
  const std::vector<std::size_t> j = {2, 3, 5};
  const std::vector<std::size_t> i = {1, 4, 6};
  const int split = shuffle_sign(j, n).sign;
  std::vector<std::size_t> a = {0, 1, 2};
  do {
    std::vector<std::size_t> b = {0, 1, 2};
    do {
      std::vector<std::size_t> full;
      for (auto x : a) full.push_back(j[x]);
      for (auto x : b) full.push_back(i[x]);
      CHECK(inversion_sign(full) == split * inversion_sign(a) * inversion_sign(b));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
}

TEST_CASE("all_shuffle_splits lists every J once, lexicographically") {
  auto splits = all_shuffle_splits(5, 2);
  CHECK(splits.size() == 10);
  for (std::size_t r = 1; r < splits.size(); ++r) CHECK(splits[r - 1].j < splits[r].j);
}

TEST_CASE("enumerate_cochain_keys examples") {
  CHECK(enumerate_cochain_keys(4, 3, 1).size() == 24);
  for (std::size_t w = 1; w <= 6; ++w) CHECK(enumerate_cochain_keys(w, 3, 0).size() == w);
  CHECK(enumerate_cochain_keys(6, 3, 2).size() == 1350);
  CHECK(enumerate_cochain_keys(2, 4, 1).empty());
  CHECK(enumerate_cochain_keys(2, 4, 0).size() == 2);
}

TEST_CASE("key count formula holds exhaustively") {
  for (std::size_t w = 1; w <= 8; ++w)
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t p = 0; p <= 3; ++p) {
        std::uint64_t formula = w;
        for (std::size_t r = 0; r < p; ++r) formula *= testing::binomial(w, n - 1);
        const std::uint64_t brute = testing::count_keys(w, n, p, w);
        CHECK(brute == formula);
        CHECK(KeySpace(w, n, p).size() == formula);
        if (formula <= 20000) CHECK(enumerate_cochain_keys(w, n, p).size() == formula);
      }
}

TEST_CASE("enumeration order is lexicographic and index is its inverse") {
  for (auto [w, n, p] : {std::array<std::size_t, 3>{4, 3, 1}, {5, 3, 2}, {4, 2, 3}, {6, 4, 1}}) {
    const auto keys = enumerate_cochain_keys(w, n, p);
    CHECK(keys == testing::brute_keys(w, n, p));
    const KeySpace space(w, n, p);
    for (std::uint64_t c = 0; c < keys.size(); ++c) CHECK(space.index(keys[c]) == c);
  }
}

TEST_CASE("replace_slot examples") {
  const auto w01 = WedgeWord::from_increasing({0, 1});
  CHECK(replace_slot(w01, 2, unit_vector(4, 0)).empty());
  CHECK(replace_slot(w01, 1, unit_vector(4, 0)) == WedgeCombination{{w01, Scalar(1)}});

  auto b = replace_slot(w01, 2, unit_vector(4, 2));
  REQUIRE(b.size() == 1);
  CHECK(b.begin()->first.to_vector() == std::vector<std::size_t>{0, 2});
  CHECK(b.begin()->second == 1);

  auto c = replace_slot(WedgeWord::from_increasing({1, 3}), 1, unit_vector(4, 2));
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->first.to_vector() == std::vector<std::size_t>{2, 3});
  CHECK(c.begin()->second == 1);

  // e0 - 2 e3 into slot 2 of (1, 2): e1^e0 - 2 e1^e3 = -(0,1) - 2 (1,3)
  Vector v = zero_vector(4);
  v[0] = 1;
  v[3] = -2;
  auto d = replace_slot(WedgeWord::from_increasing({1, 2}), 2, v);
  CHECK(d.size() == 2);
  CHECK(d.at(WedgeWord::from_increasing({0, 1})) == -1);
  CHECK(d.at(WedgeWord::from_increasing({1, 3})) == -2);

  CHECK_THROWS_AS(replace_slot(w01, 3, v), InputError);
  CHECK_THROWS_AS(replace_slot(w01, 0, v), InputError);
}

TEST_CASE("scalars parse exactly and canonically") {
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(format_scalar(parse_scalar("-6/4")) == "-3/2");
  CHECK(format_scalar(parse_scalar("4/2")) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(parse_scalar("0.5"), InputError);
  CHECK_THROWS_AS(parse_scalar(""), InputError);
}

}  // TEST_SUITE
