#include "doctest.h"
#include "nlie/representation.hpp"
#include "support.hpp"

using namespace nlie;
namespace t = nlie::testing;

namespace {

Vector e(std::size_t dim, std::size_t i, int s = 1) {
  Vector v = zero_vector(dim);
  v[i] = s;
  return v;
}

Vector at(const Cochain& c, std::initializer_list<std::size_t> block, std::size_t tail) {
  return c.value(CochainKey{{WedgeWord::from_increasing(block)}, tail});
}

bool plain_genrep_ok(const Representation& r) { return check_generalized_rep(GeneralizedRepresentation(r)).is_zero(); }

struct Corpus {
  std::vector<Representation> passing;
  std::vector<Representation> perturbed;
};

Corpus representation_corpus() {
  Rng rng(2024);
  Corpus c;
  auto& ok = c.passing;
  for (auto [alg, d] : {std::pair{t::abelian(2, 3), 2}, {t::abelian(3, 4), 2}, {t::a4(), 3}, {t::sl2(), 2},
                        {t::heisenberg(), 1}}) {
    ok.emplace_back(alg, d);
  }
  const std::size_t zero_reps = ok.size();
  for (auto alg : {t::a4(), t::sl2(), t::heisenberg(), t::solvable3()}) ok.push_back(adjoint_rep(alg));
  ok.push_back(adjoint_rep(t::change_basis(*t::sl2(), t::random_invertible(rng, 3))));
  ok.push_back(adjoint_rep(t::change_basis(*t::solvable3(), t::random_invertible(rng, 3))));
  ok.push_back(adjoint_rep(t::change_basis(*t::a4(), t::random_invertible(rng, 4))));
  for (int r = 0; r < 3; ++r) {
    ok.push_back(t::conjugate(adjoint_rep(t::a4()), t::random_invertible(rng, 4)));
    ok.push_back(t::conjugate(adjoint_rep(t::sl2()), t::random_invertible(rng, 3)));
  }
  const auto nilpotent = t::load_rep("abelian_n3_m3_rho.json").rho();
  ok.push_back(nilpotent);
  ok.push_back(t::conjugate(nilpotent, t::random_invertible(rng, 4)));
  ok.push_back(t::conjugate(nilpotent, t::random_invertible(rng, 4)));
  ok.push_back(t::load_rep("trace_form_theta.json").rho());

  // +1 on one entry of every nonzero representation at several spots; some stay valid
  for (int round = 0; round < 4; ++round) {
    for (std::size_t i = zero_reps; i < ok.size(); ++i) {
      const Representation& r = ok[i];
      const std::size_t words = shared_word_basis(r.algebra().dim(), r.algebra().arity() - 1)->size();
      const std::size_t d = r.dim_v();
      c.perturbed.push_back(t::perturb(r, (i + round) % words, (i + 2 * round) % d, (i + round + 1) % d, Scalar(1)));
    }
  }
  return c;
}

}  // namespace

TEST_SUITE("representation") {

TEST_CASE("check_representation examples") {
  CHECK(check_representation(Representation(t::a4(), 3)).empty());
  CHECK(check_representation(Representation(t::abelian(3, 4), 2)).empty());
  CHECK(check_representation(adjoint_rep(t::a4())).empty());

  const auto bad = t::load_rep("a4_bad_rep.json");
  const auto v = check_representation(bad.rho());
  REQUIRE_FALSE(v.empty());
  bool commutator = false, last_slot = false;
  for (const auto& x : v) {
    CHECK_FALSE(x.residual.is_zero());
    commutator = commutator || x.identity == RepIdentity::commutator;
    last_slot = last_slot || x.identity == RepIdentity::bracket_in_last_slot;
  }
  CHECK(commutator);
  CHECK(last_slot);
}

TEST_CASE("representation identities agree with [mu, mu] = 0 on a corpus") {
  const Corpus c = representation_corpus();
  CHECK(c.passing.size() >= 20);
  for (const auto& r : c.passing) {
    CHECK(check_representation(r).empty());
    CHECK(plain_genrep_ok(r));
  }
  std::size_t failing = 0;
  for (const auto& r : c.perturbed) {
    const bool ok = check_representation(r).empty();
    CHECK(ok == plain_genrep_ok(r));
    failing += !ok;
  }
  CHECK(failing >= 20);
}

TEST_CASE("rho_bar examples") {
  const auto a4 = t::a4();
  const DirectSumSpace space{4, 4};
  CHECK(build_rho_bar(Representation(a4, 4), space).is_zero());

  const Cochain rb = build_rho_bar(adjoint_rep(a4), space);
  CHECK(rb.value_dim() == space.dim());
  // all arguments in g
  for (std::size_t tail = 0; tail < 4; ++tail) CHECK(is_zero(at(rb, {0, 1}, tail)));
  // V argument last: rho(e1 ^ e2)(v3) = v4
  CHECK(at(rb, {0, 1}, space.from_v(2)) == e(8, space.from_v(3)));
  // V argument in slot 2 picks up (-1)^{n-2}
  CHECK(at(rb, {0, space.from_v(2)}, 1) == e(8, space.from_v(3), -1));
  // two V arguments: outside the pattern
  CHECK(is_zero(at(rb, {0, space.from_v(1)}, space.from_v(2))));
}

TEST_CASE("theta_bar examples") {
  const auto rep = t::load_rep("trace_form_theta.json");
  const DirectSumSpace space = direct_sum(rep);
  const std::size_t a = space.from_v(0), b = space.from_v(1);
  const Cochain tb = build_theta_bar(rep, space);
  // theta(e0)(a ^ b) = b
  CHECK(at(tb, {0, a}, b) == e(space.dim(), b));
  CHECK(at(tb, {a, b}, 0) == e(space.dim(), b));
  CHECK(at(tb, {0, b}, a) == e(space.dim(), b, -1));
  CHECK(is_zero(at(tb, {1, a}, b)));
  // all arguments in V, or two in g
  CHECK(is_zero(at(tb, {a, b}, a)));
  CHECK(is_zero(at(tb, {0, 1}, a)));

  GeneralizedRepresentation no_theta(rep.rho());
  CHECK(build_theta_bar(no_theta, space).is_zero());
}

TEST_CASE("pattern parts are disjoint and mu splits back into them") {
  for (const auto& name : {"a4_adjoint.json", "trace_form_theta.json", "abelian_n3_m3_rho.json"}) {
    const auto rep = t::load_rep(name);
    const MuElement mu = build_mu(rep);
    for (const auto& [key, v] : mu.rho_bar.table()) CHECK(mu.theta_bar.find(key) == nullptr);
    for (const auto& [key, v] : mu.pi.table()) {
      CHECK(mu.theta_bar.find(key) == nullptr);
      CHECK(mu.rho_bar.find(key) == nullptr);
    }
    const PatternParts parts = split_by_pattern(mu.total, mu.space);
    CHECK(parts.all_g == mu.pi);
    CHECK(parts.one_v == mu.rho_bar);
    CHECK(parts.one_g == mu.theta_bar);
    CHECK(parts.other.is_zero());
    CHECK(mu.total == mu.pi + mu.rho_bar + mu.theta_bar);
  }
}

TEST_CASE("mu is alternating in all n arguments") {
  for (const auto& name : {"a4_adjoint.json", "trace_form_theta.json"}) {
    const auto rep = t::load_rep(name);
    const MuElement mu = build_mu(rep);
    const std::size_t w = mu.space.dim();
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = i + 1; j < w; ++j)
        for (std::size_t k = 0; k < w; ++k) {
          const SmallTuple ij{i, j};
          const Vector v = mu.total.value_on(std::span<const SmallTuple>(&ij, 1), k);
          if (k == i || k == j) {
            CHECK(is_zero(v));
            continue;
          }
          // swapping the tail into the block flips the sign
          const SmallTuple ik{i, k};
          CHECK(mu.total.value_on(std::span<const SmallTuple>(&ik, 1), j) == -v);
        }
  }
}

TEST_CASE("build_mu examples") {
  GeneralizedRepresentation zero(Representation(t::abelian(3, 3), 2));
  CHECK(build_mu(zero).total.is_zero());

  const auto rep = t::load_rep("a4_adjoint.json");
  const MuElement mu = build_mu(rep);
  CHECK(mu.theta_bar.is_zero());
  CHECK(mu.pi == build_pi(rep.algebra(), mu.space));
  CHECK(split_by_pattern(mu.total, mu.space).all_g == mu.pi);
  CHECK(check_generalized_rep(rep).is_zero());
}

TEST_CASE("check_generalized_rep examples") {
  CHECK(check_generalized_rep(GeneralizedRepresentation(Representation(t::a4(), 2))).is_zero());
  CHECK(check_generalized_rep(t::load_rep("trace_form_theta.json")).is_zero());

  // recorded failing instance: A4 with adjoint rho and an arbitrary theta
  const Cochain sq = check_generalized_rep(t::load_rep("a4_random_theta.json"));
  CHECK(sq.table().size() == 420);

  // one extra theta entry breaks the nonzero theta example
  auto rep = t::load_rep("trace_form_theta.json");
  rep.set_theta(1, {0, 1}, e(2, 0));
  CHECK_FALSE(check_generalized_rep(rep).is_zero());
}

TEST_CASE("representation input is validated") {
  Representation r(t::a4(), 2);
  CHECK_THROWS_AS(r.set_rho({0, 1}, Matrix(3, 3)), InputError);
  CHECK_THROWS_AS(r.set_rho({1, 0}, Matrix(2, 2)), InputError);
  CHECK_THROWS_AS(r.set_rho({0, 4}, Matrix(2, 2)), InputError);
  GeneralizedRepresentation g(r);
  CHECK_THROWS_AS(g.set_theta(4, {0, 1}, zero_vector(2)), InputError);
  CHECK_THROWS_AS(g.set_theta(0, {1, 0}, zero_vector(2)), InputError);
  CHECK_THROWS_AS(g.set_theta(0, {0, 2}, zero_vector(2)), InputError);
  CHECK_THROWS_AS(g.set_theta(0, {0, 1}, zero_vector(3)), InputError);
}

}  // TEST_SUITE
