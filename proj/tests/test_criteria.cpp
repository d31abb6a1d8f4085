#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "monocurve/criteria.hpp"
#include "monocurve/sweep.hpp"

using namespace monocurve;

namespace {
Sequence seq(std::vector<std::int64_t> e) { return Sequence::validate(std::move(e)); }
}  // namespace

TEST_CASE("criterion d with witness") {
  auto [ok1, w1] = acm_d_witness(seq({4, 13, 19}));
  CHECK(!ok1);
  REQUIRE(w1.has_value());
  CHECK(*w1 == Monomial({5, 0, 1}));  // x^5 z
  CHECK(acm_d(seq({6, 7, 9, 10})));
  CHECK(acm_d(seq({3, 4, 5})));
}

TEST_CASE("criteria e and f on the homogenized side") {
  CHECK(!acm_e(seq({4, 13, 19})));
  CHECK(!acm_f(seq({4, 13, 19})));
  CHECK(acm_e(seq({2, 3})));
  CHECK(acm_f(seq({2, 3})));
  CHECK(!acm_e(seq({12, 15, 20, 23})));
}

TEST_CASE("criterion g compares the two initial ideals") {
  CHECK(acm_g(seq({3, 4, 5})));
  CHECK(!acm_g(seq({4, 13, 19})));
  // every 2-entry sequence passes: the toric ideal is principal with an
  // x_n-free lead
  for (std::int64_t an = 3; an <= 20; ++an)
    for (std::int64_t a1 = 1; a1 < an; ++a1) {
      if (std::gcd(a1, an) != 1) continue;
      CHECK(acm_g(seq({a1, an})));
    }
}

TEST_CASE("duality criteria") {
  CHECK(acm_duality_b(seq({6, 7, 9, 10})));
  CHECK(!acm_duality_b(seq({4, 13, 19})));  // sigma flips the lead of x^5 z - y^3
  CHECK(acm_duality_c(seq({6, 7, 9, 10})));
  CHECK(!acm_duality_c(seq({4, 13, 19})));  // the image is minimal yet not reduced
  CHECK(acm_duality_b(seq({2, 3})));
  CHECK(acm_duality_c(seq({2, 3})));
}

TEST_CASE("apery criteria") {
  CHECK(acm_apery_d(seq({3, 4, 5})));
  for (auto f : {acm_apery_b, acm_apery_c, acm_apery_d}) {
    CHECK(!f(seq({12, 15, 20, 23})));
    CHECK(f(seq({6, 7, 9, 10})));
  }
  CHECK(acm_cn(seq({6, 7, 9, 10})));
  CHECK(!acm_cn(seq({12, 15, 20, 23})));
}

TEST_CASE("is_acm: consolidated verdicts") {
  AcmReport r1 = is_acm(seq({6, 7, 9, 10}));
  CHECK(r1.verdict);
  CHECK(!r1.witness.has_value());
  AcmReport r2 = is_acm(seq({12, 15, 20, 23}));
  CHECK(!r2.verdict);
  AcmReport r3 = is_acm(seq({4, 13, 19}));
  CHECK(!r3.verdict);
  CHECK(r3.mu_ini == 4);  // h + 2 at h = 2
  CHECK(r3.bound_binom == 19);
}

TEST_CASE("all ten criteria agree on a randomized corpus") {
  std::vector<Sequence> corpus{seq({2, 3}),  seq({1, 3}),          seq({3, 4, 5}),
                               seq({4, 13, 19}), seq({15, 6, 19}), seq({6, 7, 9, 10}),
                               seq({12, 15, 20, 23}), seq({5, 6, 7, 8, 9})};
  for (const auto& a : random_sequences(3, 60, 25, 101)) corpus.push_back(a);
  for (const auto& a : random_sequences(4, 40, 10, 102)) corpus.push_back(a);
  for (const auto& a : random_sequences(5, 30, 5, 103)) corpus.push_back(a);
  for (const auto& a : corpus) {
    AcmReport r = is_acm(a);  // throws InternalInconsistency on disagreement
    CHECK(r.criteria.all_equal());
    if (!r.verdict) {
      REQUIRE(r.witness.has_value());
      // the witness is divisible by x_n and is a minimal generator
      CHECK(r.witness->exps.back() > 0);
      MonomialIdeal ini = initial_ideal(toric_gb(a));
      CHECK(std::count(ini.gens.begin(), ini.gens.end(), *r.witness) == 1);
    } else {
      // ACM: all minimal generators live in the first n-1 variables
      for (const auto& g : initial_ideal(toric_gb(a)).gens) CHECK(g.exps.back() == 0);
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial_coefficient(5, 2) == 10);
  CHECK(binomial_coefficient(10, 2) == 45);
  CHECK(binomial_coefficient(3, 0) == 1);
  CHECK(binomial_coefficient(4, 7) == 0);
  CHECK(binomial_coefficient(19, 1) == 19);
}

TEST_CASE("the power-ideal bound: goldens") {
  // m^3 in three variables: 10 generators, the equality case
  std::vector<Monomial> mk;
  for (std::int64_t i = 0; i <= 3; ++i)
    for (std::int64_t j = 0; i + j <= 3; ++j) mk.push_back(Monomial({i, j, 3 - i - j}));
  MonomialIdeal m3 = minimal_generators(mk);
  CHECK(m3.gens.size() == 10);
  CHECK(check_mk_bound(m3, 3, 3));

  MonomialIdeal j{{Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 3})}};
  CHECK(check_mk_bound(j, 2, 3));  // 3 <= 4, strict

  // violating the containment precondition is an error
  MonomialIdeal small{{Monomial({5, 0}), Monomial({0, 5})}};
  CHECK_THROWS_AS(check_mk_bound(small, 2, 3), mc_error);
}

TEST_CASE("the power-ideal bound on random ideals") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + rng() % 3;
    std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 5);
    // random monomial ideal containing m^k: keep every degree-k monomial and
    // sprinkle in random lower-degree generators
    std::vector<Monomial> gens;
    std::vector<std::int64_t> e(n, 0);
    std::function<void(std::size_t, std::int64_t)> emit = [&](std::size_t i, std::int64_t rest) {
      if (i + 1 == n) {
        e[i] = rest;
        gens.push_back(Monomial(e));
        return;
      }
      for (std::int64_t c = 0; c <= rest; ++c) {
        e[i] = c;
        emit(i + 1, rest - c);
      }
      e[i] = 0;
    };
    emit(0, k);
    int extras = static_cast<int>(rng() % 4);
    for (int x = 0; x < extras; ++x) {
      std::vector<std::int64_t> ex(n, 0);
      std::int64_t deg = 1 + static_cast<std::int64_t>(rng() % (k - 1));
      for (std::int64_t d = 0; d < deg; ++d) ++ex[rng() % n];
      gens.push_back(Monomial(ex));
    }
    MonomialIdeal jj = minimal_generators(gens);
    CHECK(check_mk_bound(jj, n, k));
  }
}

TEST_CASE("the initial bound holds on ACM instances") {
  CHECK(check_initial_bound(seq({6, 7, 9, 10})));  // 7 <= C(10, 2) = 45
  CHECK(check_initial_bound(seq({2, 3})));         // 1 <= C(3, 0) = 1
  CHECK_THROWS_AS(check_initial_bound(seq({4, 13, 19})), mc_error);
  for (const auto& a : enumerate_sequences(3, 15)) {
    if (acm_d(a)) CHECK(check_initial_bound(a));
  }
}
