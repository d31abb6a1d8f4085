#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "monocurve/toric.hpp"
#include "oracles.hpp"

using namespace monocurve;

namespace {
PureDifference pd(std::vector<std::int64_t> lead, std::vector<std::int64_t> tail) {
  return PureDifference{Monomial(std::move(lead)), Monomial(std::move(tail))};
}

std::vector<Monomial> monos(std::vector<std::vector<std::int64_t>> es) {
  std::vector<Monomial> out;
  for (auto& e : es) out.emplace_back(std::move(e));
  return out;
}
}  // namespace

TEST_CASE("toric basis of 4, 13, 19 is the worked four-element set") {
  GroebnerBasis g = toric_gb(Sequence::validate({4, 13, 19}));
  std::vector<PureDifference> expected{
      pd({0, 5, 0}, {2, 0, 3}),   // y^5 - x^2 z^3
      pd({3, 2, 0}, {0, 0, 2}),   // x^3 y^2 - z^2
      pd({5, 0, 1}, {0, 3, 0}),   // x^5 z - y^3
      pd({8, 0, 0}, {0, 1, 1})};  // x^8 - y z
  CHECK(g.elements == expected);
}

TEST_CASE("toric basis of the dual 15, 6, 19") {
  GroebnerBasis g = toric_gb(Sequence::validate({15, 6, 19}));
  std::vector<PureDifference> expected{
      pd({0, 5, 0}, {2, 0, 0}),   // y^5 - x^2
      pd({3, 2, 0}, {0, 0, 3}),   // x^3 y^2 - z^3
      pd({0, 3, 3}, {5, 0, 0}),   // y^3 z^3 - x^5
      pd({8, 0, 0}, {0, 1, 6})};  // x^8 - y z^6
  CHECK(g.elements == expected);
}

TEST_CASE("toric basis of 2, 3") {
  GroebnerBasis g = toric_gb(Sequence::validate({2, 3}));
  REQUIRE(g.elements.size() == 1);
  CHECK(g.elements[0] == pd({3, 0}, {0, 2}));
}

TEST_CASE("matrix pipeline: single relation with homogenizing pad") {
  Sequence a = Sequence::validate({2, 3});
  GroebnerBasis g = toric_gb_from_matrix(matrix_A(a));
  REQUIRE(g.elements.size() == 1);
  CHECK(g.elements[0] == PureDifference{Monomial({3, 0, 0}), Monomial({0, 2, 1})});  // x^3 - y^2 x0
}

TEST_CASE("matrix pipeline agrees with homogenization elementwise") {
  for (auto entries :
       std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 4, 5}, {4, 13, 19}, {6, 7, 9, 10}}) {
    Sequence a = Sequence::validate(entries);
    GroebnerBasis direct = toric_gb_from_matrix(matrix_A(a));
    GroebnerBasis lifted = homogenize_basis(toric_gb(a));
    CHECK(direct.elements == lifted.elements);
    // initial ideals coincide and stay x0- and x_n-free on the x0 side
    for (const auto& f : direct.elements) CHECK(f.lead.exps[a.size()] == 0);
  }
}

TEST_CASE("matrix pipeline of 3, 4, 5 has the expected leads") {
  GroebnerBasis g = toric_gb_from_matrix(matrix_A(Sequence::validate({3, 4, 5})));
  REQUIRE(g.elements.size() == 3);
  std::vector<Monomial> leads;
  for (const auto& f : g.elements) leads.push_back(f.lead);
  CHECK(leads == monos({{0, 2, 0, 0}, {2, 1, 0, 0}, {3, 0, 0, 0}}));
}

TEST_CASE("matrix validation rejects malformed input") {
  CHECK_THROWS_AS(toric_gb_from_matrix({{0, 2, 3}}), mc_error);
  CHECK_THROWS_AS(toric_gb_from_matrix({{1, 2, 3}, {3, 1, 0}}), mc_error);
  CHECK_THROWS_AS(toric_gb_from_matrix({{0, 2, 3}, {3, 2, 0}}), mc_error);
}

TEST_CASE("adding the last variable: small goldens") {
  GroebnerBasis g1 = gb_with_last_variable(Sequence::validate({2, 3}));
  REQUIRE(g1.elements.size() == 2);
  CHECK(g1.elements[0] == PureDifference{Monomial({0, 1}), std::nullopt});  // y
  CHECK(g1.elements[1] == PureDifference{Monomial({3, 0}), std::nullopt});  // x^3, tail killed

  MonomialIdeal i2 = initial_ideal(gb_with_last_variable(Sequence::validate({3, 4, 5})));
  CHECK(i2.gens == monos({{0, 0, 1}, {0, 2, 0}, {2, 1, 0}, {3, 0, 0}}));
}

TEST_CASE("adding the last variable can grow the initial ideal strictly") {
  Sequence a = Sequence::validate({4, 13, 19});
  MonomialIdeal with_xn = initial_ideal(gb_with_last_variable(a));
  // y^3 appears even though it is not in (z) + ini(I)
  CHECK(contains(with_xn, Monomial({0, 3, 0})));
  MonomialIdeal plain = initial_ideal(toric_gb(a));
  std::vector<Monomial> joined = plain.gens;
  joined.push_back(Monomial({0, 0, 1}));
  CHECK(!(with_xn == minimal_generators(joined)));
}

TEST_CASE("initial_ideal requires a reduced basis and lists the leads") {
  GroebnerBasis g = toric_gb(Sequence::validate({4, 13, 19}));
  MonomialIdeal ini = initial_ideal(g);
  CHECK(ini.gens == monos({{0, 5, 0}, {3, 2, 0}, {5, 0, 1}, {8, 0, 0}}));
  GroebnerBasis raw = g;
  raw.reduced = false;
  CHECK_THROWS_AS(initial_ideal(raw), mc_error);
  GroebnerBasis one = toric_gb(Sequence::validate({2, 3}));
  CHECK(initial_ideal(one).gens == monos({{3, 0}}));
}

TEST_CASE("standard monomials: staircase goldens") {
  MonomialIdeal j{monos({{0, 0, 1}, {0, 2, 0}, {2, 1, 0}, {3, 0, 0}})};
  StandardMonomials sm = standard_monomials(j);
  CHECK(sm.monos == monos({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 0, 0}, {1, 1, 0}}));

  MonomialIdeal full{monos({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  CHECK(standard_monomials(full).monos == monos({{0, 0, 0}}));

  MonomialIdeal big = initial_ideal(gb_with_last_variable(Sequence::validate({4, 13, 19})));
  CHECK(standard_monomials(big).monos.size() == 19);
}

TEST_CASE("standard monomials: error paths") {
  MonomialIdeal open{monos({{0, 2}})};  // no pure power of x
  CHECK_THROWS_AS(standard_monomials(open), mc_error);
  MonomialIdeal j{monos({{0, 0, 1}, {0, 2, 0}, {2, 1, 0}, {3, 0, 0}})};
  CHECK_THROWS_AS(standard_monomials(j, 3), mc_error);
}

TEST_CASE("staircase size equals a_n across a small corpus") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 40) {
    std::size_t n = 2 + rng() % 3;
    std::vector<std::int64_t> e;
    std::set<std::int64_t> used;
    std::int64_t an = static_cast<std::int64_t>(n) + static_cast<std::int64_t>(rng() % 25);
    while (e.size() < n - 1) {
      std::int64_t v = 1 + static_cast<std::int64_t>(rng() % (an - 1));
      if (used.insert(v).second) e.push_back(v);
    }
    e.push_back(an);
    std::int64_t g = 0;
    for (auto x : e) g = std::gcd(g, x);
    if (g != 1) continue;
    Sequence a = Sequence::validate(e);
    GroebnerBasis gb = toric_gb(a);
    // leads never involve x0 on the affine side, trivially, and the
    // staircase of (x_n, I) counts a_n monomials
    StandardMonomials sm = standard_monomials(initial_ideal(gb_with_last_variable(gb, a)));
    CHECK(static_cast<std::int64_t>(sm.monos.size()) == a.an());
    ++done;
  }
}

TEST_CASE("minimal generator sets of the homogenized and affine sides agree") {
  for (auto entries : std::vector<std::vector<std::int64_t>>{{3, 4, 5}, {4, 13, 19}, {5, 7, 11}}) {
    Sequence a = Sequence::validate(entries);
    MonomialIdeal affine = initial_ideal(toric_gb(a));
    MonomialIdeal hom = initial_ideal(toric_gb_from_matrix(matrix_A(a)));
    REQUIRE(affine.gens.size() == hom.gens.size());
    for (std::size_t i = 0; i < affine.gens.size(); ++i) {
      Monomial stripped = hom.gens[i];
      CHECK(stripped.exps.back() == 0);
      stripped.exps.pop_back();
      CHECK(stripped == affine.gens[i]);
    }
  }
}

TEST_CASE("minimal_generators drops duplicates and multiples") {
  auto ideal = minimal_generators(monos({{2, 0}, {2, 0}, {3, 1}, {0, 4}, {2, 3}}));
  CHECK(ideal.gens == monos({{2, 0}, {0, 4}}));
}
