#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "monocurve/criteria.hpp"
#include "monocurve/families.hpp"
#include "monocurve/toric.hpp"

using namespace monocurve;

TEST_CASE("family sequences") {
  CHECK(bresinsky(2).sequence.entries() == std::vector<std::int64_t>{12, 15, 20, 23});
  CHECK(bresinsky(3).sequence.entries() == std::vector<std::int64_t>{30, 35, 42, 47});
  CHECK(arslan(2).sequence.entries() == std::vector<std::int64_t>{6, 7, 9, 10});
  CHECK(arslan(3).sequence.entries() == std::vector<std::int64_t>{12, 13, 16, 17});
  CHECK(prop31(2).sequence.entries() == std::vector<std::int64_t>{4, 13, 19});
  CHECK_THROWS_AS(bresinsky(1), mc_error);
  CHECK_THROWS_AS(arslan(13), mc_error);
}

TEST_CASE("bresinsky: every displayed generator and the extra element belong to the ideal") {
  for (std::int64_t h : {2, 3}) {
    FamilyInstance inst = bresinsky(h);
    GroebnerBasis g = toric_gb(inst.sequence);
    for (const auto& f : inst.membership_checks)
      CHECK(!normal_form(f, g.elements, g.order).has_value());
    CHECK(!is_acm(inst.sequence).verdict);
    CHECK(inst.expected_verdict == false);
  }
}

TEST_CASE("arslan: the reduced basis equals the claimed binomials") {
  for (std::int64_t h : {2, 3, 4}) {
    FamilyInstance inst = arslan(h);
    GroebnerBasis g = toric_gb(inst.sequence);
    auto expected = *inst.expected_gb;
    std::sort(expected.begin(), expected.end(),
              [&](const PureDifference& x, const PureDifference& y) {
                return revlex_cmp(x.lead, y.lead, g.order) == std::strong_ordering::less;
              });
    CHECK(g.elements == expected);
    CHECK(g.elements.size() == static_cast<std::size_t>(2 * h + 3));
    CHECK(is_acm(inst.sequence).verdict);
  }
}

TEST_CASE("the big-initial family: exact basis at h = 2 and the size law") {
  FamilyInstance inst2 = prop31(2);
  GroebnerBasis g2 = toric_gb(inst2.sequence);
  auto expected = *inst2.expected_gb;
  std::sort(expected.begin(), expected.end(),
            [&](const PureDifference& x, const PureDifference& y) {
              return revlex_cmp(x.lead, y.lead, g2.order) == std::strong_ordering::less;
            });
  CHECK(g2.elements == expected);
  for (std::int64_t h : {2, 3, 4, 5}) {
    FamilyInstance inst = prop31(h);
    CHECK(toric_gb(inst.sequence).elements.size() == static_cast<std::size_t>(h) + 2);
    CHECK(!is_acm(inst.sequence).verdict);
  }
}

TEST_CASE("the dual of the big-initial family is the complete intersection") {
  for (std::int64_t h : {2, 3}) {
    FamilyInstance inst = prop31(h);
    Sequence ad = dual(inst.sequence);
    CHECK(ad.entries() == std::vector<std::int64_t>{6 * h + 3, 6, 6 * h + 7});
    GroebnerBasis dual_gb = toric_gb(ad);
    GroebnerBasis ci_gb =
        interreduce(buchberger(*inst.dual_ci, dual_gb.order, ad.entries()));
    // ideal equality through normal forms in both directions
    for (const auto& f : *inst.dual_ci)
      CHECK(!normal_form(f, dual_gb.elements, dual_gb.order).has_value());
    for (const auto& f : dual_gb.elements)
      CHECK(!normal_form(f, ci_gb.elements, ci_gb.order).has_value());
  }
}

TEST_CASE("shifted instances revalidate, normalizing the gcd away") {
  Sequence a = Sequence::validate({4, 13, 19});
  FamilyInstance same = shifted(a, 0);
  CHECK(same.sequence == a);
  CHECK(same.normalization == 1);
  FamilyInstance plus2 = shifted(a, 2);  // (6, 15, 21) has gcd 3
  CHECK(plus2.normalization == 3);
  CHECK(plus2.sequence.entries() == std::vector<std::int64_t>{2, 5, 7});
  for (std::int64_t k = 0; k <= 12; ++k) CHECK(shifted(a, k).sequence.size() == 3);
}
