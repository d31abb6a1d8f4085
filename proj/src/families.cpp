#include "monocurve/families.hpp"

#include <numeric>

namespace monocurve {

namespace {

void check_h(std::int64_t h, std::int64_t h_max, const char* name) {
  if (h < 2) fail(errc::invalid_argument, std::string(name) + " requires h >= 2");
  if (h > h_max)
    fail(errc::invalid_argument,
         std::string(name) + " capped at h <= " + std::to_string(h_max));
}

// oriented binomial from explicit exponent vectors
PureDifference binom4(const OrderSpec& o, std::vector<std::int64_t> p,
                      std::vector<std::int64_t> q) {
  auto f = make_difference(Monomial(std::move(p)), Monomial(std::move(q)), o);
  if (!f) fail(errc::internal_inconsistency, "family binomial cancelled");
  return *f;
}

}  // namespace

FamilyInstance bresinsky(std::int64_t h, std::int64_t h_max) {
  check_h(h, h_max, "bresinsky");
  std::int64_t a1 = checked_mul(2 * h - 1, 2 * h);
  std::int64_t a2 = checked_mul(2 * h - 1, 2 * h + 1);
  std::int64_t a3 = checked_mul(2 * h, 2 * h + 1);
  std::int64_t a4 = checked_add(a3, 2 * h - 1);
  FamilyInstance inst{"bresinsky", h, Sequence::validate({a1, a2, a3, a4}),
                      std::nullopt, false, {}, std::nullopt, 1};

  OrderSpec o = OrderSpec::revlex(4);
  // x t - y z
  inst.membership_checks.push_back(binom4(o, {1, 0, 0, 1}, {0, 1, 1, 0}));
  // z^{i-1} t^{2h-i} - x^{i+1} y^{2h-i}, 1 <= i <= 2h
  for (std::int64_t i = 1; i <= 2 * h; ++i)
    inst.membership_checks.push_back(binom4(o, {0, 0, i - 1, 2 * h - i}, {i + 1, 2 * h - i, 0, 0}));
  // x^{2h+1-j} z^j - y^{2h-j} t^j, 0 <= j <= 2h-2
  for (std::int64_t j = 0; j <= 2 * h - 2; ++j)
    inst.membership_checks.push_back(binom4(o, {2 * h + 1 - j, 0, j, 0}, {0, 2 * h - j, 0, j}));
  // x y^{2h-1} t - z^{2h}
  inst.membership_checks.push_back(binom4(o, {1, 2 * h - 1, 0, 1}, {0, 0, 2 * h, 0}));
  return inst;
}

FamilyInstance arslan(std::int64_t h, std::int64_t h_max) {
  check_h(h, h_max, "arslan");
  std::int64_t a1 = checked_mul(h, h + 1);
  std::int64_t a3 = checked_mul(h + 1, h + 1);
  FamilyInstance inst{"arslan", h,
                      Sequence::validate({a1, a1 + 1, a3, a3 + 1}),
                      std::nullopt, true, {}, std::nullopt, 1};

  OrderSpec o = OrderSpec::revlex(4);
  std::vector<PureDifference> gb;
  // g_i = x^{h-i} z^{i+1} - y^{h-i+1} t^i, 0 <= i <= h
  for (std::int64_t i = 0; i <= h; ++i)
    gb.push_back(binom4(o, {h - i, 0, i + 1, 0}, {0, h - i + 1, 0, i}));
  // f_i = x^{i+1} y^{h-i} - z^i t^{h-i}, 0 <= i <= h
  for (std::int64_t i = 0; i <= h; ++i)
    gb.push_back(binom4(o, {i + 1, h - i, 0, 0}, {0, 0, i, h - i}));
  // x t - y z
  gb.push_back(binom4(o, {1, 0, 0, 1}, {0, 1, 1, 0}));
  inst.expected_gb = std::move(gb);
  return inst;
}

FamilyInstance prop31(std::int64_t h, std::int64_t h_max) {
  check_h(h, h_max, "prop31");
  FamilyInstance inst{"prop31", h,
                      Sequence::validate({4, 6 * h + 1, 6 * h + 7}),
                      std::nullopt, false, {}, std::nullopt, 1};

  OrderSpec o = OrderSpec::revlex(3);
  auto binom3 = [&](std::vector<std::int64_t> p, std::vector<std::int64_t> q) {
    auto f = make_difference(Monomial(std::move(p)), Monomial(std::move(q)), o);
    if (!f) fail(errc::internal_inconsistency, "family binomial cancelled");
    return *f;
  };
  std::vector<PureDifference> gb;
  gb.push_back(binom3({3 * h + 2, 0, 0}, {0, 1, 1}));  // x^{3h+2} - y z
  // g_i = x^{3(h-i)+2} z^{2i-1} - y^{2i+1}, 1 <= i <= h
  for (std::int64_t i = 1; i <= h; ++i)
    gb.push_back(binom3({3 * (h - i) + 2, 0, 2 * i - 1}, {0, 2 * i + 1, 0}));
  gb.push_back(binom3({3, 2, 0}, {0, 0, 2}));  // x^3 y^2 - z^2
  inst.expected_gb = std::move(gb);

  std::vector<PureDifference> ci;
  ci.push_back(binom3({0, 2 * h + 1, 0}, {2, 0, 0}));  // y^{2h+1} - x^2
  ci.push_back(binom3({3, 2, 0}, {0, 0, 3}));          // x^3 y^2 - z^3
  inst.dual_ci = std::move(ci);
  return inst;
}

FamilyInstance shifted(const Sequence& a, std::int64_t k) {
  if (k < 0) fail(errc::invalid_argument, "shift must be nonnegative");
  std::vector<std::int64_t> e;
  e.reserve(a.size());
  for (auto x : a.entries()) e.push_back(checked_add(x, k));
  std::int64_t g = 0;
  for (auto x : e) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : e) x /= g;
  FamilyInstance inst{"shifted", k, Sequence::validate(std::move(e)),
                      std::nullopt, std::nullopt, {}, std::nullopt, g};
  return inst;
}

}  // namespace monocurve
