#pragma once
// Exponent-vector monomials and the reverse lexicographic orders.
//
// An OrderSpec lists the variables from the smallest upward, so the paper's
// order with x_n smallest and the homogenized order with x_0 below x_n are
// the same comparison routine on different rankings. An optional weight
// vector turns the degree component into a weighted degree (used by the
// saturation steps); by default the order is graded by total degree.
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

struct Monomial {
  std::vector<std::int64_t> exps;

  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> e);

  static Monomial one(std::size_t nvars);
  static Monomial var(std::size_t nvars, std::size_t i, std::int64_t k = 1);

  std::size_t nvars() const { return exps.size(); }
  bool is_one() const;
  std::int64_t degree() const;  // total degree, checked

  bool operator==(const Monomial&) const = default;
};

std::int64_t deg_weighted(const Monomial& m, std::span<const std::int64_t> weights);

Monomial mul(const Monomial& a, const Monomial& b);
Monomial div_exact(const Monomial& a, const Monomial& b);  // pre: b divides a
bool divides(const Monomial& d, const Monomial& m);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

struct OrderSpec {
  std::vector<std::size_t> smallest_first;   // variable indices, least variable first
  bool homogenized = false;                  // last variable slot is x0
  std::vector<std::int64_t> degree_weights;  // empty: total degree

  std::size_t nvars() const { return smallest_first.size(); }

  // revlex on x1..xn with x_n smallest
  static OrderSpec revlex(std::size_t n);
  // revlex on x1..xn,x0 (x0 stored as the last slot) with x0 the least variable
  static OrderSpec revlex_homogenized(std::size_t n);
  // revlex with variable i smallest, the others in standard position
  static OrderSpec revlex_with_smallest(std::size_t n, std::size_t i,
                                        std::vector<std::int64_t> weights = {});

  bool operator==(const OrderSpec&) const = default;
};

std::strong_ordering revlex_cmp(const Monomial& m1, const Monomial& m2, const OrderSpec& o);

// canonical order-free sort key: (total degree, exponents lexicographically)
bool deglex_less(const Monomial& a, const Monomial& b);

// text format: "x1^3*x3^2", aliased "x^3*z^2" for n <= 3; "1" for the empty
// monomial; the x0 slot (when homogenized) prints as "x0^k" after the rest.
std::string to_string(const Monomial& m, bool homogenized = false);
Monomial parse_monomial(const std::string& text, std::size_t nvars, bool homogenized = false);

}  // namespace monocurve
