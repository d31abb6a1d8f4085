#include "monocurve/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monocurve {

Monomial::Monomial(std::vector<std::int64_t> e) : exps(std::move(e)) {
  for (auto x : exps)
    if (x < 0) fail(errc::invalid_argument, "negative exponent in monomial");
}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<std::int64_t>(nvars, 0)); }

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::int64_t k) {
  if (i >= nvars) fail(errc::invalid_argument, "variable index out of range");
  std::vector<std::int64_t> e(nvars, 0);
  e[i] = k;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto x : exps) d = checked_add(d, x);
  return d;
}

std::int64_t deg_weighted(const Monomial& m, std::span<const std::int64_t> weights) {
  if (m.nvars() != weights.size())
    fail(errc::dimension_mismatch, "monomial/weight dimension mismatch");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    d = checked_add(d, checked_mul(m.exps[i], weights[i]));
  return d;
}

static void require_same_dim(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) fail(errc::dimension_mismatch, "monomial dimension mismatch");
}

Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = checked_add(r.exps[i], b.exps[i]);
  return r;
}

Monomial div_exact(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    r.exps[i] -= b.exps[i];
    if (r.exps[i] < 0) fail(errc::invalid_argument, "inexact monomial division");
  }
  return r;
}

bool divides(const Monomial& d, const Monomial& m) {
  require_same_dim(d, m);
  for (std::size_t i = 0; i < d.exps.size(); ++i)
    if (d.exps[i] > m.exps[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(r.exps[i], b.exps[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(r.exps[i], b.exps[i]);
  return r;
}

OrderSpec OrderSpec::revlex(std::size_t n) {
  OrderSpec o;
  o.smallest_first.resize(n);
  for (std::size_t i = 0; i < n; ++i) o.smallest_first[i] = n - 1 - i;
  return o;
}

OrderSpec OrderSpec::revlex_homogenized(std::size_t n) {
  OrderSpec o;
  o.smallest_first.resize(n + 1);
  o.smallest_first[0] = n;  // x0 slot
  for (std::size_t i = 0; i < n; ++i) o.smallest_first[i + 1] = n - 1 - i;
  o.homogenized = true;
  return o;
}

OrderSpec OrderSpec::revlex_with_smallest(std::size_t n, std::size_t i,
                                          std::vector<std::int64_t> weights) {
  if (i >= n) fail(errc::invalid_argument, "variable index out of range");
  OrderSpec o;
  o.smallest_first.push_back(i);
  for (std::size_t v = n; v-- > 0;)
    if (v != i) o.smallest_first.push_back(v);
  o.degree_weights = std::move(weights);
  if (!o.degree_weights.empty() && o.degree_weights.size() != n)
    fail(errc::dimension_mismatch, "order weight dimension mismatch");
  return o;
}

std::strong_ordering revlex_cmp(const Monomial& m1, const Monomial& m2, const OrderSpec& o) {
  if (m1.nvars() != o.nvars() || m2.nvars() != o.nvars())
    fail(errc::dimension_mismatch, "monomial/order dimension mismatch");
  std::int64_t d1, d2;
  if (o.degree_weights.empty()) {
    d1 = m1.degree();
    d2 = m2.degree();
  } else {
    d1 = deg_weighted(m1, o.degree_weights);
    d2 = deg_weighted(m2, o.degree_weights);
  }
  if (d1 != d2) return d1 <=> d2;
  // ties: m1 > m2 iff the first nonzero exponent difference, scanning from the
  // smallest variable upward, is negative
  for (auto v : o.smallest_first) {
    std::int64_t diff = m1.exps[v] - m2.exps[v];
    if (diff != 0) return diff < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool deglex_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps < b.exps;
}

static std::string var_name(std::size_t i, std::size_t base) {
  static const char* xyz[] = {"x", "y", "z"};
  if (base <= 3) return xyz[i];
  return "x" + std::to_string(i + 1);
}

std::string to_string(const Monomial& m, bool homogenized) {
  std::size_t nv = m.nvars();
  std::size_t base = homogenized ? nv - 1 : nv;
  std::string out;
  auto emit = [&](const std::string& name, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < base; ++i) emit(var_name(i, base), m.exps[i]);
  if (homogenized) emit("x0", m.exps[base]);
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& text, std::size_t nvars, bool homogenized) {
  std::size_t base = homogenized ? nvars - 1 : nvars;
  Monomial m = Monomial::one(nvars);
  if (text == "1") return m;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    std::string name = factor;
    std::int64_t e = 1;
    if (auto pos = factor.find('^'); pos != std::string::npos) {
      name = factor.substr(0, pos);
      try {
        e = std::stoll(factor.substr(pos + 1));
      } catch (const std::exception&) {
        fail(errc::invalid_argument, "bad exponent in monomial '" + text + "'");
      }
    }
    if (e < 0) fail(errc::invalid_argument, "negative exponent in monomial '" + text + "'");
    std::size_t idx;
    if (name == "x0" && homogenized) {
      idx = base;
    } else if (base <= 3 && (name == "x" || name == "y" || name == "z")) {
      idx = static_cast<std::size_t>(name[0] - 'x');
    } else if (name.size() >= 2 && name[0] == 'x') {
      std::int64_t k;
      try {
        k = std::stoll(name.substr(1));
      } catch (const std::exception&) {
        fail(errc::invalid_argument, "bad variable '" + name + "'");
        return m;
      }
      if (k < 1 || static_cast<std::size_t>(k) > base)
        fail(errc::invalid_argument, "variable index out of range in '" + text + "'");
      idx = static_cast<std::size_t>(k - 1);
    } else {
      fail(errc::invalid_argument, "bad variable '" + name + "'");
      return m;
    }
    if (idx >= nvars) fail(errc::invalid_argument, "variable index out of range in '" + text + "'");
    m.exps[idx] = checked_add(m.exps[idx], e);
  }
  return m;
}

}  // namespace monocurve
