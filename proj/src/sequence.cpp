#include "monocurve/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace monocurve {

Sequence Sequence::validate(std::vector<std::int64_t> raw) {
  if (raw.size() < 2) fail(errc::too_short, "need at least 2 entries");
  for (auto x : raw)
    if (x <= 0) fail(errc::non_positive, "entries must be positive");
  std::set<std::int64_t> uniq(raw.begin(), raw.end());
  if (uniq.size() != raw.size()) fail(errc::not_distinct, "entries must be distinct");
  if (*std::max_element(raw.begin(), raw.end()) != raw.back())
    fail(errc::max_not_last, "the maximal entry must be last");
  std::int64_t g = 0;
  for (auto x : raw) g = std::gcd(g, x);
  if (g != 1) fail(errc::gcd_not_one, "gcd of entries is " + std::to_string(g));
  return Sequence(std::move(raw));
}

Sequence dual(const Sequence& a) {
  std::vector<std::int64_t> d;
  d.reserve(a.size());
  for (std::size_t i = 0; i + 1 < a.size(); ++i) d.push_back(checked_sub(a.an(), a.entries()[i]));
  d.push_back(a.an());
  return Sequence::validate(std::move(d));
}

LatticeVector sigma(const LatticeVector& w) {
  if (w.empty()) fail(errc::invalid_argument, "sigma of empty vector");
  LatticeVector r = w;
  std::int64_t s = 0;
  for (auto x : w) s = checked_add(s, x);
  r.back() = checked_sub(0, s);
  return r;
}

std::int64_t pairing(const LatticeVector& w, const Sequence& a) {
  if (w.size() != a.size()) fail(errc::dimension_mismatch, "vector/sequence size mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    s = checked_add(s, checked_mul(w[i], a.entries()[i]));
  return s;
}

std::vector<LatticeVector> integer_kernel(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t d = rows.size();
  if (d == 0) fail(errc::invalid_argument, "empty matrix");
  const std::size_t m = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != m) fail(errc::dimension_mismatch, "ragged matrix");

  auto a = rows;  // d x m, columns reduced in place
  std::vector<std::vector<std::int64_t>> u(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;  // u is m x m, column-major ops below

  auto swap_cols = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t r = 0; r < d; ++r) std::swap(a[r][p], a[r][q]);
    for (std::size_t r = 0; r < m; ++r) std::swap(u[r][p], u[r][q]);
  };
  auto axpy_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    // col_dst -= q * col_src
    if (q == 0) return;
    for (std::size_t r = 0; r < d; ++r) a[r][dst] = checked_sub(a[r][dst], checked_mul(q, a[r][src]));
    for (std::size_t r = 0; r < m; ++r) u[r][dst] = checked_sub(u[r][dst], checked_mul(q, u[r][src]));
  };

  std::size_t col = 0;
  for (std::size_t row = 0; row < d && col < m; ++row) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t j = col; j < m; ++j)
        if (a[row][j] != 0 && (best == m || std::llabs(a[row][j]) < std::llabs(a[row][best])))
          best = j;
      if (best == m) break;  // row is zero from col on
      swap_cols(col, best);
      bool clean = true;
      for (std::size_t j = col + 1; j < m; ++j) {
        std::int64_t q = a[row][j] / a[row][col];
        axpy_col(j, col, q);
        if (a[row][j] != 0) clean = false;
      }
      if (clean) {
        ++col;
        break;
      }
    }
  }

  std::vector<LatticeVector> kernel;
  for (std::size_t j = col; j < m; ++j) {
    LatticeVector v(m);
    for (std::size_t r = 0; r < m; ++r) v[r] = u[r][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<LatticeVector> lattice_kernel_basis(const Sequence& a) {
  auto k = integer_kernel({a.entries()});
  if (k.size() != a.size() - 1)
    fail(errc::internal_inconsistency, "kernel of a nonzero sequence must have rank n-1");
  return k;
}

}  // namespace monocurve
