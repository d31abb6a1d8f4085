#include "monocurve/toric.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace monocurve {

MonomialIdeal minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), deglex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return MonomialIdeal{std::move(kept)};
}

bool contains(const MonomialIdeal& j, const Monomial& m) {
  return std::any_of(j.gens.begin(), j.gens.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

GroebnerBasis toric_gb(const Sequence& a, std::size_t basis_cap) {
  const std::size_t n = a.size();
  OrderSpec o = OrderSpec::revlex(n);
  std::vector<PureDifference> gens;
  for (const auto& w : lattice_kernel_basis(a)) {
    auto f = from_lattice_vector(w, o);
    if (f) gens.push_back(std::move(*f));
  }
  auto sat = saturate_all_variables(std::move(gens), a.entries(), basis_cap);
  return interreduce(buchberger(std::move(sat), o, a.entries(), basis_cap));
}

std::vector<std::vector<std::int64_t>> matrix_A(const Sequence& a) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> row0(n + 1, 0), row1(n + 1, 0);
  row1[0] = a.an();
  for (std::size_t i = 0; i < n; ++i) {
    row0[i + 1] = a.entries()[i];
    row1[i + 1] = checked_sub(a.an(), a.entries()[i]);
  }
  return {row0, row1};
}

// recovers the sequence from the matrix and checks the shape of eq-style
// columns (0, a_n), (a_i, a_n - a_i), (a_n, 0)
static Sequence sequence_from_matrix(const std::vector<std::vector<std::int64_t>>& A) {
  if (A.size() != 2) fail(errc::invalid_argument, "matrix must have 2 rows");
  const std::size_t m = A[0].size();
  if (A[1].size() != m || m < 3) fail(errc::invalid_argument, "matrix must be 2 x (n+1), n >= 2");
  std::vector<std::int64_t> raw(A[0].begin() + 1, A[0].end());
  Sequence a = Sequence::validate(std::move(raw));
  if (A[0][0] != 0 || A[1][0] != a.an())
    fail(errc::invalid_argument, "first column must be (0, a_n)");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (A[1][i + 1] != checked_sub(a.an(), a.entries()[i]))
      fail(errc::invalid_argument, "second row must be a_n - a_i");
  return a;
}

GroebnerBasis toric_gb_from_matrix(const std::vector<std::vector<std::int64_t>>& A,
                                   std::size_t basis_cap) {
  Sequence a = sequence_from_matrix(A);
  const std::size_t n = a.size();
  // engine layout: variables x1..xn then the homogenizing slot
  std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(n + 1));
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t i = 0; i < n; ++i) rows[r][i] = A[r][i + 1];
    rows[r][n] = A[r][0];
  }
  OrderSpec o = OrderSpec::revlex_homogenized(n);
  std::vector<PureDifference> gens;
  for (const auto& w : integer_kernel(rows)) {
    auto f = from_lattice_vector(w, o);
    if (f) gens.push_back(std::move(*f));
  }
  std::vector<std::int64_t> ones(n + 1, 1);
  auto sat = saturate_all_variables(std::move(gens), ones, basis_cap);
  return interreduce(buchberger(std::move(sat), o, ones, basis_cap));
}

GroebnerBasis gb_with_last_variable(const Sequence& a, std::size_t basis_cap) {
  return gb_with_last_variable(toric_gb(a, basis_cap), a, basis_cap);
}

GroebnerBasis gb_with_last_variable(const GroebnerBasis& toric, const Sequence& a,
                                    std::size_t basis_cap) {
  const std::size_t n = a.size();
  std::vector<PureDifference> gens = toric.elements;
  gens.push_back(PureDifference{Monomial::var(n, n - 1), std::nullopt});
  return interreduce(buchberger(std::move(gens), toric.order, a.entries(), basis_cap));
}

MonomialIdeal initial_ideal(const GroebnerBasis& g) {
  if (!g.reduced) fail(errc::invalid_argument, "initial_ideal expects a reduced basis");
  std::vector<Monomial> leads;
  leads.reserve(g.elements.size());
  for (const auto& f : g.elements) leads.push_back(f.lead);
  return minimal_generators(std::move(leads));
}

StandardMonomials standard_monomials(const MonomialIdeal& j, std::size_t bound) {
  if (j.gens.empty()) fail(errc::infinite_staircase, "ideal has no generators");
  const std::size_t n = j.gens[0].nvars();
  for (std::size_t v = 0; v < n; ++v) {
    bool has_pure_power = std::any_of(j.gens.begin(), j.gens.end(), [&](const Monomial& g) {
      if (g.exps[v] == 0) return false;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && g.exps[u] != 0) return false;
      return true;
    });
    if (!has_pure_power)
      fail(errc::infinite_staircase,
           "no pure power of variable " + std::to_string(v + 1) + " in the ideal");
  }

  std::set<std::vector<std::int64_t>> seen;
  std::deque<Monomial> queue;
  Monomial one = Monomial::one(n);
  if (contains(j, one)) return StandardMonomials{};
  seen.insert(one.exps);
  queue.push_back(std::move(one));
  std::vector<Monomial> out;
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m;
      next.exps[v] = checked_add(next.exps[v], 1);
      if (seen.count(next.exps) || contains(j, next)) continue;
      if (seen.size() >= bound)
        fail(errc::bound_exceeded, "more than " + std::to_string(bound) + " standard monomials");
      seen.insert(next.exps);
      queue.push_back(std::move(next));
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), deglex_less);
  return StandardMonomials{std::move(out)};
}

}  // namespace monocurve
