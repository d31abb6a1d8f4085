#include "monocurve/apery.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "monocurve/toric.hpp"

namespace monocurve {

std::vector<std::int64_t> apery_set(const Sequence& a) {
  const std::int64_t an = a.an();
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(an), inf);
  using Node = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
  dist[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [v, r] = pq.top();
    pq.pop();
    if (v != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      std::int64_t ai = a.entries()[i];
      std::int64_t nv = checked_add(v, ai);
      std::int64_t nr = nv % an;
      if (nv < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nv;
        pq.push({nv, nr});
      }
    }
  }
  for (auto d : dist)
    if (d == inf) fail(errc::internal_inconsistency, "unreached residue in Apery computation");
  return dist;
}

std::vector<std::int64_t> mu_values(const Sequence& a) {
  const std::int64_t an = a.an();
  std::vector<std::int64_t> nu = apery_set(a);
  std::int64_t maxnu = *std::max_element(nu.begin(), nu.end());
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> cost(static_cast<std::size_t>(maxnu) + 1, inf);
  cost[0] = 0;
  for (std::int64_t v = 1; v <= maxnu; ++v) {
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
      std::int64_t aj = a.entries()[j];
      if (aj > v || cost[static_cast<std::size_t>(v - aj)] == inf) continue;
      std::int64_t c = checked_add(cost[static_cast<std::size_t>(v - aj)], checked_sub(an, aj));
      cost[static_cast<std::size_t>(v)] = std::min(cost[static_cast<std::size_t>(v)], c);
    }
  }
  std::vector<std::int64_t> mu(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    std::int64_t c = cost[static_cast<std::size_t>(nu[i])];
    if (c == inf) fail(errc::internal_inconsistency, "Apery element without representation");
    mu[i] = c;
  }
  return mu;
}

AperyTable apery_table(const Sequence& a) {
  return apery_table(a, gb_with_last_variable(a));
}

AperyTable apery_table(const Sequence& a, const GroebnerBasis& gb_xn) {
  const std::int64_t an = a.an();
  std::vector<std::int64_t> nu = apery_set(a);
  std::vector<std::int64_t> mu = mu_values(a);
  StandardMonomials sm = standard_monomials(initial_ideal(gb_xn));
  if (static_cast<std::int64_t>(sm.monos.size()) != an)
    fail(errc::internal_inconsistency, "standard monomial count differs from a_n");

  Sequence ad = dual(a);
  AperyTable t;
  t.modulus = an;
  t.rows.resize(static_cast<std::size_t>(an));
  std::vector<bool> filled(static_cast<std::size_t>(an), false);
  for (const auto& m : sm.monos) {
    std::int64_t h = deg_weighted(m, a.entries());
    std::size_t r = static_cast<std::size_t>(h % an);
    if (nu[r] != h || filled[r])
      fail(errc::internal_inconsistency, "phi is not a bijection onto the Apery set");
    filled[r] = true;
    t.rows[r] = AperyRow{h, mu[r], m, deg_weighted(m, ad.entries())};
  }
  return t;
}

Monomial phi(const Sequence& a, std::int64_t h) {
  AperyTable t = apery_table(a);
  if (h >= 0) {
    std::size_t r = static_cast<std::size_t>(h % t.modulus);
    if (t.rows[r].nu == h) return t.rows[r].phi;
  }
  fail(errc::not_in_apery_set, std::to_string(h) + " is not in Ap(H, a_n)");
}

bool cn_good(const Sequence& a) {
  std::vector<std::int64_t> mu = mu_values(a);
  std::vector<std::int64_t> ap_dual = apery_set(dual(a));
  std::sort(mu.begin(), mu.end());
  std::sort(ap_dual.begin(), ap_dual.end());
  return mu == ap_dual;
}

}  // namespace monocurve
