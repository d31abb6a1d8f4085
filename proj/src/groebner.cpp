#include "monocurve/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monocurve {

std::optional<PureDifference> make_difference(std::optional<Monomial> plus,
                                              std::optional<Monomial> minus, const OrderSpec& o) {
  if (!plus && !minus) return std::nullopt;
  if (plus && !minus) return PureDifference{std::move(*plus), std::nullopt};
  if (!plus && minus) return PureDifference{std::move(*minus), std::nullopt};
  auto cmp = revlex_cmp(*plus, *minus, o);
  if (cmp == std::strong_ordering::equal) return std::nullopt;
  if (cmp == std::strong_ordering::greater) return PureDifference{std::move(*plus), std::move(*minus)};
  return PureDifference{std::move(*minus), std::move(*plus)};
}

std::optional<PureDifference> from_lattice_vector(const LatticeVector& w, const OrderSpec& o) {
  Monomial pos = Monomial::one(w.size());
  Monomial neg = Monomial::one(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) pos.exps[i] = w[i];
    if (w[i] < 0) neg.exps[i] = checked_sub(0, w[i]);
  }
  return make_difference(std::move(pos), std::move(neg), o);
}

LatticeVector exponent_vector(const PureDifference& f) {
  LatticeVector w = f.lead.exps;
  if (f.tail)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = checked_sub(w[i], f.tail->exps[i]);
  return w;
}

std::optional<PureDifference> s_pair(const PureDifference& f, const PureDifference& g,
                                     const OrderSpec& o) {
  Monomial l = lcm(f.lead, g.lead);
  std::optional<Monomial> plus, minus;
  if (g.tail) plus = mul(div_exact(l, g.lead), *g.tail);
  if (f.tail) minus = mul(div_exact(l, f.lead), *f.tail);
  return make_difference(std::move(plus), std::move(minus), o);
}

static const PureDifference* find_reducer(const Monomial& m,
                                          std::span<const PureDifference> basis) {
  for (const auto& g : basis)
    if (divides(g.lead, m)) return &g;
  return nullptr;
}

std::optional<PureDifference> normal_form(std::optional<PureDifference> f,
                                          std::span<const PureDifference> basis,
                                          const OrderSpec& o) {
  for (;;) {
    if (!f) return std::nullopt;
    if (const PureDifference* g = find_reducer(f->lead, basis)) {
      Monomial q = div_exact(f->lead, g->lead);
      std::optional<Monomial> plus;
      if (g->tail) plus = mul(q, *g->tail);
      f = make_difference(std::move(plus), std::move(f->tail), o);
      continue;
    }
    if (f->tail) {
      if (const PureDifference* g = find_reducer(*f->tail, basis)) {
        Monomial q = div_exact(*f->tail, g->lead);
        if (g->tail)
          f->tail = mul(q, *g->tail);
        else
          f->tail.reset();
        continue;
      }
    }
    return f;
  }
}

static void check_homogeneous(std::span<const PureDifference> gens,
                              std::span<const std::int64_t> grading) {
  for (const auto& g : gens)
    if (g.tail && deg_weighted(g.lead, grading) != deg_weighted(*g.tail, grading))
      fail(errc::not_homogeneous, "generator " + to_string(g) + " is not homogeneous");
}

namespace {

struct PairEntry {
  std::int64_t degree;
  Monomial lcm_;
  std::size_t i, j;
  std::size_t seq;
};

struct PairLess {
  const OrderSpec* order;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = revlex_cmp(a.lcm_, b.lcm_, *order);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a.seq < b.seq;
  }
};

}  // namespace

GroebnerBasis buchberger(std::vector<PureDifference> gens, const OrderSpec& o,
                         std::span<const std::int64_t> grading, std::size_t basis_cap) {
  if (!grading.empty()) check_homogeneous(gens, grading);

  // generators may arrive oriented for another order
  std::vector<PureDifference> basis;
  basis.reserve(gens.size());
  for (auto& g : gens) {
    auto oriented = make_difference(std::move(g.lead), std::move(g.tail), o);
    if (oriented) basis.push_back(std::move(*oriented));
  }
  if (basis.size() > basis_cap) fail(errc::basis_cap_exceeded, "too many generators");

  std::set<PairEntry, PairLess> queue(PairLess{&o});
  std::size_t seq = 0;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(basis[i].lead, basis[j].lead);
      std::int64_t deg = grading.empty() ? l.degree() : deg_weighted(l, grading);
      queue.insert(PairEntry{deg, std::move(l), i, j, seq++});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    PairEntry p = *queue.begin();
    queue.erase(queue.begin());
    if (gcd(basis[p.i].lead, basis[p.j].lead).is_one()) continue;  // product criterion
    auto s = s_pair(basis[p.i], basis[p.j], o);
    auto h = normal_form(std::move(s), basis, o);
    if (!h) continue;
    basis.push_back(std::move(*h));
    if (basis.size() > basis_cap)
      fail(errc::basis_cap_exceeded,
           "basis exceeded cap of " + std::to_string(basis_cap) + " elements");
    push_pairs(basis.size() - 1);
  }
  return GroebnerBasis{std::move(basis), o, false};
}

GroebnerBasis interreduce(GroebnerBasis g) {
  const OrderSpec& o = g.order;
  std::stable_sort(g.elements.begin(), g.elements.end(),
                   [&](const PureDifference& a, const PureDifference& b) {
                     return revlex_cmp(a.lead, b.lead, o) == std::strong_ordering::less;
                   });
  std::vector<PureDifference> kept;
  for (auto& f : g.elements) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const PureDifference& k) {
      return divides(k.lead, f.lead);
    });
    if (!redundant) kept.push_back(std::move(f));
  }
  for (auto& f : kept) {
    while (f.tail) {
      const PureDifference* r = find_reducer(*f.tail, kept);
      if (!r) break;
      Monomial q = div_exact(*f.tail, r->lead);
      if (r->tail)
        f.tail = mul(q, *r->tail);
      else
        f.tail.reset();
    }
  }
  return GroebnerBasis{std::move(kept), o, true};
}

// largest k with x_i^k dividing every monomial of f
static std::int64_t common_power(const PureDifference& f, std::size_t i) {
  std::int64_t k = f.lead.exps[i];
  if (f.tail) k = std::min(k, f.tail->exps[i]);
  return k;
}

std::vector<PureDifference> saturate_all_variables(std::vector<PureDifference> gens,
                                                   std::span<const std::int64_t> grading,
                                                   std::size_t basis_cap) {
  if (gens.empty()) return gens;
  const std::size_t n = gens[0].lead.nvars();
  if (grading.size() != n) fail(errc::dimension_mismatch, "grading dimension mismatch");
  for (auto w : grading)
    if (w <= 0) fail(errc::invalid_argument, "grading weights must be positive");
  check_homogeneous(gens, grading);

  std::vector<std::int64_t> weights(grading.begin(), grading.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      OrderSpec oi = OrderSpec::revlex_with_smallest(n, i, weights);
      GroebnerBasis gb = interreduce(buchberger(std::move(gens), oi, grading, basis_cap));
      gens.clear();
      for (auto& f : gb.elements) {
        std::int64_t k = common_power(f, i);
        if (k > 0) {
          changed = true;
          Monomial p = Monomial::var(n, i, k);
          f.lead = div_exact(f.lead, p);
          if (f.tail) f.tail = div_exact(*f.tail, p);
        }
        gens.push_back(std::move(f));
      }
    }
  }
  return gens;
}

PureDifference homogenize(const PureDifference& f) {
  std::int64_t dl = f.lead.degree();
  PureDifference r;
  r.lead = f.lead;
  r.lead.exps.push_back(0);
  if (f.tail) {
    std::int64_t dt = f.tail->degree();
    if (dt > dl) fail(errc::tail_larger, "tail degree exceeds lead degree");
    r.tail = *f.tail;
    r.tail->exps.push_back(checked_sub(dl, dt));
  }
  return r;
}

GroebnerBasis homogenize_basis(const GroebnerBasis& g) {
  GroebnerBasis r;
  r.order = OrderSpec::revlex_homogenized(g.order.nvars());
  r.reduced = g.reduced;
  r.elements.reserve(g.elements.size());
  for (const auto& f : g.elements) r.elements.push_back(homogenize(f));
  std::sort(r.elements.begin(), r.elements.end(),
            [&](const PureDifference& a, const PureDifference& b) {
              return revlex_cmp(a.lead, b.lead, r.order) == std::strong_ordering::less;
            });
  return r;
}

std::string to_string(const PureDifference& f, bool homogenized) {
  std::string s = to_string(f.lead, homogenized);
  if (f.tail) s += " - " + to_string(*f.tail, homogenized);
  return s;
}

std::string to_string(const GroebnerBasis& g) {
  std::string s;
  for (const auto& f : g.elements) {
    s += to_string(f, g.order.homogenized);
    s += "\n";
  }
  return s;
}

}  // namespace monocurve
