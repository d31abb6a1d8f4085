#include "monocurve/criteria.hpp"

#include <algorithm>

namespace monocurve {

namespace {

bool lead_free_of(const GroebnerBasis& g, std::size_t var) {
  return std::all_of(g.elements.begin(), g.elements.end(),
                     [&](const PureDifference& f) { return f.lead.exps[var] == 0; });
}

std::optional<Monomial> first_lead_with(const GroebnerBasis& g, std::size_t var) {
  for (const auto& f : g.elements)
    if (f.lead.exps[var] != 0) return f.lead;
  return std::nullopt;
}

// everything the criteria share for one sequence
struct Ctx {
  Sequence a;
  Sequence ad;
  GroebnerBasis gb;       // reduced GB of I(a)
  GroebnerBasis gb_dual;  // reduced GB of I(a')
  GroebnerBasis gb_h;     // reduced GB of I(a)^h from the matrix
  GroebnerBasis gb_xn;    // reduced GB of (x_n, I(a))
  GroebnerBasis gb_xn_dual;

  explicit Ctx(const Sequence& seq)
      : a(seq),
        ad(dual(seq)),
        gb(toric_gb(a)),
        gb_dual(toric_gb(ad)),
        gb_h(toric_gb_from_matrix(matrix_A(a))),
        gb_xn(gb_with_last_variable(gb, a)),
        gb_xn_dual(gb_with_last_variable(gb_dual, ad)) {}
};

std::pair<bool, std::optional<Monomial>> criterion_d(const Ctx& c) {
  auto w = first_lead_with(c.gb, c.a.size() - 1);
  return {!w.has_value(), w};
}

bool criterion_e(const Ctx& c) {
  return lead_free_of(c.gb_h, c.a.size() - 1) && lead_free_of(c.gb_h, c.a.size());
}

bool criterion_f(const Ctx& c) { return lead_free_of(c.gb_h, c.a.size() - 1); }

bool criterion_g(const Ctx& c) {
  MonomialIdeal lhs = initial_ideal(c.gb_xn);
  std::vector<Monomial> rhs_gens;
  rhs_gens.push_back(Monomial::var(c.a.size(), c.a.size() - 1));
  for (const auto& f : c.gb.elements) rhs_gens.push_back(f.lead);
  return lhs == minimal_generators(std::move(rhs_gens));
}

bool criterion_duality_b(const Ctx& c) {
  for (const auto& f : c.gb.elements) {
    auto img = from_lattice_vector(sigma(exponent_vector(f)), c.gb.order);
    if (!img || !(img->lead == f.lead)) return false;
  }
  return true;
}

// the signed binomial x^{w+} - x^{w-} is an element of the (monic) basis
bool signed_member(const LatticeVector& w, const GroebnerBasis& g) {
  Monomial pos = Monomial::one(w.size());
  Monomial neg = Monomial::one(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) pos.exps[i] = w[i];
    if (w[i] < 0) neg.exps[i] = -w[i];
  }
  PureDifference target{std::move(pos), std::move(neg)};
  return std::find(g.elements.begin(), g.elements.end(), target) != g.elements.end();
}

bool criterion_duality_c(const Ctx& c) {
  for (const auto& f : c.gb.elements)
    if (!signed_member(sigma(exponent_vector(f)), c.gb_dual)) return false;
  for (const auto& f : c.gb_dual.elements)
    if (!signed_member(sigma(exponent_vector(f)), c.gb)) return false;
  return true;
}

bool criterion_apery_b(const Ctx& c) {
  return initial_ideal(c.gb_xn) == initial_ideal(c.gb_xn_dual);
}

bool criterion_apery_c(const Ctx& c) {
  return standard_monomials(initial_ideal(c.gb_xn)) ==
         standard_monomials(initial_ideal(c.gb_xn_dual));
}

bool criterion_apery_d(const Ctx& c) {
  AperyTable t = apery_table(c.a, c.gb_xn);
  std::vector<std::int64_t> ap_dual = apery_set(c.ad);
  std::sort(ap_dual.begin(), ap_dual.end());
  return std::all_of(t.rows.begin(), t.rows.end(), [&](const AperyRow& r) {
    return std::binary_search(ap_dual.begin(), ap_dual.end(), r.dual_deg);
  });
}

}  // namespace

bool acm_d(const Sequence& a) { return acm_d_witness(a).first; }

std::pair<bool, std::optional<Monomial>> acm_d_witness(const Sequence& a) {
  GroebnerBasis g = toric_gb(a);
  auto w = first_lead_with(g, a.size() - 1);
  return {!w.has_value(), w};
}

bool acm_e(const Sequence& a) {
  GroebnerBasis g = toric_gb_from_matrix(matrix_A(a));
  return lead_free_of(g, a.size() - 1) && lead_free_of(g, a.size());
}

bool acm_f(const Sequence& a) {
  return lead_free_of(toric_gb_from_matrix(matrix_A(a)), a.size() - 1);
}

bool acm_g(const Sequence& a) {
  Ctx c(a);
  return criterion_g(c);
}

bool acm_duality_b(const Sequence& a) {
  GroebnerBasis g = toric_gb(a);
  for (const auto& f : g.elements) {
    auto img = from_lattice_vector(sigma(exponent_vector(f)), g.order);
    if (!img || !(img->lead == f.lead)) return false;
  }
  return true;
}

bool acm_duality_c(const Sequence& a) {
  Ctx c(a);
  return criterion_duality_c(c);
}

bool acm_apery_b(const Sequence& a) {
  return initial_ideal(gb_with_last_variable(a)) == initial_ideal(gb_with_last_variable(dual(a)));
}

bool acm_apery_c(const Sequence& a) {
  return standard_monomials(initial_ideal(gb_with_last_variable(a))) ==
         standard_monomials(initial_ideal(gb_with_last_variable(dual(a))));
}

bool acm_apery_d(const Sequence& a) {
  Ctx c(a);
  return criterion_apery_d(c);
}

bool acm_cn(const Sequence& a) { return cn_good(a); }

AcmReport is_acm(const Sequence& a) {
  Ctx c(a);
  CriterionResults r{};
  auto [d, witness] = criterion_d(c);
  r.d = d;
  r.e = criterion_e(c);
  r.f = criterion_f(c);
  r.g = criterion_g(c);
  r.duality_b = criterion_duality_b(c);
  r.duality_c = criterion_duality_c(c);
  r.apery_b = criterion_apery_b(c);
  r.apery_c = criterion_apery_c(c);
  r.apery_d = criterion_apery_d(c);
  r.cn = cn_good(a);
  if (!r.all_equal()) {
    std::string msg = "criteria disagree on";
    for (auto x : a.entries()) msg += " " + std::to_string(x);
    fail(errc::internal_inconsistency, msg);
  }
  AcmReport rep{a, r.d, r, witness, static_cast<std::int64_t>(c.gb.elements.size()),
                binomial_coefficient(a.an(), static_cast<std::int64_t>(a.size()) - 2)};
  return rep;
}

std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;  // exact: r is binom(n-k+i, i) after the division
  }
  return r;
}

bool check_mk_bound(const MonomialIdeal& j, std::size_t n, std::int64_t k) {
  if (j.gens.empty() || j.gens[0].nvars() != n)
    fail(errc::invalid_argument, "ideal dimension mismatch");
  StandardMonomials sm = standard_monomials(j);
  for (const auto& m : sm.monos)
    if (m.degree() >= k)
      fail(errc::invalid_argument, "ideal does not contain the k-th power of the maximal ideal");

  std::int64_t bound =
      binomial_coefficient(static_cast<std::int64_t>(n) + k - 1, static_cast<std::int64_t>(n) - 1);
  std::int64_t mu = static_cast<std::int64_t>(j.gens.size());
  bool is_mk = std::all_of(j.gens.begin(), j.gens.end(),
                           [&](const Monomial& g) { return g.degree() == k; }) &&
               mu == bound;
  // the ideal equals m^k exactly when all minimal generators have degree k
  // and there are binom(n+k-1, n-1) of them
  if (mu > bound) return false;
  if (mu == bound && !is_mk) return false;
  return true;
}

bool check_initial_bound(const Sequence& a) {
  GroebnerBasis g = toric_gb(a);
  if (first_lead_with(g, a.size() - 1))
    fail(errc::invalid_argument, "check_initial_bound requires an ACM instance");
  std::int64_t mu = static_cast<std::int64_t>(g.elements.size());
  return mu <= binomial_coefficient(a.an(), static_cast<std::int64_t>(a.size()) - 2);
}

}  // namespace monocurve
