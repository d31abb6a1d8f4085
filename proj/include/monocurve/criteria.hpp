#pragma once
// The verdict layer: every decidable arithmetically-Cohen-Macaulay criterion,
// the consolidated report, and the generator-count bounds.
#include <cstdint>
#include <optional>
#include <vector>

#include "monocurve/apery.hpp"
#include "monocurve/sequence.hpp"
#include "monocurve/toric.hpp"

namespace monocurve {

struct CriterionResults {
  bool d, e, f, g;
  bool duality_b, duality_c;
  bool apery_b, apery_c, apery_d;
  bool cn;

  bool all_equal() const {
    bool v = d;
    return e == v && f == v && g == v && duality_b == v && duality_c == v && apery_b == v &&
           apery_c == v && apery_d == v && cn == v;
  }
};

struct AcmReport {
  Sequence sequence;
  bool verdict;  // defined as criterion d
  CriterionResults criteria;
  std::optional<Monomial> witness;  // first minimal generator divisible by x_n
  std::int64_t mu_ini;              // number of minimal generators of ini(I(a))
  std::int64_t bound_binom;         // binom(a_n, n-2)
};

// x_n divides no minimal generator of ini(I(a)); witness = first offender
bool acm_d(const Sequence& a);
std::pair<bool, std::optional<Monomial>> acm_d_witness(const Sequence& a);

// on the matrix computation of I(a)^h: neither x_n nor x0 (e), respectively
// x_n alone (f), divides a minimal generator of the initial ideal
bool acm_e(const Sequence& a);
bool acm_f(const Sequence& a);

// ini(x_n, I(a)) == (x_n, ini(I(a)))
bool acm_g(const Sequence& a);

// ini(f_{sigma(w)}) == ini(f_w) for all f_w in the reduced basis
bool acm_duality_b(const Sequence& a);

// f_w in G iff f_{sigma(w)} in G', with the sign of sigma(w) respected
bool acm_duality_c(const Sequence& a);

bool acm_apery_b(const Sequence& a);  // ini(x_n, I(a)) == ini(x_n, I(a'))
bool acm_apery_c(const Sequence& a);  // equal standard-monomial sets
bool acm_apery_d(const Sequence& a);  // dual degrees of phi land in Ap(H', a_n)
bool acm_cn(const Sequence& a);       // Apery set is good

// runs every criterion, checks that they agree (InternalInconsistency
// otherwise), and fills the generator-count data
AcmReport is_acm(const Sequence& a);

std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k);

// mu(J) <= binom(n+k-1, n-1) with equality iff J = m^k, for a monomial ideal
// J containing m^k; the containment is verified from the staircase
bool check_mk_bound(const MonomialIdeal& j, std::size_t n, std::int64_t k);

// mu(ini(I(a))) <= binom(a_n, n-2); requires an ACM instance
bool check_initial_bound(const Sequence& a);

}  // namespace monocurve
