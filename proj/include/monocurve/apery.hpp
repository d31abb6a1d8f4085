#pragma once
// Numerical-semigroup side: Apery sets modulo a_n, the phi map into standard
// monomials, the mu minima and Cavaliere-Niesi goodness.
#include <cstdint>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/monomial.hpp"
#include "monocurve/sequence.hpp"

namespace monocurve {

// per-residue minima of H = <a_1..a_n> modulo a_n, indexed by residue
std::vector<std::int64_t> apery_set(const Sequence& a);

// mu_i = min sum r_j (a_n - a_j) over representations nu_i = sum r_j a_j
// with j < n, indexed by residue
std::vector<std::int64_t> mu_values(const Sequence& a);

struct AperyRow {
  std::int64_t nu;
  std::int64_t mu;
  Monomial phi;
  std::int64_t dual_deg;  // deg_{a'} of phi
};

struct AperyTable {
  std::int64_t modulus;
  std::vector<AperyRow> rows;  // indexed by residue
};

// builds the full table and verifies that phi is a bijection from the Apery
// set onto the standard monomials of ini(x_n, I(a))
AperyTable apery_table(const Sequence& a);
// same, reusing an already computed reduced basis of (x_n, I(a))
AperyTable apery_table(const Sequence& a, const GroebnerBasis& gb_xn);

// the revlex-smallest monomial of a-degree h, for h in Ap(H, a_n)
Monomial phi(const Sequence& a, std::int64_t h);

// true iff {mu_i} equals Ap(H', a_n) as sets
bool cn_good(const Sequence& a);

}  // namespace monocurve
