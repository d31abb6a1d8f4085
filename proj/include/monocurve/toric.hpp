#pragma once
// Assembly layer: the toric ideal I(a), its homogenization via the matrix A,
// the ideal (x_n, I(a)), initial ideals and standard monomials.
#include <cstddef>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/monomial.hpp"
#include "monocurve/sequence.hpp"

namespace monocurve {

struct MonomialIdeal {
  std::vector<Monomial> gens;  // minimal generators, sorted by (degree, exps)

  bool operator==(const MonomialIdeal&) const = default;
};

struct StandardMonomials {
  std::vector<Monomial> monos;  // sorted by (degree, exps)

  bool operator==(const StandardMonomials&) const = default;
};

// drops duplicates and non-minimal generators, sorts canonically
MonomialIdeal minimal_generators(std::vector<Monomial> gens);

bool contains(const MonomialIdeal& j, const Monomial& m);

// reduced Groebner basis of I(a) under revlex with x_n smallest:
// kernel basis -> saturation -> Buchberger -> interreduction
GroebnerBasis toric_gb(const Sequence& a, std::size_t basis_cap = default_basis_cap);

// the 2 x (n+1) matrix with columns (0, a_n), (a_i, a_n - a_i), (a_n, 0);
// column 0 is the homogenizing variable
std::vector<std::vector<std::int64_t>> matrix_A(const Sequence& a);

// reduced Groebner basis of I(a)^h under revlex with x0 the least variable,
// computed independently from the kernel of the matrix
GroebnerBasis toric_gb_from_matrix(const std::vector<std::vector<std::int64_t>>& A,
                                   std::size_t basis_cap = default_basis_cap);

// reduced Groebner basis of (x_n) + I(a)
GroebnerBasis gb_with_last_variable(const Sequence& a, std::size_t basis_cap = default_basis_cap);
// same, reusing an already computed reduced basis of I(a)
GroebnerBasis gb_with_last_variable(const GroebnerBasis& toric, const Sequence& a,
                                    std::size_t basis_cap = default_basis_cap);

// minimal generators = leads of a reduced basis
MonomialIdeal initial_ideal(const GroebnerBasis& g);

inline constexpr std::size_t default_monomial_bound = 1'000'000;

// the finite order ideal of monomials outside j; requires a pure power of
// every variable among the generators
StandardMonomials standard_monomials(const MonomialIdeal& j,
                                     std::size_t bound = default_monomial_bound);

}  // namespace monocurve
