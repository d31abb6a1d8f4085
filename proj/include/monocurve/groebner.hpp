#pragma once
// Pure-difference rewriting engine.
//
// Every polynomial the engine touches is a difference of at most two
// monomials with coefficients +1/-1 (a monomial alone when the tail is
// absent, the zero polynomial as nullopt). S-pairs and reduction steps are
// closed on this class, which is what makes the engine exact over any field
// of characteristic 0: no other coefficient ever appears.
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monocurve/monomial.hpp"
#include "monocurve/sequence.hpp"

namespace monocurve {

struct PureDifference {
  Monomial lead;
  std::optional<Monomial> tail;  // nullopt: monomial element

  bool operator==(const PureDifference&) const = default;
};

// plus - minus, oriented so the larger monomial leads (replacing f by -f when
// needed); nullopt when the two monomials cancel
std::optional<PureDifference> make_difference(std::optional<Monomial> plus,
                                              std::optional<Monomial> minus, const OrderSpec& o);

// f_w = x^{w+} - x^{w-}, oriented; nullopt for w = 0
std::optional<PureDifference> from_lattice_vector(const LatticeVector& w, const OrderSpec& o);

// lead - tail as an integer vector (the w with f = f_w, up to the orientation)
LatticeVector exponent_vector(const PureDifference& f);

struct GroebnerBasis {
  std::vector<PureDifference> elements;
  OrderSpec order;
  bool reduced = false;

  bool operator==(const GroebnerBasis&) const = default;
};

std::optional<PureDifference> s_pair(const PureDifference& f, const PureDifference& g,
                                     const OrderSpec& o);

// fully reduces f modulo the list: no monomial of the result is divisible by
// any lead; the reducer is always the first matching element
std::optional<PureDifference> normal_form(std::optional<PureDifference> f,
                                          std::span<const PureDifference> basis,
                                          const OrderSpec& o);

inline constexpr std::size_t default_basis_cap = 1'000'000;

// Buchberger completion. Pairs are processed by increasing degree of the lcm
// (weighted by `grading` when given), then by revlex on the lcm, then by
// insertion index; pairs with coprime leads are skipped. When a grading is
// supplied every generator must be homogeneous for it.
GroebnerBasis buchberger(std::vector<PureDifference> gens, const OrderSpec& o,
                         std::span<const std::int64_t> grading = {},
                         std::size_t basis_cap = default_basis_cap);

// unique reduced basis: minimal monic leads, tails irreducible, sorted by
// ascending lead
GroebnerBasis interreduce(GroebnerBasis g);

// generators of (gens) : (x_1 ... x_n)^inf. For each variable in turn a
// Groebner basis is computed for the grading-compatible revlex order with
// that variable smallest, every element is divided by the largest possible
// power of the variable, and the sweep repeats until a full pass divides
// nothing. The grading must be positive and the generators homogeneous.
std::vector<PureDifference> saturate_all_variables(std::vector<PureDifference> gens,
                                                   std::span<const std::int64_t> grading,
                                                   std::size_t basis_cap = default_basis_cap);

// tail *= x0^(deg lead - deg tail); adds the x0 slot to both monomials
PureDifference homogenize(const PureDifference& f);
GroebnerBasis homogenize_basis(const GroebnerBasis& g);

std::string to_string(const PureDifference& f, bool homogenized = false);
std::string to_string(const GroebnerBasis& g);

}  // namespace monocurve
