#pragma once
// Named sequence families with their known bases and verdicts, for golden
// tests and sweeps.
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/sequence.hpp"

namespace monocurve {

struct FamilyInstance {
  std::string name;
  std::int64_t parameter;  // h, or k for shifted
  Sequence sequence;
  std::optional<std::vector<PureDifference>> expected_gb;
  std::optional<bool> expected_verdict;
  // elements that must reduce to zero against the toric basis
  std::vector<PureDifference> membership_checks;
  // shifted: the complete-intersection generators of the dual toric ideal
  std::optional<std::vector<PureDifference>> dual_ci;
  std::int64_t normalization = 1;  // shifted: gcd divided out of the entries
};

inline constexpr std::int64_t default_h_max_arslan = 12;
inline constexpr std::int64_t default_h_max_prop31 = 12;
inline constexpr std::int64_t default_h_max_bresinsky = 6;

// ((2h-1)2h, (2h-1)(2h+1), 2h(2h+1), 2h(2h+1)+2h-1); never ACM. Carries the
// known minimal generating set and the element x y^{2h-1} t - z^{2h} as
// membership checks.
FamilyInstance bresinsky(std::int64_t h, std::int64_t h_max = default_h_max_bresinsky);

// (h(h+1), h(h+1)+1, (h+1)^2, (h+1)^2+1); always ACM, with an explicit
// reduced basis of 2h+3 binomials.
FamilyInstance arslan(std::int64_t h, std::int64_t h_max = default_h_max_arslan);

// (4, 6h+1, 6h+7); not ACM, reduced basis of h+2 binomials, dual toric ideal
// a complete intersection.
FamilyInstance prop31(std::int64_t h, std::int64_t h_max = default_h_max_prop31);

// entrywise shift a+k, normalized by the gcd of the shifted entries (the
// toric ideal is unchanged by scaling) and revalidated
FamilyInstance shifted(const Sequence& a, std::int64_t k);

}  // namespace monocurve
