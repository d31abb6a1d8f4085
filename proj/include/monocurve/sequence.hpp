#pragma once
// Validated input sequences, dual sequences, the sigma involution, and
// integer kernels of small integer matrices.
#include <cstdint>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

class Sequence {
public:
  // Checks: length >= 2, entries positive, pairwise distinct, a_n strictly
  // maximal and stored last, gcd of all entries 1. Entries keep the given
  // order.
  static Sequence validate(std::vector<std::int64_t> raw);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t an() const { return entries_.back(); }

  bool operator==(const Sequence&) const = default;

private:
  explicit Sequence(std::vector<std::int64_t> e) : entries_(std::move(e)) {}
  std::vector<std::int64_t> entries_;
};

// (a_n - a_1, ..., a_n - a_{n-1}, a_n); an involution on valid sequences
Sequence dual(const Sequence& a);

using LatticeVector = std::vector<std::int64_t>;

// (w_1, ..., w_{n-1}, -sum w_i); an involution on Z^n
LatticeVector sigma(const LatticeVector& w);

// <w, a> = sum w_i a_i, checked
std::int64_t pairing(const LatticeVector& w, const Sequence& a);

// basis of the kernel lattice {x : M x = 0} of a d x m integer matrix,
// computed by unimodular column reduction (Hermite-style)
std::vector<LatticeVector> integer_kernel(const std::vector<std::vector<std::int64_t>>& rows);

// n-1 independent generators of L(a) = {w : <w, a> = 0}
std::vector<LatticeVector> lattice_kernel_basis(const Sequence& a);

}  // namespace monocurve
