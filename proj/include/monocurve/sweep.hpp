#pragma once
// Random and exhaustive sequence sweeps with reproducible output.
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monocurve/sequence.hpp"

namespace monocurve {

// unbiased draw from [0, bound); bound > 0. mt19937_64 output is specified by
// the standard, so sweeps are reproducible across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// all valid sequences of length n with a_n <= an_max, in lexicographic order
std::vector<Sequence> enumerate_sequences(std::size_t n, std::int64_t an_max);

// `count` random valid sequences of length n with a_n <= an_max
std::vector<Sequence> random_sequences(std::size_t n, std::int64_t an_max, std::size_t count,
                                       std::uint64_t seed);

struct SweepOptions {
  std::size_t n = 3;
  std::int64_t an_max = 30;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  unsigned jobs = 1;
  std::size_t basis_cap = 1'000'000;
};

struct SweepOutput {
  std::string jsonl;  // one report per line plus a summary line
  std::size_t total = 0;
  std::size_t acm = 0;
};

SweepOutput run_sweep(const SweepOptions& opt);

}  // namespace monocurve
