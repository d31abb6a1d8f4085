#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace monocurve {

enum class errc {
  too_short,
  non_positive,
  not_distinct,
  gcd_not_one,
  max_not_last,
  dimension_mismatch,
  overflow,
  not_homogeneous,
  tail_larger,
  not_in_apery_set,
  infinite_staircase,
  bound_exceeded,
  basis_cap_exceeded,
  internal_inconsistency,
  invalid_argument,
};

const char* errc_name(errc c);

class mc_error : public std::runtime_error {
public:
  mc_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw mc_error(c, msg); }

// overflow-checked 64-bit arithmetic
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace monocurve
