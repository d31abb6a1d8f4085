#include "monocurve/errors.hpp"

namespace monocurve {

const char* errc_name(errc c) {
  switch (c) {
    case errc::too_short: return "TooShort";
    case errc::non_positive: return "NonPositive";
    case errc::not_distinct: return "NotDistinct";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::max_not_last: return "MaxNotLast";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::overflow: return "Overflow";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::tail_larger: return "TailLarger";
    case errc::not_in_apery_set: return "NotInAperySet";
    case errc::infinite_staircase: return "InfiniteStaircase";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::basis_cap_exceeded: return "BasisCapExceeded";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace monocurve
