#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glaisher {

// Arbitrary-precision signed integer. GMP keeps zero canonical (no sign bit on 0).
using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(10); }

static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_class long constructor must cover int64_t");

inline Integer make_integer(std::int64_t value) { return Integer(static_cast<long>(value)); }

inline bool is_zero(const Integer& value) { return sgn(value) == 0; }

// Thrown when an argument lies outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace glaisher
