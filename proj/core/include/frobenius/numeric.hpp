#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobenius/errors.hpp"

namespace frobenius {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y, const char* what) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw CapacityError(std::string("integer overflow in ") + what);
  return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y, const char* what) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw CapacityError(std::string("integer overflow in ") + what);
  return r;
}

}  // namespace checked

// Throws DomainError unless a, b are distinct, coprime and both >= `min`.
void require_coprime_pair(std::int64_t a, std::int64_t b, std::int64_t min = 2);

}  // namespace frobenius
