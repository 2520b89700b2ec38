#pragma once

#include <cstdint>
#include <stdexcept>

namespace kostka::detail {

// All externally visible counts are 64-bit; sums and products over them
// fail loudly instead of wrapping.

inline std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit counter overflow in addition");
  }
  return r;
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit counter overflow in multiplication");
  }
  return r;
}

}  // namespace kostka::detail
