#pragma once

// Mixed-radix word indexing shared by rule tables and permutation tables.
// The first digit is the most significant one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rca/errors.hpp"

namespace rca {

inline constexpr std::size_t kDefaultTableCap = std::size_t{1} << 24;

/// base^exp, throwing TableSizeCapExceeded when the result exceeds cap.
inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && r > cap / base) throw TableSizeCapExceeded(cap);
    r *= base;
  }
  if (r > cap) throw TableSizeCapExceeded(cap);
  return r;
}

inline std::size_t checked_product(std::span<const int> radix, std::size_t cap) {
  std::size_t r = 1;
  for (int b : radix) {
    if (b != 0 && r > cap / static_cast<std::size_t>(b)) throw TableSizeCapExceeded(cap);
    r *= static_cast<std::size_t>(b);
  }
  if (r > cap) throw TableSizeCapExceeded(cap);
  return r;
}

inline std::size_t encode_word(std::span<const int> digits, std::span<const int> radix) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) idx = idx * radix[k] + digits[k];
  return idx;
}

inline void decode_word(std::size_t idx, std::span<const int> radix, std::span<int> digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<int>(idx % radix[k]);
    idx /= radix[k];
  }
}

inline std::size_t encode_word(std::span<const int> digits, int q) {
  std::size_t idx = 0;
  for (int d : digits) idx = idx * q + d;
  return idx;
}

inline void decode_word(std::size_t idx, int q, std::span<int> digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<int>(idx % q);
    idx /= q;
  }
}

/// Advances digits to the next word in lexicographic order; false after the last word.
inline bool next_word(std::span<int> digits, int q) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < q) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace rca
