#pragma once

#include <string>
#include <vector>

#include "rca/rule.hpp"

namespace rca::corpus {

inline const std::vector<int> kReversibleElementary = {15, 51, 85, 170, 204, 240};

/// Radius-0 permutation CA over three symbols.
inline LocalRule cycle3() { return LocalRule::cellwise({1, 2, 0}); }

/// Second-order (Fredkin) automaton built from an elementary rule:
/// (x, y) -> (y, f(y_{-1}, y_0, y_{+1}) xor x), symbol (x, y) encoded as 2x + y.
inline LocalRule second_order(int code) {
  std::vector<int> table(64);
  for (int l = 0; l < 4; ++l)
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) {
        const int y = c & 1, x = c >> 1;
        const int f = (code >> ((l & 1) * 4 + y * 2 + (r & 1))) & 1;
        table[l * 16 + c * 4 + r] = y * 2 + (f ^ x);
      }
  return LocalRule(4, Neighborhood{-1, 0, 1}, std::move(table));
}

/// Explicit inverse of second_order(code): (x, y) -> (f(x_{-1}, x_0, x_{+1}) xor y, x).
inline LocalRule second_order_inverse(int code) {
  std::vector<int> table(64);
  for (int l = 0; l < 4; ++l)
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) {
        const int y = c & 1, x = c >> 1;
        const int f = (code >> ((l >> 1) * 4 + x * 2 + (r >> 1))) & 1;
        table[l * 16 + c * 4 + r] = (f ^ y) * 2 + x;
      }
  return LocalRule(4, Neighborhood{-1, 0, 1}, std::move(table));
}

}  // namespace rca::corpus
