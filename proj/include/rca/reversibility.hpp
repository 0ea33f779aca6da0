#pragma once

#include "rca/rule.hpp"

namespace rca {

inline constexpr int kDefaultRadiusCap = 8;

/// Decides injectivity on bi-infinite configurations with the pair graph of the
/// de Bruijn graph: the rule is non-injective iff some edge pair carrying two
/// different neighborhood words lies on a bi-infinite path of equal labels.
bool is_injective(const LocalRule& rule, std::size_t cap = kDefaultTableCap);

/// Synthesizes the minimized inverse rule, trying inverse radii 0, 1, ... radius_cap.
/// Throws NotInjective or RadiusCapExceeded.
LocalRule invert(const LocalRule& rule, int radius_cap = kDefaultRadiusCap,
                 std::size_t cap = kDefaultTableCap);

/// A forward rule together with a verified inverse; both are stored minimized.
class ReversibleCA {
 public:
  /// Synthesizes the inverse.
  static ReversibleCA from_rule(const LocalRule& forward, int radius_cap = kDefaultRadiusCap);
  /// Verifies a caller-supplied inverse by composition; throws NotInverse.
  static ReversibleCA from_pair(const LocalRule& forward, const LocalRule& inverse);

  const LocalRule& forward() const { return forward_; }
  const LocalRule& inverse() const { return inverse_; }
  int alphabet() const { return forward_.alphabet(); }

  /// The automaton G^-1, with G as its inverse.
  ReversibleCA inverted() const { return ReversibleCA(inverse_, forward_); }

 private:
  ReversibleCA(LocalRule f, LocalRule i) : forward_(std::move(f)), inverse_(std::move(i)) {}

  LocalRule forward_;
  LocalRule inverse_;
};

/// G^k for k >= 1.
ReversibleCA power(const ReversibleCA& g, int k);

struct NeighborhoodReport {
  Neighborhood forward;     // N
  Neighborhood inverse;     // neighborhood of the inverse
  Neighborhood transposed;  // negation of the inverse neighborhood
};

NeighborhoodReport neighborhoods(const ReversibleCA& g);

}  // namespace rca
