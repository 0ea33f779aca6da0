#pragma once

// One-dimensional cellular automata given by finite local-rule tables.
//
// Convention: a rule with neighborhood {o_1 < ... < o_m} computes
//   output_i = table[c_{i+o_1} ... c_{i+o_m}]
// where the word index is read with the leftmost offset most significant.
// For the neighborhood {-1, 0, 1} this coincides with elementary CA numbering.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rca/words.hpp"

namespace rca {

/// Finite sorted set of integer offsets. Also used for the block neighborhood
/// and its bounds, hence the Minkowski operations below.
class Neighborhood {
 public:
  Neighborhood() = default;
  /// Sorts the offsets; duplicates are rejected.
  explicit Neighborhood(std::vector<int> offsets);
  Neighborhood(std::initializer_list<int> offsets) : Neighborhood(std::vector<int>(offsets)) {}

  static Neighborhood range(int lo, int hi);

  const std::vector<int>& offsets() const { return offsets_; }
  std::size_t size() const { return offsets_.size(); }
  bool empty() const { return offsets_.empty(); }
  bool contains(int offset) const;
  int min() const { return offsets_.front(); }
  int max() const { return offsets_.back(); }
  /// max - min, or 0 when empty.
  int span() const { return empty() ? 0 : max() - min(); }
  /// Largest absolute offset, or 0 when empty.
  int reach() const;
  /// Index of offset within offsets(); the offset must be present.
  std::size_t index_of(int offset) const;

  bool is_subset_of(const Neighborhood& other) const;

  friend bool operator==(const Neighborhood&, const Neighborhood&) = default;
  friend auto operator<=>(const Neighborhood&, const Neighborhood&) = default;

 private:
  std::vector<int> offsets_;
};

/// Minkowski sum {a + b}.
Neighborhood operator+(const Neighborhood& a, const Neighborhood& b);
/// Minkowski difference {a - b}.
Neighborhood operator-(const Neighborhood& a, const Neighborhood& b);
Neighborhood negate(const Neighborhood& a);
Neighborhood intersect(const Neighborhood& a, const Neighborhood& b);
Neighborhood unite(const Neighborhood& a, const Neighborhood& b);
/// Set difference a \ b.
Neighborhood subtract(const Neighborhood& a, const Neighborhood& b);

/// "{-1, 1}" style rendering.
std::string to_string(const Neighborhood& n);

class LocalRule {
 public:
  /// Validates q >= 1, table length q^|neighborhood| and entry ranges.
  LocalRule(int alphabet, Neighborhood neighborhood, std::vector<int> table);

  /// Elementary CA by Wolfram code, neighborhood {-1, 0, 1}.
  static LocalRule elementary(int code);
  static LocalRule identity(int alphabet);
  /// Radius-0 rule applying perm to every cell.
  static LocalRule cellwise(std::vector<int> perm);

  int alphabet() const { return alphabet_; }
  const Neighborhood& neighborhood() const { return neighborhood_; }
  const std::vector<int>& table() const { return table_; }

  /// Output for a word given in neighborhood order.
  int operator()(std::span<const int> word) const { return table_[encode_word(word, alphabet_)]; }

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  int alphabet_;
  Neighborhood neighborhood_;
  std::vector<int> table_;
};

struct CyclicConfig {
  int alphabet = 1;
  std::vector<int> cells;

  int period() const { return static_cast<int>(cells.size()); }
  friend bool operator==(const CyclicConfig&, const CyclicConfig&) = default;
};

/// Builds the i-th configuration of period n in lexicographic order (cell 0 most significant).
CyclicConfig config_from_index(int alphabet, int period, std::size_t index);
std::size_t config_index(const CyclicConfig& c);

/// Parses the rule-file grammar: `eca <code>`, or `alphabet`, `neighborhood` and
/// `table` directives. '#' starts a comment.
LocalRule parse_rule(std::string_view text);
/// Inverse of parse_rule for the explicit three-directive form.
std::string format_rule(const LocalRule& rule);

CyclicConfig apply_cyclic(const LocalRule& rule, const CyclicConfig& c);

/// Same rule with every offset the table ignores removed.
LocalRule minimize_neighborhood(const LocalRule& rule);

/// The same global map expressed on a superset of the rule's neighborhood.
LocalRule reexpress(const LocalRule& rule, const Neighborhood& superset,
                    std::size_t cap = kDefaultTableCap);

/// Minimized rule of c -> a(b(c)).
LocalRule compose(const LocalRule& a, const LocalRule& b, std::size_t cap = kDefaultTableCap);

/// Rule on the pair alphabet (x, y) -> x * q_b + y acting as a on the first
/// component and b on the second; minimized.
LocalRule product(const LocalRule& a, const LocalRule& b, std::size_t cap = kDefaultTableCap);

/// True iff both rules define the same global map.
bool equal(const LocalRule& a, const LocalRule& b);

}  // namespace rca
