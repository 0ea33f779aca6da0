#pragma once

// Bijections on words over finitely many tracked cells, and their localization.
//
// A doubled configuration has two tracks; cell (t, p) is position p on track t.
// A permutation f on window X is localized upon Y when f = f_Y x id_{X\Y}.
// Localized sets are closed under intersection, so a unique minimal one exists.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rca/words.hpp"

namespace rca {

struct TrackedCell {
  int track = 0;
  int position = 0;

  friend auto operator<=>(const TrackedCell&, const TrackedCell&) = default;
};

/// Sorted (track-major, then position) list of distinct cells.
using CellSet = std::vector<TrackedCell>;

CellSet make_cell_set(std::vector<TrackedCell> cells);
CellSet set_intersection(const CellSet& a, const CellSet& b);
CellSet set_union(const CellSet& a, const CellSet& b);
bool is_subset(const CellSet& a, const CellSet& b);
std::string to_string(const CellSet& cells);

using TrackAlphabets = std::array<int, 2>;

class FinitePermutation {
 public:
  /// Window must be sorted and duplicate-free; table must be a bijection on
  /// the words over the window. Throws NotAPermutation otherwise.
  FinitePermutation(CellSet window, TrackAlphabets alphabets, std::vector<std::uint32_t> table);

  static FinitePermutation identity(CellSet window, TrackAlphabets alphabets);
  /// Exchange of the two tracks at one position.
  static FinitePermutation swap(int position, int alphabet);
  /// A permutation of the alphabet applied at a single cell.
  static FinitePermutation at_cell(TrackedCell cell, const std::vector<int>& perm,
                                   TrackAlphabets alphabets);

  const CellSet& window() const { return window_; }
  const TrackAlphabets& alphabets() const { return alphabets_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  /// Radix of each window cell, in window order.
  const std::vector<int>& radix() const { return radix_; }

  std::uint32_t operator()(std::size_t word) const { return table_[word]; }

  /// Same permutation with every position shifted by `offset`.
  FinitePermutation translated(int offset) const;
  FinitePermutation inverse() const;

  friend bool operator==(const FinitePermutation& a, const FinitePermutation& b) {
    return a.window_ == b.window_ && a.alphabets_ == b.alphabets_ && a.table_ == b.table_;
  }

 private:
  CellSet window_;
  TrackAlphabets alphabets_;
  std::vector<int> radix_;
  std::vector<std::uint32_t> table_;
};

/// Throws NotLocalized when y is not contained in the window.
bool is_localized(const FinitePermutation& f, const CellSet& y);

enum class ScanOrder { canonical, reversed };

/// Loc(f), by greedy removal of window cells.
CellSet localization(const FinitePermutation& f, ScanOrder order = ScanOrder::canonical);

/// The factor f_Y. Throws NotLocalized unless is_localized(f, y).
FinitePermutation restrict(const FinitePermutation& f, const CellSet& y);

/// f x id on a larger window.
FinitePermutation extend(const FinitePermutation& f, const CellSet& window);

/// Restriction to Loc(f).
inline FinitePermutation shrink(const FinitePermutation& f) { return restrict(f, localization(f)); }

/// True when both permutations act identically once extended to a common window.
bool same_action(const FinitePermutation& a, const FinitePermutation& b);

/// Header line of `t:p` cells, then `inword -> outword` per input word.
/// Symbols are written as single base-36 digits; the empty word is written `.`.
std::string dump_permutation(const FinitePermutation& f);
FinitePermutation parse_permutation_dump(std::string_view text, TrackAlphabets alphabets);

}  // namespace rca
