#pragma once

// Locally time-symmetric automata: G^-1 = H G H where H applies an involution h
// of the alphabet at every cell. For such G the square has an exact block
// representation G^2 = H prod_i L_i with L_i = G^-1 h_i G.

#include <span>
#include <vector>

#include "rca/block_rep.hpp"

namespace rca {

/// Throws NotAPermutation if the table is not a permutation of 0..q-1.
bool is_involution(std::span<const int> table);

class Involution {
 public:
  /// Throws NotAPermutation, or Error when the permutation is not self-inverse.
  explicit Involution(std::vector<int> table);

  static Involution identity(int alphabet);
  /// (x, y) -> (y, x) on the pair alphabet x * q + y.
  static Involution pair_swap(int alphabet);

  const std::vector<int>& table() const { return table_; }
  int alphabet() const { return static_cast<int>(table_.size()); }
  bool is_identity() const;

  /// The radius-0 automaton H.
  LocalRule as_rule() const { return LocalRule::cellwise(table_); }
  /// h_i on single-track cell (0, position).
  FinitePermutation at(int position) const;

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  std::vector<int> table_;
};

/// Parses a whitespace-separated permutation of 0..q-1.
Involution parse_involution(std::string_view text);
std::string to_string(const Involution& h);

bool is_ltsca(const ReversibleCA& g, const Involution& h);

inline constexpr int kMaxEnumeratedAlphabet = 8;

/// Every involution h with is_ltsca(g, h), in lexicographic order of tables.
std::vector<Involution> find_time_symmetries(const ReversibleCA& g);

struct TimeSymmetrization {
  ReversibleCA automaton;  // F x F^-1 with inverse F^-1 x F
  Involution symmetry;     // pair swap
};

TimeSymmetrization time_symmetrize(const ReversibleCA& f);

/// f^-1 ∘ b ∘ f (f applied first) shrunk to its localization. The map f acts on
/// the tracks flagged in `acting`. Throws ContainmentViolation unless the
/// result is localized within Loc(b) dilated by BN(f) on the acting tracks.
FinitePermutation conjugate_block(const ReversibleCA& f, const FinitePermutation& b,
                                  TrackMask acting = kTrack0);

struct SquareRepresentation {
  BlockCircuit circuit;
  VerificationReport report;
  FinitePermutation l0;         // L_0 shrunk to its localization
  Neighborhood block_nbhd;      // BN(g)
  bool l0_within_bn = false;    // Loc(L_0) ⊆ BN(g)
};

/// Exact two-layer circuit for g^2 (layer 1: L_i at every anchor, layer 2: h
/// at every cell), verified against compose(g, g). Throws NotLTSCA or PeriodTooSmall.
SquareRepresentation ebr_of_square(const ReversibleCA& g, const Involution& h, int period,
                                   const VerifyOptions& options = {});

}  // namespace rca
