#pragma once

// Block representation of G x G^-1.
//
// The reversible update K_i = (G^-1 x id) Swap_i (G x id) acts on doubled
// configurations (track 0 carries c, track 1 carries d). Each K_i is a finite
// permutation whose localization is {0} x (i + BN) together with (1, i), and
//   G x G^-1 = Swap * prod_i K_i.
// Compositions are read right to left: the rightmost factor is applied first.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rca/localization.hpp"
#include "rca/reversibility.hpp"
#include "rca/rule.hpp"

namespace rca {

/// (N - N + Ñ) ∩ (Ñ - Ñ + N), with Ñ the negated inverse neighborhood.
Neighborhood bn_upper_bound(const ReversibleCA& g);

/// Tracks on which the global map acts; other tracks are left untouched.
using TrackMask = std::array<bool, 2>;
inline constexpr TrackMask kTrack0 = {true, false};

/// Tabulates f^-1 ∘ b ∘ f on `window` by evaluating the global maps on a padded
/// segment, once with padding symbol 0 and once with q-1. Throws
/// PaddingDependence or NonIdentityOutsideWindow if the window is too small.
FinitePermutation conjugate_on_window(const ReversibleCA& f, const FinitePermutation& b,
                                      const CellSet& window, TrackMask acting = kTrack0,
                                      std::size_t cap = kDefaultTableCap);

/// K_i tabulated on {0} x (i + bn_upper_bound(g)) ∪ {(1, i)}.
FinitePermutation reversible_update(const ReversibleCA& g, int i);

/// BN read off Loc(K_0); throws ShapeViolation unless Loc(K_0) = {0} x BN ∪ {(1,0)}.
Neighborhood block_neighborhood(const ReversibleCA& g);

/// max position - min position over all cells of the window.
int window_span(const CellSet& window);

struct Placement {
  int anchor = 0;
  /// Positions are relative to the anchor and taken modulo the period.
  FinitePermutation block;
};

struct Layer {
  std::string name;
  std::vector<Placement> placements;
};

struct BlockCircuit {
  int period = 0;
  int alphabet = 0;  // per-track alphabet
  int tracks = 1;
  std::string construction;
  std::vector<Layer> layers;

  /// Alphabet of the packed configurations the circuit acts on: alphabet^tracks.
  int cell_alphabet() const { return tracks == 2 ? alphabet * alphabet : alphabet; }
};

/// Layer 1: K_0 shrunk to its localization, placed at every anchor.
/// Layer 2: Swap_i at every position.
BlockCircuit assemble_circuit(const ReversibleCA& g, int period);

/// Applies layers in order. The input packs track 0 as the most significant
/// component, (c, d) -> c * q + d, matching product().
CyclicConfig apply_circuit(const BlockCircuit& circuit, const CyclicConfig& x);
/// Same, with the placements of each layer applied in a shuffled order.
CyclicConfig apply_circuit_shuffled(const BlockCircuit& circuit, const CyclicConfig& x,
                                    std::uint64_t seed);

enum class VerifyMode { automatic, exhaustive, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::automatic;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 20;
};

struct Counterexample {
  CyclicConfig input;
  CyclicConfig expected;
  CyclicConfig actual;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::exhaustive;  // exhaustive or sampled, never automatic
  std::uint64_t tested = 0;
  std::uint64_t mismatches = 0;
  std::optional<Counterexample> first_counterexample;

  bool passed() const { return mismatches == 0; }
};

/// Differential check of a circuit against a reference rule on cyclic configurations.
VerificationReport verify_circuit(const BlockCircuit& circuit, const LocalRule& reference,
                                  const VerifyOptions& options = {});

/// assemble_circuit(g, n) against product(forward, inverse).
VerificationReport verify_block_representation(const ReversibleCA& g, int period,
                                               const VerifyOptions& options = {});

std::string dump_circuit(const BlockCircuit& circuit);

std::string to_string(VerifyMode mode);

}  // namespace rca
