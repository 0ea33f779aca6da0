#include "rca/block_rep.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <sstream>

namespace rca {

Neighborhood bn_upper_bound(const ReversibleCA& g) {
  const auto nb = neighborhoods(g);
  const Neighborhood& n = nb.forward;
  const Neighborhood& t = nb.transposed;
  return intersect(n - n + t, t - t + n);
}

int window_span(const CellSet& window) {
  if (window.empty()) return 0;
  int lo = window.front().position, hi = lo;
  for (const auto& c : window) {
    lo = std::min(lo, c.position);
    hi = std::max(hi, c.position);
  }
  return hi - lo;
}

// ---------------------------------------------------------------- tabulation

namespace {

/// One step of a rule on a finite segment; -1 marks cells whose value is unknown.
std::vector<int> apply_on_segment(const LocalRule& rule, const std::vector<int>& seg) {
  const int len = static_cast<int>(seg.size());
  const auto& offs = rule.neighborhood().offsets();
  const int q = rule.alphabet();
  std::vector<int> out(seg.size(), -1);
  for (int j = 0; j < len; ++j) {
    std::size_t idx = 0;
    bool known = true;
    for (int o : offs) {
      const int p = j + o;
      if (p < 0 || p >= len || seg[p] < 0) {
        known = false;
        break;
      }
      idx = idx * q + seg[p];
    }
    if (known) out[j] = rule.table()[idx];
  }
  return out;
}

}  // namespace

FinitePermutation conjugate_on_window(const ReversibleCA& f, const FinitePermutation& b,
                                      const CellSet& window, TrackMask acting, std::size_t cap) {
  const TrackAlphabets alph = b.alphabets();
  for (int t = 0; t < 2; ++t)
    if (acting[t] && alph[t] != f.alphabet())
      throw AlphabetMismatch("acting track alphabet differs from the automaton's alphabet");
  for (const auto& c : window)
    if (alph[c.track] < 1) throw Error("window uses a track with no alphabet");

  std::vector<int> radix;
  for (const auto& c : window) radix.push_back(alph[c.track]);
  const std::size_t words = checked_product(radix, cap);

  CellSet cover = set_union(window, b.window());
  if (cover.empty()) return FinitePermutation::identity({}, alph);
  int lo = cover.front().position, hi = lo;
  for (const auto& c : cover) {
    lo = std::min(lo, c.position);
    hi = std::max(hi, c.position);
  }
  // Margin so that every cell the conjugate could change is still known after both steps.
  const int margin = 2 * (f.forward().neighborhood().reach() + f.inverse().neighborhood().reach());
  const int base = lo - margin;
  const int len = hi - lo + 1 + 2 * margin;
  auto at = [&](int position) { return position - base; };

  std::vector<std::uint32_t> table(words);
  std::vector<int> digits(window.size()), bdigits(b.window().size());
  std::array<std::vector<int>, 2> seg;
  std::vector<bool> in_window0(len, false), in_window1(len, false);
  for (const auto& c : window) (c.track == 0 ? in_window0 : in_window1)[at(c.position)] = true;

  for (int pass = 0; pass < 2; ++pass) {
    std::array<int, 2> pad{};
    for (int t = 0; t < 2; ++t) pad[t] = pass == 0 ? 0 : std::max(alph[t] - 1, 0);
    for (std::size_t w = 0; w < words; ++w) {
      decode_word(w, radix, digits);
      for (int t = 0; t < 2; ++t) seg[t].assign(len, pad[t]);
      for (std::size_t k = 0; k < window.size(); ++k)
        seg[window[k].track][at(window[k].position)] = digits[k];

      for (int t = 0; t < 2; ++t)
        if (acting[t]) seg[t] = apply_on_segment(f.forward(), seg[t]);
      for (std::size_t k = 0; k < b.window().size(); ++k) {
        const int v = seg[b.window()[k].track][at(b.window()[k].position)];
        if (v < 0) throw Error("internal: block cell outside the evaluated segment");
        bdigits[k] = v;
      }
      decode_word(b(encode_word(bdigits, b.radix())), b.radix(), bdigits);
      for (std::size_t k = 0; k < b.window().size(); ++k)
        seg[b.window()[k].track][at(b.window()[k].position)] = bdigits[k];
      for (int t = 0; t < 2; ++t)
        if (acting[t]) seg[t] = apply_on_segment(f.inverse(), seg[t]);

      for (int t = 0; t < 2; ++t) {
        const auto& inw = t == 0 ? in_window0 : in_window1;
        for (int p = 0; p < len; ++p)
          if (!inw[p] && seg[t][p] >= 0 && seg[t][p] != pad[t])
            throw NonIdentityOutsideWindow("conjugate changes cell (" + std::to_string(t) + "," +
                                           std::to_string(p + base) + ") outside window " +
                                           to_string(window));
      }
      for (std::size_t k = 0; k < window.size(); ++k) {
        const int v = seg[window[k].track][at(window[k].position)];
        if (v < 0) throw Error("internal: window cell outside the evaluated segment");
        digits[k] = v;
      }
      const auto out = static_cast<std::uint32_t>(encode_word(digits, radix));
      if (pass == 0)
        table[w] = out;
      else if (table[w] != out)
        throw PaddingDependence("conjugate depends on cells outside window " + to_string(window));
    }
  }
  return FinitePermutation(window, alph, std::move(table));
}

FinitePermutation reversible_update(const ReversibleCA& g, int i) {
  const int q = g.alphabet();
  const Neighborhood bound = bn_upper_bound(g);
  std::vector<TrackedCell> cells;
  for (int o : bound.offsets()) cells.push_back({0, i + o});
  cells.push_back({1, i});
  return conjugate_on_window(g, FinitePermutation::swap(i, q), make_cell_set(std::move(cells)),
                             kTrack0);
}

Neighborhood block_neighborhood(const ReversibleCA& g) {
  const CellSet loc = localization(reversible_update(g, 0));
  std::vector<int> bn;
  bool has_output_cell = false;
  for (const auto& c : loc) {
    if (c.track == 0)
      bn.push_back(c.position);
    else if (c.position == 0)
      has_output_cell = true;
    else
      throw ShapeViolation("Loc(K_0) contains track-1 cell at position " +
                           std::to_string(c.position));
  }
  if (!has_output_cell) throw ShapeViolation("Loc(K_0) does not contain cell (1,0)");
  return Neighborhood(std::move(bn));
}

// ---------------------------------------------------------------- circuits

BlockCircuit assemble_circuit(const ReversibleCA& g, int period) {
  const FinitePermutation k0 = shrink(reversible_update(g, 0));
  const int minimum = window_span(k0.window()) + 1;
  if (period < minimum) throw PeriodTooSmall(period, minimum);

  BlockCircuit c;
  c.period = period;
  c.alphabet = g.alphabet();
  c.tracks = 2;
  c.construction = "swap-reversible-updates";
  Layer updates{"reversible-updates", {}}, swaps{"swaps", {}};
  const FinitePermutation swap0 = FinitePermutation::swap(0, g.alphabet());
  for (int i = 0; i < period; ++i) {
    updates.placements.push_back({i, k0});
    swaps.placements.push_back({i, swap0});
  }
  c.layers.push_back(std::move(updates));
  c.layers.push_back(std::move(swaps));
  return c;
}

namespace {

using Tracks = std::array<std::vector<int>, 2>;

Tracks unpack(const BlockCircuit& c, const CyclicConfig& x) {
  if (x.period() != c.period)
    throw Error("configuration period " + std::to_string(x.period()) + " != circuit period " +
                std::to_string(c.period));
  if (x.alphabet != c.cell_alphabet())
    throw AlphabetMismatch("configuration alphabet " + std::to_string(x.alphabet) +
                           " != circuit cell alphabet " + std::to_string(c.cell_alphabet()));
  Tracks t;
  if (c.tracks == 2) {
    t[0].resize(c.period);
    t[1].resize(c.period);
    for (int i = 0; i < c.period; ++i) {
      t[0][i] = x.cells[i] / c.alphabet;
      t[1][i] = x.cells[i] % c.alphabet;
    }
  } else {
    t[0] = x.cells;
  }
  return t;
}

CyclicConfig pack(const BlockCircuit& c, const Tracks& t) {
  CyclicConfig x{c.cell_alphabet(), std::vector<int>(c.period)};
  for (int i = 0; i < c.period; ++i)
    x.cells[i] = c.tracks == 2 ? t[0][i] * c.alphabet + t[1][i] : t[0][i];
  return x;
}

void apply_placement(const Placement& pl, int period, Tracks& t, std::vector<int>& scratch) {
  const auto& w = pl.block.window();
  scratch.resize(w.size());
  auto pos = [&](const TrackedCell& cell) {
    return ((pl.anchor + cell.position) % period + period) % period;
  };
  for (std::size_t k = 0; k < w.size(); ++k) scratch[k] = t[w[k].track][pos(w[k])];
  decode_word(pl.block(encode_word(scratch, pl.block.radix())), pl.block.radix(), scratch);
  for (std::size_t k = 0; k < w.size(); ++k) t[w[k].track][pos(w[k])] = scratch[k];
}

Tracks run_layers(const BlockCircuit& c, Tracks t, std::mt19937_64* shuffle) {
  std::vector<int> scratch;
  for (const auto& layer : c.layers) {
    std::vector<std::size_t> order(layer.placements.size());
    std::iota(order.begin(), order.end(), 0);
    if (shuffle) std::shuffle(order.begin(), order.end(), *shuffle);
    for (auto k : order) apply_placement(layer.placements[k], c.period, t, scratch);
  }
  return t;
}

}  // namespace

CyclicConfig apply_circuit(const BlockCircuit& circuit, const CyclicConfig& x) {
  CyclicConfig out = pack(circuit, run_layers(circuit, unpack(circuit, x), nullptr));
#ifndef NDEBUG
  assert(apply_circuit_shuffled(circuit, x, config_index(x)) == out);
#endif
  return out;
}

CyclicConfig apply_circuit_shuffled(const BlockCircuit& circuit, const CyclicConfig& x,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return pack(circuit, run_layers(circuit, unpack(circuit, x), &rng));
}

// ---------------------------------------------------------------- verification

VerificationReport verify_circuit(const BlockCircuit& circuit, const LocalRule& reference,
                                  const VerifyOptions& options) {
  const int q = circuit.cell_alphabet();
  if (reference.alphabet() != q)
    throw AlphabetMismatch("reference rule alphabet differs from the circuit's cell alphabet");
  const int n = circuit.period;

  VerifyMode mode = options.mode;
  std::uint64_t total = 0;
  bool fits = true;
  try {
    total = checked_power(q, n, options.exhaustive_budget);
  } catch (const TableSizeCapExceeded&) {
    fits = false;
  }
  if (mode == VerifyMode::automatic) mode = fits ? VerifyMode::exhaustive : VerifyMode::sampled;
  if (mode == VerifyMode::exhaustive && !fits) total = checked_power(q, n, std::uint64_t{1} << 40);

  VerificationReport report;
  report.mode = mode;
  auto check = [&](const CyclicConfig& x) {
    ++report.tested;
    CyclicConfig expected = apply_cyclic(reference, x);
    CyclicConfig actual = apply_circuit(circuit, x);
    if (expected != actual) {
      if (report.mismatches++ == 0) report.first_counterexample = Counterexample{x, expected, actual};
    }
  };

  if (mode == VerifyMode::exhaustive) {
    CyclicConfig x{q, std::vector<int>(n, 0)};
    for (std::uint64_t k = 0; k < total; ++k) {
      check(x);
      next_word(x.cells, q);
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> symbol(0, q - 1);
    CyclicConfig x{q, std::vector<int>(n)};
    for (std::uint64_t k = 0; k < options.samples; ++k) {
      for (auto& s : x.cells) s = symbol(rng);
      check(x);
    }
  }
  return report;
}

VerificationReport verify_block_representation(const ReversibleCA& g, int period,
                                               const VerifyOptions& options) {
  return verify_circuit(assemble_circuit(g, period), product(g.forward(), g.inverse()), options);
}

std::string dump_circuit(const BlockCircuit& circuit) {
  std::ostringstream os;
  os << "period " << circuit.period << '\n'
     << "layers " << circuit.layers.size() << '\n'
     << "alphabet " << circuit.alphabet << '\n'
     << "tracks " << circuit.tracks << '\n'
     << "construction " << circuit.construction << '\n';
  for (std::size_t l = 0; l < circuit.layers.size(); ++l) {
    const auto& layer = circuit.layers[l];
    os << "layer " << l + 1 << ' ' << layer.name << " placements " << layer.placements.size()
       << '\n';
    for (const auto& pl : layer.placements) os << "anchor " << pl.anchor << '\n' << dump_permutation(pl.block);
  }
  return os.str();
}

std::string to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::automatic:
      return "automatic";
    case VerifyMode::exhaustive:
      return "exhaustive";
    case VerifyMode::sampled:
      return "sampled";
  }
  return "unknown";
}

}  // namespace rca
