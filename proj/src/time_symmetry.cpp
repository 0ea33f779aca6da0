#include "rca/time_symmetry.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rca {

bool is_involution(std::span<const int> table) {
  const int q = static_cast<int>(table.size());
  std::vector<bool> hit(q, false);
  for (int v : table) {
    if (v < 0 || v >= q || hit[v]) throw NotAPermutation("table is not a permutation of 0..q-1");
    hit[v] = true;
  }
  for (int x = 0; x < q; ++x)
    if (table[table[x]] != x) return false;
  return true;
}

Involution::Involution(std::vector<int> table) : table_(std::move(table)) {
  if (table_.empty()) throw NotAPermutation("involution over an empty alphabet");
  if (!is_involution(table_)) throw Error("permutation is not an involution");
}

Involution Involution::identity(int alphabet) {
  std::vector<int> t(alphabet);
  for (int x = 0; x < alphabet; ++x) t[x] = x;
  return Involution(std::move(t));
}

Involution Involution::pair_swap(int alphabet) {
  std::vector<int> t(alphabet * alphabet);
  for (int x = 0; x < alphabet; ++x)
    for (int y = 0; y < alphabet; ++y) t[x * alphabet + y] = y * alphabet + x;
  return Involution(std::move(t));
}

bool Involution::is_identity() const {
  for (int x = 0; x < alphabet(); ++x)
    if (table_[x] != x) return false;
  return true;
}

FinitePermutation Involution::at(int position) const {
  return FinitePermutation::at_cell({0, position}, table_, {alphabet(), 0});
}

Involution parse_involution(std::string_view text) {
  std::string spaced(text);
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream is{spaced};
  std::vector<int> t;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      t.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("involution: expected an integer, got '" + tok + "'");
    }
  }
  return Involution(std::move(t));
}

std::string to_string(const Involution& h) {
  std::string s;
  for (std::size_t k = 0; k < h.table().size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(h.table()[k]);
  }
  return s;
}

bool is_ltsca(const ReversibleCA& g, const Involution& h) {
  if (g.alphabet() != h.alphabet())
    throw AlphabetMismatch("involution alphabet " + std::to_string(h.alphabet()) +
                           " != automaton alphabet " + std::to_string(g.alphabet()));
  const LocalRule hr = h.as_rule();
  return equal(g.inverse(), compose(hr, compose(g.forward(), hr)));
}

std::vector<Involution> find_time_symmetries(const ReversibleCA& g) {
  const int q = g.alphabet();
  if (q > kMaxEnumeratedAlphabet)
    throw Error("alphabet of size " + std::to_string(q) + " is too large to enumerate involutions");

  std::vector<std::vector<int>> all;
  std::vector<int> t(q, -1);
  std::function<void(int)> rec = [&](int x) {
    while (x < q && t[x] != -1) ++x;
    if (x == q) {
      all.push_back(t);
      return;
    }
    t[x] = x;
    rec(x + 1);
    for (int y = x + 1; y < q; ++y) {
      if (t[y] != -1) continue;
      t[x] = y;
      t[y] = x;
      rec(x + 1);
      t[y] = -1;
    }
    t[x] = -1;
  };
  rec(0);
  std::sort(all.begin(), all.end());

  std::vector<Involution> found;
  for (auto& table : all) {
    Involution h(std::move(table));
    if (is_ltsca(g, h)) found.push_back(std::move(h));
  }
  return found;
}

TimeSymmetrization time_symmetrize(const ReversibleCA& f) {
  ReversibleCA g = ReversibleCA::from_pair(product(f.forward(), f.inverse()),
                                           product(f.inverse(), f.forward()));
  Involution h = Involution::pair_swap(f.alphabet());
  if (!is_ltsca(g, h)) throw Error("internal: time-symmetrization is not time-symmetric");
  return {std::move(g), std::move(h)};
}

namespace {

CellSet dilate(const CellSet& cells, const Neighborhood& by, TrackMask acting) {
  std::vector<TrackedCell> out;
  for (const auto& c : cells) {
    if (!acting[c.track]) {
      out.push_back(c);
      continue;
    }
    for (int o : by.offsets()) out.push_back({c.track, c.position + o});
  }
  return make_cell_set(std::move(out));
}

}  // namespace

FinitePermutation conjugate_block(const ReversibleCA& f, const FinitePermutation& b,
                                  TrackMask acting) {
  const FinitePermutation core = shrink(b);
  const auto nb = neighborhoods(f);
  // Every cell the conjugate changes, and every cell those depend on, lies in
  // Loc(b) + (Ñ - Ñ + N) on the acting tracks.
  const Neighborhood reach = nb.transposed - nb.transposed + nb.forward;
  const CellSet window = dilate(core.window(), reach, acting);
  FinitePermutation result = shrink(conjugate_on_window(f, core, window, acting));

  const CellSet allowed = dilate(core.window(), block_neighborhood(f), acting);
  if (!is_subset(result.window(), allowed))
    throw ContainmentViolation("Loc of conjugate " + to_string(result.window()) +
                               " is not within Loc(b) + BN(f) = " + to_string(allowed));
  return result;
}

SquareRepresentation ebr_of_square(const ReversibleCA& g, const Involution& h, int period,
                                   const VerifyOptions& options) {
  if (!is_ltsca(g, h)) throw NotLTSCA();
  const int q = g.alphabet();
  FinitePermutation l0 = conjugate_block(g, h.at(0));
  const int minimum = window_span(l0.window()) + 1;
  if (period < minimum) throw PeriodTooSmall(period, minimum);

  BlockCircuit c;
  c.period = period;
  c.alphabet = q;
  c.tracks = 1;
  c.construction = "involution-conjugates";
  Layer conj{"conjugated-involutions", {}}, inv{"involution", {}};
  const FinitePermutation h0 = h.at(0);
  for (int i = 0; i < period; ++i) {
    conj.placements.push_back({i, l0});
    inv.placements.push_back({i, h0});
  }
  c.layers.push_back(std::move(conj));
  c.layers.push_back(std::move(inv));

  VerificationReport report = verify_circuit(c, compose(g.forward(), g.forward()), options);
  Neighborhood bn = block_neighborhood(g);
  bool within = std::all_of(l0.window().begin(), l0.window().end(),
                            [&](const TrackedCell& cell) { return bn.contains(cell.position); });
  return {std::move(c), report, std::move(l0), std::move(bn), within};
}

}  // namespace rca
