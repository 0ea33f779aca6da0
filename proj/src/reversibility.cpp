#include "rca/reversibility.hpp"

#include <deque>
#include <unordered_map>

namespace rca {

namespace {

/// Removes every node without an infinite path along `adj`; returns survivors.
std::vector<bool> nodes_with_infinite_path(std::size_t nodes,
                                           const std::vector<std::vector<std::size_t>>& adj,
                                           const std::vector<std::vector<std::size_t>>& radj) {
  std::vector<std::size_t> degree(nodes);
  std::vector<bool> alive(nodes, true);
  std::deque<std::size_t> dead;
  for (std::size_t v = 0; v < nodes; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] == 0) dead.push_back(v);
  }
  while (!dead.empty()) {
    std::size_t v = dead.front();
    dead.pop_front();
    alive[v] = false;
    for (std::size_t u : radj[v])
      if (--degree[u] == 0) dead.push_back(u);
  }
  return alive;
}

}  // namespace

bool is_injective(const LocalRule& rule, std::size_t cap) {
  const int q = rule.alphabet();
  if (q == 1) return true;
  const LocalRule r = minimize_neighborhood(rule);
  if (r.neighborhood().empty()) return false;

  const Neighborhood hull = Neighborhood::range(r.neighborhood().min(), r.neighborhood().max());
  const LocalRule full = reexpress(r, hull, cap);
  const std::size_t m = hull.size();
  const std::size_t words = full.table().size();
  const std::size_t states = checked_power(q, m - 1, cap);  // de Bruijn nodes
  const std::size_t nodes = states * states;
  if (states > 0 && nodes / states != states) throw TableSizeCapExceeded(cap);

  // Edge pairs are pairs of neighborhood words with the same image.
  std::vector<std::vector<std::size_t>> by_label(q);
  for (std::size_t w = 0; w < words; ++w) by_label[full.table()[w]].push_back(w);
  std::size_t edge_count = 0;
  for (const auto& g : by_label) edge_count += g.size() * g.size();
  if (edge_count > cap) throw TableSizeCapExceeded(cap);

  struct Edge {
    std::size_t from, to;
  };
  std::vector<Edge> distinct;
  std::vector<std::vector<std::size_t>> adj(nodes), radj(nodes);
  for (const auto& g : by_label) {
    for (std::size_t a : g) {
      for (std::size_t b : g) {
        std::size_t from = (a / q) * states + (b / q);
        std::size_t to = (a % states) * states + (b % states);
        adj[from].push_back(to);
        radj[to].push_back(from);
        if (a != b) distinct.push_back({from, to});
      }
    }
  }

  const auto forward = nodes_with_infinite_path(nodes, adj, radj);
  const auto backward = nodes_with_infinite_path(nodes, radj, adj);
  for (const Edge& e : distinct)
    if (backward[e.from] && forward[e.to]) return false;
  return true;
}

LocalRule invert(const LocalRule& rule, int radius_cap, std::size_t cap) {
  if (!is_injective(rule, cap)) throw NotInjective();
  const int q = rule.alphabet();
  if (q == 1) return LocalRule::identity(1);
  const LocalRule r = minimize_neighborhood(rule);
  const Neighborhood hull = Neighborhood::range(r.neighborhood().min(), r.neighborhood().max());
  const LocalRule full = reexpress(r, hull, cap);
  const int lo = hull.min(), hi = hull.max();
  const LocalRule id = LocalRule::identity(q);

  for (int s = 0; s <= radius_cap; ++s) {
    // Preimage window, relative to the cell being recovered, covers every cell
    // read by the image window [-s, s] as well as the cell itself.
    const int pmin = std::min(-s + lo, 0), pmax = std::max(s + hi, 0);
    const std::size_t plen = static_cast<std::size_t>(pmax - pmin + 1);
    const std::size_t image_len = static_cast<std::size_t>(2 * s + 1);
    const std::size_t image_words = checked_power(q, image_len, cap);
    checked_power(q, plen, cap);

    std::vector<int> table(image_words, -1);
    std::vector<int> pre(plen, 0), img(image_len);
    bool consistent = true;
    do {
      for (std::size_t k = 0; k < image_len; ++k) {
        const int pos = -s + static_cast<int>(k);
        img[k] = full(std::span<const int>(pre).subspan(pos + lo - pmin, hull.size()));
      }
      const std::size_t key = encode_word(img, q);
      const int centre = pre[-pmin];
      if (table[key] == -1) {
        table[key] = centre;
      } else if (table[key] != centre) {
        consistent = false;
        break;
      }
    } while (next_word(pre, q));
    if (!consistent) continue;

    // Unreachable image words cannot occur for a surjective rule; fill arbitrarily.
    for (int& e : table)
      if (e == -1) e = 0;
    LocalRule inv = minimize_neighborhood(LocalRule(q, Neighborhood::range(-s, s), table));
    if (!equal(compose(r, inv, cap), id) || !equal(compose(inv, r, cap), id))
      throw Error("internal: synthesized inverse failed verification");
    return inv;
  }
  throw RadiusCapExceeded(radius_cap);
}

ReversibleCA ReversibleCA::from_rule(const LocalRule& forward, int radius_cap) {
  LocalRule inv = invert(forward, radius_cap);
  return ReversibleCA(minimize_neighborhood(forward), std::move(inv));
}

ReversibleCA ReversibleCA::from_pair(const LocalRule& forward, const LocalRule& inverse) {
  if (forward.alphabet() != inverse.alphabet())
    throw AlphabetMismatch("forward and inverse alphabets differ");
  const LocalRule id = LocalRule::identity(forward.alphabet());
  if (!equal(compose(forward, inverse), id) || !equal(compose(inverse, forward), id))
    throw NotInverse();
  return ReversibleCA(minimize_neighborhood(forward), minimize_neighborhood(inverse));
}

ReversibleCA power(const ReversibleCA& g, int k) {
  if (k < 1) throw Error("power: exponent must be at least 1");
  LocalRule f = g.forward(), i = g.inverse();
  for (int j = 1; j < k; ++j) {
    f = compose(g.forward(), f);
    i = compose(i, g.inverse());
  }
  return ReversibleCA::from_pair(f, i);
}

NeighborhoodReport neighborhoods(const ReversibleCA& g) {
  NeighborhoodReport r{g.forward().neighborhood(), g.inverse().neighborhood(), {}};
  r.transposed = negate(r.inverse);
  return r;
}

}  // namespace rca
