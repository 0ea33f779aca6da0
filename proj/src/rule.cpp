#include "rca/rule.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace rca {

// ---------------------------------------------------------------- Neighborhood

Neighborhood::Neighborhood(std::vector<int> offsets) : offsets_(std::move(offsets)) {
  std::sort(offsets_.begin(), offsets_.end());
  if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end())
    throw Error("neighborhood contains a duplicate offset");
}

Neighborhood Neighborhood::range(int lo, int hi) {
  std::vector<int> o;
  for (int k = lo; k <= hi; ++k) o.push_back(k);
  return Neighborhood(std::move(o));
}

bool Neighborhood::contains(int offset) const {
  return std::binary_search(offsets_.begin(), offsets_.end(), offset);
}

int Neighborhood::reach() const {
  int r = 0;
  for (int o : offsets_) r = std::max(r, std::abs(o));
  return r;
}

std::size_t Neighborhood::index_of(int offset) const {
  auto it = std::lower_bound(offsets_.begin(), offsets_.end(), offset);
  return static_cast<std::size_t>(it - offsets_.begin());
}

bool Neighborhood::is_subset_of(const Neighborhood& other) const {
  return std::includes(other.offsets_.begin(), other.offsets_.end(), offsets_.begin(),
                       offsets_.end());
}

namespace {

Neighborhood from_unsorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return Neighborhood(std::move(v));
}

}  // namespace

Neighborhood operator+(const Neighborhood& a, const Neighborhood& b) {
  std::vector<int> v;
  for (int x : a.offsets())
    for (int y : b.offsets()) v.push_back(x + y);
  return from_unsorted(std::move(v));
}

Neighborhood operator-(const Neighborhood& a, const Neighborhood& b) { return a + negate(b); }

Neighborhood negate(const Neighborhood& a) {
  std::vector<int> v;
  for (int x : a.offsets()) v.push_back(-x);
  return from_unsorted(std::move(v));
}

Neighborhood intersect(const Neighborhood& a, const Neighborhood& b) {
  std::vector<int> v;
  std::set_intersection(a.offsets().begin(), a.offsets().end(), b.offsets().begin(),
                        b.offsets().end(), std::back_inserter(v));
  return Neighborhood(std::move(v));
}

Neighborhood unite(const Neighborhood& a, const Neighborhood& b) {
  std::vector<int> v;
  std::set_union(a.offsets().begin(), a.offsets().end(), b.offsets().begin(), b.offsets().end(),
                 std::back_inserter(v));
  return Neighborhood(std::move(v));
}

Neighborhood subtract(const Neighborhood& a, const Neighborhood& b) {
  std::vector<int> v;
  std::set_difference(a.offsets().begin(), a.offsets().end(), b.offsets().begin(),
                      b.offsets().end(), std::back_inserter(v));
  return Neighborhood(std::move(v));
}

std::string to_string(const Neighborhood& n) {
  std::string s = "{";
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(n.offsets()[k]);
  }
  return s + "}";
}

// ---------------------------------------------------------------- LocalRule

LocalRule::LocalRule(int alphabet, Neighborhood neighborhood, std::vector<int> table)
    : alphabet_(alphabet), neighborhood_(std::move(neighborhood)), table_(std::move(table)) {
  if (alphabet_ < 1) throw Error("alphabet size must be at least 1");
  std::size_t expected = checked_power(alphabet_, neighborhood_.size(), SIZE_MAX);
  if (table_.size() != expected)
    throw Error("table length " + std::to_string(table_.size()) + " != " +
                std::to_string(expected));
  for (int e : table_)
    if (e < 0 || e >= alphabet_) throw Error("table entry " + std::to_string(e) + " out of range");
}

LocalRule LocalRule::elementary(int code) {
  if (code < 0 || code > 255) throw Error("elementary rule code must be in 0..255");
  std::vector<int> table(8);
  for (int idx = 0; idx < 8; ++idx) table[idx] = (code >> idx) & 1;
  return LocalRule(2, Neighborhood{-1, 0, 1}, std::move(table));
}

LocalRule LocalRule::identity(int alphabet) {
  std::vector<int> table(alphabet);
  for (int s = 0; s < alphabet; ++s) table[s] = s;
  return LocalRule(alphabet, Neighborhood{0}, std::move(table));
}

LocalRule LocalRule::cellwise(std::vector<int> perm) {
  int q = static_cast<int>(perm.size());
  return LocalRule(q, Neighborhood{0}, std::move(perm));
}

// ---------------------------------------------------------------- configs

CyclicConfig config_from_index(int alphabet, int period, std::size_t index) {
  CyclicConfig c{alphabet, std::vector<int>(period)};
  decode_word(index, alphabet, c.cells);
  return c;
}

std::size_t config_index(const CyclicConfig& c) { return encode_word(c.cells, c.alphabet); }

// ---------------------------------------------------------------- parsing

namespace {

std::optional<long long> to_int(std::string_view tok) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k > start) toks.push_back(line.substr(start, k - start));
  }
  return toks;
}

}  // namespace

LocalRule parse_rule(std::string_view text) {
  std::optional<int> eca, alphabet;
  std::optional<std::vector<int>> offsets;
  std::optional<std::vector<int>> table;
  int table_line = 0, last_line = 0;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    last_line = lineno;

    std::vector<long long> args;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      auto v = to_int(toks[k]);
      if (!v) throw ParseError(lineno, "expected an integer, got '" + std::string(toks[k]) + "'");
      args.push_back(*v);
    }
    auto directive = toks[0];
    auto once = [&](bool seen) {
      if (seen) throw ParseError(lineno, "duplicate directive '" + std::string(directive) + "'");
    };
    if (directive == "eca") {
      once(eca.has_value());
      if (args.size() != 1) throw ParseError(lineno, "eca takes exactly one code");
      if (args[0] < 0 || args[0] > 255) throw ParseError(lineno, "eca code must be in 0..255");
      eca = static_cast<int>(args[0]);
    } else if (directive == "alphabet") {
      once(alphabet.has_value());
      if (args.size() != 1) throw ParseError(lineno, "alphabet takes exactly one size");
      if (args[0] < 1 || args[0] > 65536) throw ParseError(lineno, "alphabet size out of range");
      alphabet = static_cast<int>(args[0]);
    } else if (directive == "neighborhood") {
      once(offsets.has_value());
      std::vector<int> o(args.begin(), args.end());
      std::vector<int> sorted = o;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(lineno, "duplicate neighborhood offset");
      if (o != sorted) throw ParseError(lineno, "neighborhood offsets must be increasing");
      offsets = std::move(o);
    } else if (directive == "table") {
      once(table.has_value());
      table = std::vector<int>(args.begin(), args.end());
      table_line = lineno;
    } else {
      throw ParseError(lineno, "unknown directive '" + std::string(directive) + "'");
    }
  }

  if (eca) {
    if (alphabet || offsets || table)
      throw ParseError(last_line, "'eca' cannot be combined with other directives");
    return LocalRule::elementary(*eca);
  }
  if (!alphabet) throw ParseError(last_line, "missing 'alphabet' directive");
  if (!offsets) throw ParseError(last_line, "missing 'neighborhood' directive");
  if (!table) throw ParseError(last_line, "missing 'table' directive");

  std::size_t expected = 0;
  try {
    expected = checked_power(*alphabet, offsets->size(), kDefaultTableCap);
  } catch (const TableSizeCapExceeded&) {
    throw ParseError(table_line, "declared table size exceeds the table cap");
  }
  if (table->size() != expected)
    throw ParseError(table_line, "table length " + std::to_string(table->size()) +
                                     " != " + std::to_string(expected));
  for (int e : *table)
    if (e < 0 || e >= *alphabet)
      throw ParseError(table_line, "symbol " + std::to_string(e) + " out of range 0.." +
                                       std::to_string(*alphabet - 1));
  return LocalRule(*alphabet, Neighborhood(*offsets), std::move(*table));
}

std::string format_rule(const LocalRule& rule) {
  std::ostringstream os;
  os << "alphabet " << rule.alphabet() << "\nneighborhood";
  for (int o : rule.neighborhood().offsets()) os << ' ' << o;
  os << "\ntable";
  for (int e : rule.table()) os << ' ' << e;
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------- dynamics

CyclicConfig apply_cyclic(const LocalRule& rule, const CyclicConfig& c) {
  if (rule.alphabet() != c.alphabet)
    throw AlphabetMismatch("rule alphabet " + std::to_string(rule.alphabet()) +
                           " != configuration alphabet " + std::to_string(c.alphabet));
  const int n = c.period();
  const auto& offs = rule.neighborhood().offsets();
  CyclicConfig out{c.alphabet, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    std::size_t idx = 0;
    for (int o : offs) idx = idx * c.alphabet + c.cells[((i + o) % n + n) % n];
    out.cells[i] = rule.table()[idx];
  }
  return out;
}

// ---------------------------------------------------------------- algebra

LocalRule minimize_neighborhood(const LocalRule& rule) {
  const int q = rule.alphabet();
  const auto& offs = rule.neighborhood().offsets();
  const std::size_t m = offs.size();
  const auto& table = rule.table();

  // A position is essential iff changing that digit alone changes some output.
  std::vector<bool> essential(m, false);
  std::vector<int> digits(m);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    decode_word(idx, q, digits);
    std::size_t weight = 1;
    for (std::size_t k = m; k-- > 0;) {
      if (!essential[k] && digits[k] + 1 < q) {
        if (table[idx + weight] != table[idx]) essential[k] = true;
      }
      weight *= q;
    }
  }

  std::vector<int> kept;
  std::vector<std::size_t> kept_pos;
  for (std::size_t k = 0; k < m; ++k)
    if (essential[k]) {
      kept.push_back(offs[k]);
      kept_pos.push_back(k);
    }
  if (kept.size() == m) return rule;

  std::vector<int> sub(kept.size());
  std::vector<int> full(m, 0);
  std::vector<int> new_table(checked_power(q, kept.size(), SIZE_MAX));
  for (std::size_t idx = 0; idx < new_table.size(); ++idx) {
    decode_word(idx, q, sub);
    for (std::size_t k = 0; k < kept.size(); ++k) full[kept_pos[k]] = sub[k];
    new_table[idx] = table[encode_word(full, q)];
  }
  return LocalRule(q, Neighborhood(std::move(kept)), std::move(new_table));
}

LocalRule reexpress(const LocalRule& rule, const Neighborhood& superset, std::size_t cap) {
  if (!rule.neighborhood().is_subset_of(superset))
    throw Error("reexpress: target neighborhood does not contain the rule's neighborhood");
  const int q = rule.alphabet();
  const auto& offs = rule.neighborhood().offsets();
  std::vector<std::size_t> pos;
  for (int o : offs) pos.push_back(superset.index_of(o));

  std::vector<int> table(checked_power(q, superset.size(), cap));
  std::vector<int> digits(superset.size(), 0);
  std::vector<int> sub(offs.size());
  std::size_t idx = 0;
  do {
    for (std::size_t k = 0; k < pos.size(); ++k) sub[k] = digits[pos[k]];
    table[idx++] = rule(sub);
  } while (next_word(digits, q));
  return LocalRule(q, superset, std::move(table));
}

LocalRule compose(const LocalRule& a, const LocalRule& b, std::size_t cap) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetMismatch("compose: alphabets " + std::to_string(a.alphabet()) + " and " +
                           std::to_string(b.alphabet()) + " differ");
  const int q = a.alphabet();
  const Neighborhood nb = b.neighborhood() + a.neighborhood();
  const auto& ao = a.neighborhood().offsets();
  const auto& bo = b.neighborhood().offsets();

  // Position in nb of offset (x + y) for x in a, y in b.
  std::vector<std::vector<std::size_t>> at(ao.size(), std::vector<std::size_t>(bo.size()));
  for (std::size_t x = 0; x < ao.size(); ++x)
    for (std::size_t y = 0; y < bo.size(); ++y) at[x][y] = nb.index_of(ao[x] + bo[y]);

  std::vector<int> table(checked_power(q, nb.size(), cap));
  std::vector<int> digits(nb.size(), 0), inner(bo.size()), outer(ao.size());
  std::size_t idx = 0;
  do {
    for (std::size_t x = 0; x < ao.size(); ++x) {
      for (std::size_t y = 0; y < bo.size(); ++y) inner[y] = digits[at[x][y]];
      outer[x] = b(inner);
    }
    table[idx++] = a(outer);
  } while (next_word(digits, q));
  return minimize_neighborhood(LocalRule(q, nb, std::move(table)));
}

LocalRule product(const LocalRule& a, const LocalRule& b, std::size_t cap) {
  const int qa = a.alphabet(), qb = b.alphabet();
  const int q = qa * qb;
  const Neighborhood nb = unite(a.neighborhood(), b.neighborhood());
  std::vector<std::size_t> apos, bpos;
  for (int o : a.neighborhood().offsets()) apos.push_back(nb.index_of(o));
  for (int o : b.neighborhood().offsets()) bpos.push_back(nb.index_of(o));

  std::vector<int> table(checked_power(q, nb.size(), cap));
  std::vector<int> digits(nb.size(), 0), wa(apos.size()), wb(bpos.size());
  std::size_t idx = 0;
  do {
    for (std::size_t k = 0; k < apos.size(); ++k) wa[k] = digits[apos[k]] / qb;
    for (std::size_t k = 0; k < bpos.size(); ++k) wb[k] = digits[bpos[k]] % qb;
    table[idx++] = a(wa) * qb + b(wb);
  } while (next_word(digits, q));
  return minimize_neighborhood(LocalRule(q, nb, std::move(table)));
}

bool equal(const LocalRule& a, const LocalRule& b) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetMismatch("equal: alphabets " + std::to_string(a.alphabet()) + " and " +
                           std::to_string(b.alphabet()) + " differ");
  // Minimizing first keeps the union small; the minimal neighborhood of a map is unique.
  const LocalRule ma = minimize_neighborhood(a), mb = minimize_neighborhood(b);
  const Neighborhood nb = unite(ma.neighborhood(), mb.neighborhood());
  return reexpress(ma, nb).table() == reexpress(mb, nb).table();
}

}  // namespace rca
