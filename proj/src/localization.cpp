#include "rca/localization.hpp"

#include <algorithm>
#include <sstream>

namespace rca {

CellSet make_cell_set(std::vector<TrackedCell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

CellSet set_intersection(const CellSet& a, const CellSet& b) {
  CellSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

CellSet set_union(const CellSet& a, const CellSet& b) {
  CellSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool is_subset(const CellSet& a, const CellSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(const CellSet& cells) {
  std::string s = "{";
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) s += ", ";
    s += "(" + std::to_string(cells[k].track) + "," + std::to_string(cells[k].position) + ")";
  }
  return s + "}";
}

// ---------------------------------------------------------------- FinitePermutation

FinitePermutation::FinitePermutation(CellSet window, TrackAlphabets alphabets,
                                     std::vector<std::uint32_t> table)
    : window_(std::move(window)), alphabets_(alphabets), table_(std::move(table)) {
  for (std::size_t k = 0; k < window_.size(); ++k) {
    const auto& c = window_[k];
    if (c.track < 0 || c.track > 1) throw NotAPermutation("track must be 0 or 1");
    if (k && !(window_[k - 1] < c)) throw NotAPermutation("window must be sorted and distinct");
    if (alphabets_[c.track] < 1) throw NotAPermutation("track alphabet must be positive");
    radix_.push_back(alphabets_[c.track]);
  }
  const std::size_t n = checked_product(radix_, std::size_t{1} << 32);
  if (table_.size() != n)
    throw NotAPermutation("table length " + std::to_string(table_.size()) + " != " +
                          std::to_string(n));
  std::vector<bool> hit(n, false);
  for (auto v : table_) {
    if (v >= n || hit[v]) throw NotAPermutation("table is not a bijection");
    hit[v] = true;
  }
}

FinitePermutation FinitePermutation::identity(CellSet window, TrackAlphabets alphabets) {
  std::vector<int> radix;
  for (const auto& c : window) radix.push_back(alphabets[c.track]);
  std::vector<std::uint32_t> table(checked_product(radix, std::size_t{1} << 32));
  for (std::size_t k = 0; k < table.size(); ++k) table[k] = static_cast<std::uint32_t>(k);
  return FinitePermutation(std::move(window), alphabets, std::move(table));
}

FinitePermutation FinitePermutation::swap(int position, int alphabet) {
  const auto q = static_cast<std::uint32_t>(alphabet);
  std::vector<std::uint32_t> table(q * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) table[a * q + b] = b * q + a;
  return FinitePermutation({{0, position}, {1, position}}, {alphabet, alphabet}, std::move(table));
}

FinitePermutation FinitePermutation::at_cell(TrackedCell cell, const std::vector<int>& perm,
                                             TrackAlphabets alphabets) {
  std::vector<std::uint32_t> table(perm.begin(), perm.end());
  return FinitePermutation({cell}, alphabets, std::move(table));
}

FinitePermutation FinitePermutation::translated(int offset) const {
  CellSet w = window_;
  for (auto& c : w) c.position += offset;
  return FinitePermutation(std::move(w), alphabets_, table_);
}

FinitePermutation FinitePermutation::inverse() const {
  std::vector<std::uint32_t> inv(table_.size());
  for (std::size_t k = 0; k < table_.size(); ++k) inv[table_[k]] = static_cast<std::uint32_t>(k);
  return FinitePermutation(window_, alphabets_, std::move(inv));
}

// ---------------------------------------------------------------- localization

namespace {

/// Positions (in window order) of the cells of y; throws if y is not contained.
std::vector<std::size_t> positions_in_window(const CellSet& window, const CellSet& y) {
  std::vector<std::size_t> pos;
  for (const auto& c : y) {
    auto it = std::lower_bound(window.begin(), window.end(), c);
    if (it == window.end() || *it != c)
      throw NotLocalized("cell set " + to_string(y) + " is not contained in window " +
                         to_string(window));
    pos.push_back(static_cast<std::size_t>(it - window.begin()));
  }
  return pos;
}

}  // namespace

bool is_localized(const FinitePermutation& f, const CellSet& y) {
  const auto& radix = f.radix();
  const auto inside_pos = positions_in_window(f.window(), y);
  std::vector<bool> inside(radix.size(), false);
  std::vector<int> yradix;
  for (auto p : inside_pos) {
    inside[p] = true;
    yradix.push_back(radix[p]);
  }

  const std::size_t ywords = checked_product(yradix, SIZE_MAX);
  std::vector<std::int64_t> image(ywords, -1);
  std::vector<int> in(radix.size()), out(radix.size()), yin(inside_pos.size()),
      yout(inside_pos.size());
  for (std::size_t w = 0; w < f.size(); ++w) {
    decode_word(w, radix, in);
    decode_word(f(w), radix, out);
    for (std::size_t k = 0; k < radix.size(); ++k)
      if (!inside[k] && in[k] != out[k]) return false;
    for (std::size_t k = 0; k < inside_pos.size(); ++k) {
      yin[k] = in[inside_pos[k]];
      yout[k] = out[inside_pos[k]];
    }
    const auto a = encode_word(yin, yradix);
    const auto b = static_cast<std::int64_t>(encode_word(yout, yradix));
    if (image[a] == -1)
      image[a] = b;
    else if (image[a] != b)
      return false;
  }
  return true;
}

CellSet localization(const FinitePermutation& f, ScanOrder order) {
  CellSet current = f.window();
  CellSet scan = f.window();
  if (order == ScanOrder::reversed) std::reverse(scan.begin(), scan.end());
  for (const auto& c : scan) {
    CellSet candidate;
    for (const auto& d : current)
      if (d != c) candidate.push_back(d);
    if (is_localized(f, candidate)) current = std::move(candidate);
  }
  return current;
}

FinitePermutation restrict(const FinitePermutation& f, const CellSet& y) {
  if (!is_localized(f, y))
    throw NotLocalized("permutation is not localized upon " + to_string(y));
  const auto& radix = f.radix();
  const auto pos = positions_in_window(f.window(), y);
  std::vector<int> yradix;
  for (auto p : pos) yradix.push_back(radix[p]);

  std::vector<std::uint32_t> table(checked_product(yradix, SIZE_MAX));
  std::vector<int> full(radix.size(), 0), sub(pos.size());
  for (std::size_t w = 0; w < table.size(); ++w) {
    decode_word(w, yradix, sub);
    for (std::size_t k = 0; k < pos.size(); ++k) full[pos[k]] = sub[k];
    decode_word(f(encode_word(full, radix)), radix, full);
    for (std::size_t k = 0; k < pos.size(); ++k) sub[k] = full[pos[k]];
    table[w] = static_cast<std::uint32_t>(encode_word(sub, yradix));
    std::fill(full.begin(), full.end(), 0);
  }
  return FinitePermutation(y, f.alphabets(), std::move(table));
}

FinitePermutation extend(const FinitePermutation& f, const CellSet& window) {
  const auto pos = positions_in_window(window, f.window());
  std::vector<int> radix;
  for (const auto& c : window) radix.push_back(f.alphabets()[c.track]);
  const auto& fradix = f.radix();

  std::vector<std::uint32_t> table(checked_product(radix, std::size_t{1} << 32));
  std::vector<int> digits(radix.size()), sub(pos.size());
  for (std::size_t w = 0; w < table.size(); ++w) {
    decode_word(w, radix, digits);
    for (std::size_t k = 0; k < pos.size(); ++k) sub[k] = digits[pos[k]];
    decode_word(f(encode_word(sub, fradix)), fradix, sub);
    for (std::size_t k = 0; k < pos.size(); ++k) digits[pos[k]] = sub[k];
    table[w] = static_cast<std::uint32_t>(encode_word(digits, radix));
  }
  return FinitePermutation(window, f.alphabets(), std::move(table));
}

bool same_action(const FinitePermutation& a, const FinitePermutation& b) {
  if (a.alphabets() != b.alphabets()) return false;
  const CellSet w = set_union(a.window(), b.window());
  return extend(a, w).table() == extend(b, w).table();
}

// ---------------------------------------------------------------- dumps

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

std::string word_string(std::size_t w, const std::vector<int>& radix) {
  if (radix.empty()) return ".";
  std::vector<int> d(radix.size());
  decode_word(w, radix, d);
  std::string s;
  for (int x : d) s += kDigits[x];
  return s;
}

}  // namespace

std::string dump_permutation(const FinitePermutation& f) {
  for (int r : f.radix())
    if (r > static_cast<int>(kDigits.size()))
      throw Error("permutation dump supports alphabets of at most 36 symbols");
  std::ostringstream os;
  for (std::size_t k = 0; k < f.window().size(); ++k) {
    if (k) os << ' ';
    os << f.window()[k].track << ':' << f.window()[k].position;
  }
  os << '\n';
  for (std::size_t w = 0; w < f.size(); ++w)
    os << word_string(w, f.radix()) << " -> " << word_string(f(w), f.radix()) << '\n';
  return os.str();
}

FinitePermutation parse_permutation_dump(std::string_view text, TrackAlphabets alphabets) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 1;
  if (!std::getline(is, line)) throw ParseError(1, "missing window header");
  std::vector<TrackedCell> cells;
  {
    std::istringstream hs(line);
    std::string tok;
    while (hs >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw ParseError(1, "expected t:p, got '" + tok + "'");
      try {
        cells.push_back({std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))});
      } catch (const std::exception&) {
        throw ParseError(1, "expected t:p, got '" + tok + "'");
      }
    }
  }
  CellSet window = make_cell_set(cells);
  if (window.size() != cells.size() || window != cells)
    throw ParseError(1, "window cells must be listed in canonical order without repeats");
  std::vector<int> radix;
  for (const auto& c : window) {
    if (c.track < 0 || c.track > 1) throw ParseError(1, "track must be 0 or 1");
    radix.push_back(alphabets[c.track]);
  }

  auto read_word = [&](const std::string& s) -> std::size_t {
    if (radix.empty()) {
      if (s != ".") throw ParseError(lineno, "expected '.' for the empty word");
      return 0;
    }
    if (s.size() != radix.size()) throw ParseError(lineno, "word length mismatch");
    std::vector<int> d;
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto v = kDigits.find(s[k]);
      if (v == std::string_view::npos || static_cast<int>(v) >= radix[k])
        throw ParseError(lineno, "symbol out of range in '" + s + "'");
      d.push_back(static_cast<int>(v));
    }
    return encode_word(d, radix);
  };

  const std::size_t n = checked_product(radix, std::size_t{1} << 32);
  std::vector<std::int64_t> table(n, -1);
  std::size_t seen = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string in, arrow, out;
    if (!(ls >> in)) continue;
    if (!(ls >> arrow >> out) || arrow != "->")
      throw ParseError(lineno, "expected 'inword -> outword'");
    auto a = read_word(in);
    if (table[a] != -1) throw ParseError(lineno, "duplicate input word");
    table[a] = static_cast<std::int64_t>(read_word(out));
    ++seen;
  }
  if (seen != n) throw ParseError(lineno, "expected " + std::to_string(n) + " rows");
  std::vector<std::uint32_t> t(table.begin(), table.end());
  return FinitePermutation(std::move(window), alphabets, std::move(t));
}

}  // namespace rca
