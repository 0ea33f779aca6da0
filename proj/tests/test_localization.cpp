#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rca/errors.hpp"
#include "rca/localization.hpp"

using namespace rca;

namespace {

CellSet row(int track, std::initializer_list<int> positions) {
  std::vector<TrackedCell> cells;
  for (int p : positions) cells.push_back({track, p});
  return make_cell_set(std::move(cells));
}

CellSet random_window(std::mt19937_64& rng, int max_cells) {
  std::vector<TrackedCell> cells;
  const int count = 1 + static_cast<int>(rng() % max_cells);
  while (static_cast<int>(cells.size()) < count) {
    TrackedCell c{static_cast<int>(rng() % 2), static_cast<int>(rng() % 5) - 2};
    if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
  }
  return make_cell_set(std::move(cells));
}

CellSet random_subset(std::mt19937_64& rng, const CellSet& w) {
  CellSet y;
  for (const auto& c : w)
    if (rng() % 2) y.push_back(c);
  return y;
}

}  // namespace

TEST_SUITE("localization") {
  TEST_CASE("is_localized examples") {
    const auto id = FinitePermutation::identity(row(0, {0, 1, 2}), {2, 2});
    CHECK(is_localized(id, {}));

    const auto pi = FinitePermutation::at_cell({0, 0}, {1, 0}, {2, 2});
    CHECK_FALSE(is_localized(extend(pi, row(0, {0, 1})), row(0, {1})));

    const auto swap = FinitePermutation::swap(0, 2);
    CHECK(is_localized(swap, make_cell_set({{0, 0}, {1, 0}})));
    CHECK_FALSE(is_localized(swap, row(0, {0})));
    CHECK_THROWS_AS(is_localized(swap, row(0, {5})), NotLocalized);
  }

  TEST_CASE("localization examples") {
    CHECK(localization(FinitePermutation::identity(row(0, {0, 1, 2}), {3, 3})).empty());
    const auto pi = extend(FinitePermutation::at_cell({0, 0}, {1, 2, 0}, {3, 3}), row(0, {-1, 0, 1}));
    CHECK(localization(pi) == row(0, {0}));
    const auto trivial = extend(FinitePermutation::at_cell({0, 0}, {0, 1, 2}, {3, 3}), row(0, {0, 1}));
    CHECK(localization(trivial).empty());
    CHECK(localization(FinitePermutation::swap(0, 2)) == make_cell_set({{0, 0}, {1, 0}}));
    CHECK(localization(FinitePermutation::swap(3, 4)) == make_cell_set({{0, 3}, {1, 3}}));
  }

  TEST_CASE("restrict examples") {
    const auto swap = FinitePermutation::swap(0, 2);
    const auto r = restrict(swap, make_cell_set({{0, 0}, {1, 0}}));
    CHECK(r.table() == std::vector<std::uint32_t>{0, 2, 1, 3});

    const auto empty = restrict(FinitePermutation::identity(row(0, {0, 1, 2}), {2, 2}), {});
    CHECK(empty.window().empty());
    CHECK(empty.size() == 1);

    std::mt19937_64 rng(1);
    const auto f = oracle::random_permutation(rng, row(0, {0, 1, 2}), {2, 2});
    CHECK(restrict(f, f.window()) == f);
    CHECK_THROWS_AS(restrict(swap, row(0, {0})), NotLocalized);
  }

  TEST_CASE("FinitePermutation validates bijectivity") {
    CHECK_THROWS_AS(FinitePermutation(row(0, {0}), {2, 2}, {0, 0}), NotAPermutation);
    CHECK_THROWS_AS(FinitePermutation(row(0, {0}), {2, 2}, {0, 1, 2}), NotAPermutation);
  }

  TEST_CASE("translated and inverse") {
    std::mt19937_64 rng(2);
    const auto f = oracle::random_permutation(rng, make_cell_set({{0, 0}, {0, 1}, {1, 0}}), {2, 3});
    const auto g = f.translated(4);
    CHECK(g.window() == make_cell_set({{0, 4}, {0, 5}, {1, 4}}));
    CHECK(g.table() == f.table());
    const auto inv = f.inverse();
    for (std::size_t w = 0; w < f.size(); ++w) CHECK(inv(f(w)) == w);
  }

  TEST_CASE("property: the definition oracle agrees with is_localized") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const CellSet w = random_window(rng, 4);
      const auto f = oracle::random_local_permutation(rng, w, {2, 3});
      const CellSet y = random_subset(rng, w);
      REQUIRE(is_localized(f, y) == oracle::localized_by_definition(f, y));
    }
  }

  TEST_CASE("property: intersection closure") {
    std::mt19937_64 rng(4);
    int nontrivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const CellSet w = random_window(rng, 4);
      const auto f = oracle::random_local_permutation(rng, w, {2, 2});
      const CellSet y = random_subset(rng, w), z = random_subset(rng, w);
      if (!is_localized(f, y) || !is_localized(f, z)) continue;
      ++nontrivial;
      REQUIRE(is_localized(f, set_intersection(y, z)));
    }
    CHECK(nontrivial > 20);
  }

  TEST_CASE("property: monotonicity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const CellSet w = random_window(rng, 4);
      const auto f = oracle::random_local_permutation(rng, w, {2, 2});
      const CellSet y = random_subset(rng, w);
      if (!is_localized(f, y)) continue;
      const CellSet z = set_union(y, random_subset(rng, w));
      REQUIRE(is_localized(f, z));
    }
  }

  TEST_CASE("property: greedy localization equals the exhaustive minimum") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
      const CellSet w = random_window(rng, 3);
      const auto f = trial % 2 ? oracle::random_permutation(rng, w, {2, 2})
                               : oracle::random_local_permutation(rng, w, {2, 2});
      const CellSet loc = localization(f);
      REQUIRE(loc == oracle::exhaustive_localization(f));
      REQUIRE(loc == localization(f, ScanOrder::reversed));
    }
  }

  TEST_CASE("property: restrict then extend reproduces f") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const CellSet w = random_window(rng, 4);
      const auto f = oracle::random_local_permutation(rng, w, {3, 2});
      const auto core = shrink(f);
      CHECK(core.window() == localization(f));
      REQUIRE(extend(core, w) == f);
      CHECK(same_action(core, f));
    }
  }

  TEST_CASE("dump round-trip") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const CellSet w = random_window(rng, 3);
      const auto f = oracle::random_permutation(rng, w, {2, 3});
      const std::string text = dump_permutation(f);
      const auto back = parse_permutation_dump(text, {2, 3});
      REQUIRE(back == f);
      CHECK(dump_permutation(back) == text);
    }
    const auto e = FinitePermutation::identity({}, {2, 2});
    CHECK(parse_permutation_dump(dump_permutation(e), {2, 2}) == e);
  }

  TEST_CASE("swap dump") {
    CHECK(dump_permutation(FinitePermutation::swap(0, 2)) ==
          "0:0 1:0\n00 -> 00\n01 -> 10\n10 -> 01\n11 -> 11\n");
  }
}
