#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "rca/reversibility.hpp"

using namespace rca;

TEST_SUITE("reversibility") {
  TEST_CASE("is_injective agrees with cyclic injectivity over all elementary rules") {
    std::vector<int> reversible;
    for (int code = 0; code < 256; ++code) {
      const LocalRule r = LocalRule::elementary(code);
      const bool inj = is_injective(r);
      if (inj) reversible.push_back(code);
      // Non-injective rules already collide on some small period.
      CHECK_MESSAGE(inj == oracle::cyclic_injective(r, 8), "rule " << code);
    }
    CHECK(reversible == corpus::kReversibleElementary);
  }

  TEST_CASE("is_injective on larger alphabets") {
    CHECK(is_injective(corpus::cycle3()));
    CHECK(is_injective(corpus::second_order(90)));
    CHECK(is_injective(corpus::second_order(30)));
    CHECK_FALSE(is_injective(LocalRule::cellwise({0, 0, 1})));
    CHECK(is_injective(LocalRule::identity(1)));
  }

  TEST_CASE("invert examples") {
    CHECK(equal(invert(LocalRule::elementary(170)), LocalRule::elementary(240)));
    CHECK(invert(LocalRule::elementary(170)).neighborhood() == Neighborhood{-1});
    CHECK(equal(invert(LocalRule::elementary(51)), LocalRule::elementary(51)));
    CHECK(equal(invert(corpus::cycle3()), LocalRule::cellwise({2, 0, 1})));
    CHECK_THROWS_AS(invert(LocalRule::elementary(90)), NotInjective);
  }

  TEST_CASE("invert of second-order automata matches the explicit inverse") {
    for (int code : {30, 90, 110, 150}) {
      const LocalRule inv = invert(corpus::second_order(code));
      CHECK(equal(inv, corpus::second_order_inverse(code)));
    }
  }

  TEST_CASE("radius cap is honoured") {
    // The shift by three needs an inverse of radius 3.
    const LocalRule far = parse_rule("alphabet 2\nneighborhood 3\ntable 0 1\n");
    CHECK_THROWS_AS(invert(far, 2), RadiusCapExceeded);
    CHECK(invert(far, 3).neighborhood() == Neighborhood{-3});
  }

  TEST_CASE("from_pair verifies the inverse") {
    const auto g = ReversibleCA::from_pair(LocalRule::elementary(170), LocalRule::elementary(240));
    CHECK(g.forward().neighborhood() == Neighborhood{1});
    CHECK_THROWS_AS(ReversibleCA::from_pair(LocalRule::elementary(170), LocalRule::elementary(170)),
                    NotInverse);
  }

  TEST_CASE("neighborhoods report") {
    const auto nb = neighborhoods(ReversibleCA::from_rule(LocalRule::elementary(170)));
    CHECK(nb.forward == Neighborhood{1});
    CHECK(nb.inverse == Neighborhood{-1});
    CHECK(nb.transposed == Neighborhood{1});
  }

  TEST_CASE("power") {
    const auto g = ReversibleCA::from_rule(LocalRule::elementary(15));
    CHECK(power(g, 1).forward().neighborhood() == Neighborhood{-1});
    CHECK(power(g, 2).forward().neighborhood() == Neighborhood{-2});
    CHECK(equal(power(g, 3).inverse(), compose(g.inverse(), compose(g.inverse(), g.inverse()))));
  }

  TEST_CASE("property: invert is an involution and composes to the identity") {
    std::vector<LocalRule> rules;
    for (int code : corpus::kReversibleElementary) rules.push_back(LocalRule::elementary(code));
    rules.push_back(corpus::cycle3());
    for (int code : {30, 45, 90, 105, 150}) rules.push_back(corpus::second_order(code));
    rules.push_back(product(LocalRule::elementary(170), LocalRule::elementary(15)));
    for (const auto& r : rules) {
      const LocalRule inv = invert(r);
      CHECK(equal(invert(inv), r));
      CHECK(equal(compose(inv, r), LocalRule::identity(r.alphabet())));
      CHECK(equal(compose(r, inv), LocalRule::identity(r.alphabet())));
      const int n = 6;
      const std::size_t total = oracle::ipow(r.alphabet(), n);
      for (std::size_t k = 0; k < total; k += 7) {
        const CyclicConfig c = config_from_index(r.alphabet(), n, k);
        REQUIRE(apply_cyclic(inv, apply_cyclic(r, c)) == c);
      }
    }
  }

  TEST_CASE("property: random cellwise permutations composed with shifts are reversible") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      const int q = 2 + static_cast<int>(rng() % 3);
      std::vector<int> perm(q);
      for (int x = 0; x < q; ++x) perm[x] = x;
      std::shuffle(perm.begin(), perm.end(), rng);
      const int s = static_cast<int>(rng() % 5) - 2;
      std::vector<int> table(perm);
      const LocalRule r(q, Neighborhood{s}, table);
      CHECK(is_injective(r));
      const LocalRule inv = invert(r);
      CHECK(inv.neighborhood() == Neighborhood{-s});
      CHECK(equal(compose(inv, r), LocalRule::identity(q)));
    }
  }
}
