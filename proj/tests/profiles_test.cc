#include <doctest.h>

#include "pgtk/generate.hh"
#include "pgtk/profiles.hh"
#include "util.hh"

using namespace pgtk;
using test_util::E;
using test_util::O;
using test_util::make_game;

TEST_CASE("single edge yields the max of both priorities") {
  ParityGame g = make_game({{E, 3, {1}}, {O, 6, {0}}});
  CHECK(achievable_maxima(g, 0, {1}, 1) == std::set<int>{6});
  CHECK(oracle_enumerate_walks(g, 0, {1}, 1, 4) == std::set<int>{6});
}

TEST_CASE("no route into F yields the empty set") {
  ParityGame g = make_game({{E, 3, {0}}, {O, 6, {1}}});  // two separate loops
  CHECK(achievable_maxima(g, 0, {1}, 1).empty());
  CHECK(oracle_enumerate_walks(g, 0, {1}, 1, 4).empty());
}

TEST_CASE("a diamond offers both route maxima") {
  // s=0 -> 1(pri 4) -> u=3, s -> 2(pri 7) -> u; s pri 0, u pri 2.
  ParityGame g = make_game(
      {{E, 0, {1, 2}}, {O, 4, {3}}, {O, 7, {3}}, {E, 2, {0}}});
  CHECK(achievable_maxima(g, 0, {3}, 3) == std::set<int>{4, 7});
  CHECK(oracle_enumerate_walks(g, 0, {3}, 3, 8) == std::set<int>{4, 7});
}

TEST_CASE("profiles take the significance min for Even and max for Odd") {
  ParityGame g = make_game(
      {{O, 0, {1, 2}}, {E, 4, {3}}, {E, 7, {3}}, {O, 2, {0}}});
  // All vertices of degree > 1 belong to the opponent, so either player's
  // strategy leaves both routes open.
  Strategy sigma{Owner::Even, {-1, 3, 3, -1}};
  Strategy tau{Owner::Odd, {1, -1, -1, 0}};
  StrategyProfile pe = profile_of_strategy(g, sigma, 0, {3});
  CHECK(pe.at(3) == 7);  // 7 is odd, hence significance-smaller than 4
  ParityGame h = make_game(
      {{E, 0, {1, 2}}, {O, 4, {3}}, {O, 7, {3}}, {E, 2, {0}}});
  Strategy tau2{Owner::Odd, {-1, 3, 3, -1}};
  StrategyProfile po = profile_of_strategy(h, tau2, 0, {3});
  CHECK(po.at(3) == 4);
  (void)tau;
}

TEST_CASE("unreachable entries render as a dash") {
  StrategyProfile p{{0, 1}, {2, kUnreachable}};
  CHECK(render_profile(p) == "{0: 2, 1: -}");
}

TEST_CASE("refutes follows the two clauses") {
  StrategyProfile all_un{{0, 1}, {kUnreachable, kUnreachable}};
  StrategyProfile tau1{{0, 1}, {3, kUnreachable}};
  CHECK(refutes(tau1, all_un));

  StrategyProfile same{{0, 1}, {3, kUnreachable}};
  CHECK_FALSE(refutes(tau1, same));  // equality at vertex 0 breaks clause two

  StrategyProfile tau2{{0, 1}, {3, kUnreachable}};
  StrategyProfile claim2{{0, 1}, {4, 2}};
  CHECK_FALSE(refutes(tau2, claim2));  // tau unreachable at 1 while P claims 2

  StrategyProfile tau3{{0, 1}, {3, 6}};
  StrategyProfile claim3{{0, 1}, {4, 8}};
  CHECK(refutes(tau3, claim3));  // 3 beats 4 and 6 beats 8 for Even

  StrategyProfile wrong_set{{0, 2}, {3, 6}};
  CHECK_THROWS(refutes(tau3, wrong_set));
}

TEST_CASE("refutes is monotone under worsening claims") {
  StrategyProfile tau{{0, 1}, {2, 5}};
  StrategyProfile claim{{0, 1}, {4, 7}};
  if (refutes(tau, claim)) {
    StrategyProfile worse{{0, 1}, {6, 9}};  // worse for Even at both exits
    CHECK(refutes(tau, worse));
  }
}

TEST_CASE("endpoint preconditions are enforced") {
  ParityGame g = make_game({{E, 3, {1}}, {O, 6, {0}}});
  CHECK_THROWS(achievable_maxima(g, 0, {0, 1}, 1));  // s inside F
  CHECK_THROWS(achievable_maxima(g, 0, {1}, 0));     // u outside F
}

TEST_CASE("achievable_maxima matches exhaustive walk enumeration") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 3 + static_cast<int>(seed % 7);  // up to 9 vertices
    ParityGame g = generate_game(n, 2, 4, 5000 + seed).game;
    int s = static_cast<int>(seed % static_cast<std::uint64_t>(n));
    int u = static_cast<int>((seed / 7) % static_cast<std::uint64_t>(n));
    if (s == u) continue;
    std::vector<int> F{u};
    if (static_cast<int>(seed) % 3 == 0) {
      int extra = (u + 1) % n;
      if (extra != s && extra != u) F.push_back(extra);
    }
    std::sort(F.begin(), F.end());
    CAPTURE(seed);
    CHECK(achievable_maxima(g, s, F, u) ==
          oracle_enumerate_walks(g, s, F, u, 2 * n));
  }
}

TEST_CASE("even profile entries are witnessed by real walks") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 3 + static_cast<int>(seed % 5);
    ParityGame g = generate_game(n, 2, 3, 9000 + seed).game;
    Strategy sigma{Owner::Even, std::vector<int>(n, -1)};
    for (int v = 0; v < n; ++v)
      if (g.owner(v) == Owner::Even) sigma.choice[v] = g.succ(v).front();
    int s = 0, u = n - 1;
    if (s == u) continue;
    StrategyProfile p = profile_of_strategy(g, sigma, s, {u});
    if (p.at(u) == kUnreachable) continue;
    ParityGame r = restrict(g, sigma);
    auto walks = oracle_enumerate_walks(r, s, {u}, u, 2 * n);
    CHECK(walks.count(p.at(u)) == 1);
  }
}
