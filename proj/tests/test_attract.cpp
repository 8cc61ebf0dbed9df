/*
 * Copyright 2026 the tdsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include "tdsolve/attract.hpp"
#include "tdsolve/oracle.hpp"
#include "test_util.hpp"

using namespace tdsolve;
using namespace tdsolve::testutil;

TEST_CASE("attractor on the tiny fixtures") {
  const ParityGame c = two_cycle();
  const SubgameView cv(c);
  REQUIRE(attr(cv, ids(2, {1}), Player::Odd) == cv.alive());

  const ParityGame b = self_loop_pair();
  const SubgameView bv(b);
  REQUIRE(attr(bv, ids(2, {0}), Player::Odd) == ids(2, {0}));
  REQUIRE(attr(bv, bv.alive(), Player::Even) == bv.alive());

  VertexSet outside(2);
  outside.set(1);
  REQUIRE_THROWS_AS(attr(SubgameView(b, ids(2, {0})), outside, Player::Even),
                    std::invalid_argument);
}

TEST_CASE("safe attractor admits only priorities below lambda") {
  const ParityGame c = two_cycle();
  const SubgameView cv(c);
  // lambda above every priority: same as the plain attractor
  REQUIRE(safe_attr(cv, 2, ids(2, {1}), Player::Odd) == cv.alive());
  REQUIRE(safe_attr(cv, 0, ids(2, {0}), Player::Even) == ids(2, {0}));
  REQUIRE(safe_attr(cv, 1, ids(2, {1}), Player::Even) == cv.alive());
}

TEST_CASE("lambda restriction") {
  const ParityGame c = two_cycle();
  REQUIRE(restrict(SubgameView(c), 1, Player::Even).empty());

  const ParityGame b = self_loop_pair();
  REQUIRE(restrict(SubgameView(b), 1, Player::Even) == ids(2, {0}));
  REQUIRE(restrict(SubgameView(b), 5, Player::Even) == VertexSet::full(2));
  REQUIRE(restrict(SubgameView(b), 5, Player::Odd) == VertexSet::full(2));
}

TEST_CASE("attractor complements are traps") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const ParityGame g = corpus_game(i, 12, 6);
    const SubgameView view(g);
    SplitMix64 rng(17 + i);
    for (Player sigma : {Player::Even, Player::Odd}) {
      const VertexSet target = random_subset(view, rng, 3);
      const VertexSet reach = attr(view, target, sigma);
      REQUIRE(target.subset_of(reach));
      REQUIRE(is_trap(view, view.alive() - reach, sigma));
    }
  }
}

TEST_CASE("attr equals safe_attr once lambda clears the rest of the game") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const ParityGame g = corpus_game(i, 10, 6);
    const SubgameView view(g);
    SplitMix64 rng(91 + i);
    const VertexSet x = random_subset(view, rng, 2);
    const VertexSet rest = view.alive() - x;
    if (rest.empty()) continue;
    const int lambda = max_priority(view, rest) + 1;
    REQUIRE(safe_attr(view, lambda, x, Player::Even) ==
            attr(view, x, Player::Even));
  }
}

TEST_CASE("safe attractor monotone in lambda, seed, and subgame") {
  int cases = 0;
  for (std::uint64_t i = 0; cases < 80; ++i) {
    const ParityGame g = corpus_game(i, 10, 6);
    const SubgameView view(g);
    SplitMix64 rng(123 + i);
    const Player sigma = rng.below(2) ? Player::Even : Player::Odd;
    const VertexSet a = random_trap(view, opponent(sigma), rng);
    if (a.empty()) continue;
    const VertexSet x2 = random_subset(view, rng, 2);
    const VertexSet x1 = random_subset(view, rng, 2) & x2 & a;
    const int l2 = int(rng.below(8));
    const int l1 = l2 - int(rng.below(3));
    const SubgameView inner(g, a);
    REQUIRE(safe_attr(inner, l1, x1, sigma)
                .subset_of(safe_attr(view, l2, x2, sigma)));
    ++cases;
  }
}

TEST_CASE("safe attractor stabilizes its own output") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const ParityGame g = corpus_game(i, 10, 6);
    const SubgameView view(g);
    SplitMix64 rng(321 + i);
    const Player sigma = rng.below(2) ? Player::Even : Player::Odd;
    const int lambda = int(rng.below(8));
    const VertexSet s =
        safe_attr(view, lambda, random_subset(view, rng, 2), sigma);
    REQUIRE(safe_attr(view, lambda, s, sigma) == s);
    // and inside any enclosing opponent trap
    const VertexSet a = random_trap(view, opponent(sigma), rng) | s;
    if (is_trap(view, a, opponent(sigma)))
      REQUIRE(safe_attr(SubgameView(g, a), lambda, s, sigma) == s);
  }
}

TEST_CASE("attractors restricted to traps stay inside the local attractor") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const ParityGame g = corpus_game(i, 9, 5);
    const SubgameView view(g);
    SplitMix64 rng(555 + i);
    for (Player sigma : {Player::Even, Player::Odd}) {
      const VertexSet x = random_trap(view, sigma, rng);
      if (x.empty()) continue;
      const VertexSet y = random_subset(view, rng, 3);
      const VertexSet s = attr(view, y, sigma);
      const VertexSet local = attr(SubgameView(g, x), x & y, sigma);
      REQUIRE((x & s).subset_of(local));
    }
  }
}

TEST_CASE("fixpoints relax each live edge at most twice") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const ParityGame g = corpus_game(i, 30, 6);
    const SubgameView view(g);
    SplitMix64 rng(777 + i);
    Counters counters;
    attr(view, random_subset(view, rng, 3), Player::Odd, &counters);
    safe_attr(view, 3, random_subset(view, rng, 3), Player::Even, &counters);
    REQUIRE(counters.get("attr.edge_bound_violations") == 0);
    REQUIRE(counters.get("attr.calls") == 2);
  }
}
