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

#include "tdsolve/classic.hpp"
#include "tdsolve/muller.hpp"
#include "test_util.hpp"

using namespace tdsolve;
using namespace tdsolve::testutil;

namespace {

/// v0 red -> v1, v1 blue -> v0, with the whole cycle winning for Red.
ExplicitMullerGame cycle_muller() {
  return ExplicitMullerGame(2, {{1}, {0}}, ids(2, {0}),
                            {ids(2, {0, 1})});
}

/// Two self-loops, v0 red and v1 blue, with {v0} winning for Red.
ExplicitMullerGame loop_muller() {
  return ExplicitMullerGame(2, {{0}, {1}}, ids(2, {0}), {ids(2, {0})});
}

bool red_region_nonempty(const ExplicitMullerGame& g) {
  const LarReduction reduced = lar_reduce(g);
  const SolveResult solved = zielonka_solve(SubgameView(reduced.game));
  for (Vertex v = 0; v < g.size(); ++v)
    if (solved.w_even.test(reduced.initial_state[v])) return true;
  return false;
}

}  // namespace

TEST_CASE("family is stored deduplicated and ordered") {
  const ExplicitMullerGame g(2, {{0, 1}, {0}}, ids(2, {0}),
                             {ids(2, {0, 1}), ids(2, {1}), ids(2, {0, 1})});
  REQUIRE(g.family().size() == 2);
  REQUIRE(g.family()[0] == ids(2, {1}));
  REQUIRE(g.red_wins_if_recurs(ids(2, {1})));
  REQUIRE_FALSE(g.red_wins_if_recurs(ids(2, {0})));
}

TEST_CASE("pruning removes sets whose subgraph has dead ends") {
  const ExplicitMullerGame g(2, {{1}, {0}}, ids(2, {0}),
                             {ids(2, {0}), ids(2, {0, 1})});
  const ExplicitMullerGame pruned = prune_family(g);
  REQUIRE(pruned.family() == std::vector<VertexSet>{ids(2, {0, 1})});

  REQUIRE(prune_family(cycle_muller()).family() == cycle_muller().family());
  REQUIRE(prune_family(g.with_family({})).family().empty());
}

TEST_CASE("trap covering checks") {
  const ExplicitMullerGame g = cycle_muller();
  // the only red-trap of the whole game is the whole game
  REQUIRE(trap_covers(g, ids(2, {0, 1}), {ids(2, {0, 1})}));
  REQUIRE_FALSE(trap_covers(g, ids(2, {0, 1}), {}));
  // a subgame with no red-traps at all is covered vacuously
  const ExplicitMullerGame loops = loop_muller();
  REQUIRE(trap_covers(loops, ids(2, {1}), {}));
}

TEST_CASE("deciding whether Red wins somewhere") {
  const MullerDecision cycle = red_wins_somewhere(cycle_muller());
  REQUIRE(cycle.red_wins_somewhere);
  REQUIRE(cycle.winning_sets == std::vector<VertexSet>{ids(2, {0, 1})});

  REQUIRE_FALSE(
      red_wins_somewhere(cycle_muller().with_family({})).red_wins_somewhere);

  const MullerDecision loops = red_wins_somewhere(loop_muller());
  REQUIRE(loops.red_wins_somewhere);
  REQUIRE(loops.winning_sets == std::vector<VertexSet>{ids(2, {0})});
}

TEST_CASE("record-based reduction on forced games") {
  // single red vertex with a self-loop that Red wins
  const ExplicitMullerGame single(1, {{0}}, VertexSet::full(1),
                                  {VertexSet::full(1)});
  const LarReduction reduced = lar_reduce(single);
  const SolveResult solved = zielonka_solve(SubgameView(reduced.game));
  REQUIRE(solved.w_even == VertexSet::full(reduced.game.size()));

  // forced two-cycle whose full vertex set is winning for Red
  const LarReduction cycle = lar_reduce(cycle_muller());
  const SolveResult cycle_solved = zielonka_solve(SubgameView(cycle.game));
  REQUIRE(cycle_solved.w_even == VertexSet::full(cycle.game.size()));

  const ExplicitMullerGame big(7, {{0}, {0}, {0}, {0}, {0}, {0}, {0}},
                               VertexSet(7), {});
  REQUIRE_THROWS_AS(lar_reduce(big), OracleCapError);
}

TEST_CASE("explicit procedure agrees with the record-based reference") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const ExplicitMullerGame g = random_muller(i, 4, 3);
    const MullerDecision mine = red_wins_somewhere(g);
    REQUIRE(mine.red_wins_somewhere == red_region_nonempty(g));
  }
}

TEST_CASE("explicit procedure agrees with the trap-depth recursion") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const ExplicitMullerGame g = random_muller(i, 4, 3);
    const int rounds = int((g.size() + 1) / 2);
    REQUIRE(red_wins_somewhere(g).red_wins_somewhere ==
            delta(g, kRed, rounds));
  }
}

TEST_CASE("pruning never changes the answer") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const ExplicitMullerGame g = random_muller(i, 5, 4);
    REQUIRE(red_wins_somewhere(g).red_wins_somewhere ==
            red_wins_somewhere(prune_family(g)).red_wins_somewhere);
  }
}
