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
#include "tdsolve/gen.hpp"
#include "tdsolve/io.hpp"
#include "tdsolve/oracle.hpp"
#include "tdsolve/tda.hpp"
#include "test_util.hpp"

using namespace tdsolve;
using namespace tdsolve::testutil;

TEST_CASE("generalized attractor with the empty sub-solver is safe_attr") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const ParityGame g = corpus_game(i, 9, 6);
    const SubgameView view(g);
    SplitMix64 rng(1000 + i);
    const Player sigma = rng.below(2) ? Player::Even : Player::Odd;
    const int lambda = int(rng.below(8));
    const VertexSet x = random_subset(view, rng, 2);
    REQUIRE(gen_attr(view, lambda, x, sigma, SubSolver::empty()) ==
            safe_attr(view, lambda, x, sigma));
  }
}

TEST_CASE("generalized attractor lets the sub-solver seed the fixpoint") {
  const ParityGame b = self_loop_pair();
  const SubgameView view(b);
  REQUIRE(gen_attr(view, 2, VertexSet(2), Player::Even, SubSolver::tda(1)) ==
          ids(2, {0}));
  REQUIRE(gen_attr(view, 2, view.alive(), Player::Even, SubSolver::tda(1)) ==
          view.alive());
}

TEST_CASE("generalized attractor requires alignment") {
  const ParityGame off = parse_pgsolver("0 1 0 0;");
  REQUIRE_THROWS_AS(gen_attr(SubgameView(off), 2, VertexSet(1), Player::Even,
                             SubSolver::empty()),
                    std::invalid_argument);
}

TEST_CASE("sequential attractor on the tiny fixtures") {
  const ParityGame b = self_loop_pair();
  const SubgameView view(b);
  REQUIRE(seq_attr(view, ids(2, {0}), Player::Even, SubSolver::empty()) ==
          ids(2, {0}));
  REQUIRE(seq_attr(view, VertexSet(2), Player::Even, SubSolver::empty())
              .empty());
}

TEST_CASE("sequential attractor absorbs everything when the whole set is good") {
  // every Even-subtrap of the all-even self-loop family has an even top
  const ParityGame g = self_loops({0, 2, 4});
  const SubgameView view(g);
  const VertexSet even_targets = sigma_vertices(view, Player::Even);
  REQUIRE(seq_attr(view, even_targets, Player::Even, SubSolver::empty()) ==
          view.alive());
}

TEST_CASE("priority-list reformulation matches the sequential attractor") {
  const ParityGame b = self_loop_pair();
  const SubgameView bv(b);
  REQUIRE(seq_attr_p(bv, {0}, ids(2, {0}), Player::Even,
                     SubSolver::empty()) == ids(2, {0}));
  REQUIRE(seq_attr_p(bv, {0, 2, 4}, VertexSet(2), Player::Even,
                     SubSolver::tda(1))
              .empty());
  REQUIRE_THROWS_AS(
      seq_attr_p(bv, {2}, ids(2, {0}), Player::Even, SubSolver::empty()),
      std::invalid_argument);

  for (std::uint64_t i = 0; i < 60; ++i) {
    const ParityGame g = corpus_game(i, 9, 6);
    const SubgameView view(g);
    SplitMix64 rng(2000 + i);
    const Player sigma = rng.below(2) ? Player::Even : Player::Odd;
    const SubSolver sub = SubSolver::tda(int(rng.below(3)));
    const VertexSet x = random_subset(view, rng, 2);
    std::vector<int> priorities;
    (x & sigma_vertices(view, sigma)).for_each([&](Vertex v) {
      priorities.push_back(g.priority(v));
    });
    // pad with extra priorities of sigma's parity (and some of the other's)
    const int parity_bit = sigma == Player::Even ? 0 : 1;
    priorities.push_back(20 + parity_bit);
    priorities.push_back(8 + parity_bit);
    priorities.push_back(9 - parity_bit);
    const VertexSet expected = seq_attr(view, x, sigma, sub);
    REQUIRE(seq_attr_p(view, priorities, x, sigma, sub) == expected);
  }
}

TEST_CASE("depth solvers on the tiny fixtures") {
  const ParityGame single = self_loops({0});
  REQUIRE(tda_generic(SubgameView(single), Player::Even, SubSolver::empty()) ==
          VertexSet::full(1));
  REQUIRE(tda_k(SubgameView(single), Player::Even, 1) == VertexSet::full(1));

  const ParityGame b = self_loop_pair();
  const SubgameView bv(b);
  REQUIRE(tda_generic(bv, Player::Even, SubSolver::empty()) == ids(2, {0}));
  REQUIRE(tda_generic(bv, Player::Odd, SubSolver::empty()) == ids(2, {1}));
  REQUIRE(tda_k(bv, Player::Even, 0).empty());

  // depth 0 never needs the game to be aligned
  const ParityGame off = parse_pgsolver("0 1 0 0;");
  REQUIRE(tda_k(SubgameView(off), Player::Even, 0).empty());
  REQUIRE_THROWS_AS(tda_k(SubgameView(off), Player::Even, 1),
                    std::invalid_argument);
}

TEST_CASE("deeper solvers unlock the ladder family") {
  const ParityGame lad = ladder(8);
  const SubgameView view(lad);
  REQUIRE(tda_k(view, Player::Even, 3).empty());
  REQUIRE(tda_k(view, Player::Even, 4) == view.alive());
}

TEST_CASE("trap depth measurements") {
  REQUIRE(trap_depth(SubgameView(self_loops({0}))).k == 1);
  REQUIRE(trap_depth(SubgameView(self_loops({0}))).winners ==
          std::vector<Player>{Player::Even});

  const TrapDepthResult both = trap_depth(SubgameView(self_loop_pair()));
  REQUIRE(both.k == 1);
  REQUIRE(both.wins(Player::Even));
  REQUIRE(both.wins(Player::Odd));

  const TrapDepthResult lad = trap_depth(SubgameView(ladder(10)));
  REQUIRE(lad.k == 5);
  REQUIRE(lad.winners == std::vector<Player>{Player::Even});

  const ParityGame g = self_loops({0});
  REQUIRE_THROWS_AS(trap_depth(SubgameView(g, VertexSet(1))),
                    std::invalid_argument);
}

TEST_CASE("full solver matches the reference partition") {
  const SolveResult b = solve_full(SubgameView(self_loop_pair()));
  REQUIRE(b.w_even == ids(2, {0}));
  REQUIRE(b.w_odd == ids(2, {1}));
  REQUIRE(b.undecided.empty());

  const SolveResult lad = solve_full(SubgameView(ladder(6)));
  REQUIRE(lad.w_even == VertexSet::full(6));

  const ParityGame g = self_loops({0});
  const SolveResult empty = solve_full(SubgameView(g, VertexSet(1)));
  REQUIRE(empty.w_even.empty());
  REQUIRE(empty.w_odd.empty());
}

TEST_CASE("capped solver reports what it could not decide") {
  const SolveResult capped = solve_full(SubgameView(ladder(8)), 2);
  REQUIRE(capped.w_even.empty());
  REQUIRE(capped.w_odd.empty());
  REQUIRE(capped.undecided == VertexSet::full(8));

  const SolveResult enough = solve_full(SubgameView(ladder(8)), 4);
  REQUIRE(enough.undecided.empty());
  REQUIRE(enough.w_even == VertexSet::full(8));
}

TEST_CASE("depth solvers are monotone and stable under traps") {
  int cases = 0;
  for (std::uint64_t i = 0; cases < 60; ++i) {
    const ParityGame g = corpus_game(i, 8, 5);
    const SubgameView view(g);
    SplitMix64 rng(3000 + i);
    const Player sigma = rng.below(2) ? Player::Even : Player::Odd;
    const SubSolver sub = SubSolver::tda(int(rng.below(3)));

    const VertexSet a = random_trap(view, opponent(sigma), rng);
    if (a.empty()) continue;
    const SubgameView inner(g, a);
    REQUIRE(tda_generic(inner, sigma, sub)
                .subset_of(tda_generic(view, sigma, sub)));

    const VertexSet s = tda_generic(view, sigma, sub);
    if (!s.empty())
      REQUIRE(tda_generic(SubgameView(g, s), sigma, sub) == s);
    ++cases;
  }
}

TEST_CASE("instrumented bounds hold across full solves") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const ParityGame g = corpus_game(i, 10, 6);
    const SolveResult r = solve_full(SubgameView(g));
    REQUIRE(r.counters.count("tda.outer_bound_violations") == 0);
    REQUIRE(r.counters.count("seqattr.genattr_bound_violations") == 0);
    REQUIRE(r.counters.count("attr.edge_bound_violations") == 0);
    REQUIRE(r.counters.at("tda.calls") > 0);
  }
}
