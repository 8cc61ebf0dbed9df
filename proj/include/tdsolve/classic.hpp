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

#pragma once

#include "tdsolve/arena.hpp"
#include "tdsolve/attract.hpp"
#include "tdsolve/counters.hpp"
#include "tdsolve/solve_result.hpp"

namespace tdsolve {

/**
 * Odd's winning region of a two-priority game (all priorities 0 or 1),
 * by the classical shrinking-target-set loop: repeatedly attract to the
 * priority-1 targets and drop targets whose owner cannot re-enter the
 * attractor. Owner-generic; the complement is Even's winning region.
 */
inline VertexSet buchi_solve(const SubgameView& view,
                             Counters* counters = nullptr) {
  const ParityGame& g = view.game();
  bool priorities_ok = true;
  view.alive().for_each([&](Vertex v) {
    if (g.priority(v) != 0 && g.priority(v) != 1) priorities_ok = false;
  });
  if (!priorities_ok)
    throw std::invalid_argument(
        "buchi_solve: all priorities must be 0 or 1");

  VertexSet targets(view.alive().universe());
  view.alive().for_each([&](Vertex v) {
    if (g.priority(v) == 1) targets.set(v);
  });

  VertexSet reach = attr(view, targets, Player::Odd, counters);
  for (;;) {
    if (counters) counters->add("buchi.iterations");
    VertexSet kept(targets.universe());
    targets.for_each([&](Vertex v) {
      if (g.owner(v) == Player::Odd) {
        for (Vertex w : g.successors(v))
          if (reach.test(w)) {
            kept.set(v);
            return;
          }
      } else {
        for (Vertex w : g.successors(v))
          if (view.contains(w) && !reach.test(w)) return;
        kept.set(v);
      }
    });
    if (kept == targets) return reach;
    targets = kept;
    reach = attr(view, targets, Player::Odd, counters);
  }
}

namespace detail {

inline void zielonka_rec(const ParityGame& g, const VertexSet& alive,
                         VertexSet& w_even, VertexSet& w_odd,
                         Counters* counters) {
  if (alive.empty()) return;
  if (counters) counters->add("zielonka.recursions");
  const SubgameView view(g, alive);

  const VertexSet tops = max_vertices(view, alive);
  const Player sigma = parity_of(g.priority(tops.front()));
  VertexSet& w_sigma = sigma == Player::Even ? w_even : w_odd;
  VertexSet& w_other = sigma == Player::Even ? w_odd : w_even;

  const VertexSet a = attr(view, tops, sigma, counters);
  VertexSet sub_even(alive.universe()), sub_odd(alive.universe());
  zielonka_rec(g, alive - a, sub_even, sub_odd, counters);
  VertexSet& sub_other = sigma == Player::Even ? sub_odd : sub_even;

  if (sub_other.empty()) {
    w_sigma |= a;
    w_sigma |= sigma == Player::Even ? sub_even : sub_odd;
    return;
  }
  const VertexSet b = attr(view, sub_other, opponent(sigma), counters);
  VertexSet rest_even(alive.universe()), rest_odd(alive.universe());
  zielonka_rec(g, alive - b, rest_even, rest_odd, counters);
  w_other |= b;
  w_even |= rest_even;
  w_odd |= rest_odd;
}

}  // namespace detail

/**
 * Exact winning regions by the recursive attractor-peeling algorithm.
 * Owner-generic reference solver; alignment is not required. All vertices
 * of the current maximum priority are peeled together.
 */
inline SolveResult zielonka_solve(const SubgameView& view) {
  Counters counters;
  SolveResult result(view.alive().universe());
  detail::zielonka_rec(view.game(), view.alive(), result.w_even, result.w_odd,
                       &counters);
  result.counters = counters.tally;
  return result;
}

}  // namespace tdsolve
