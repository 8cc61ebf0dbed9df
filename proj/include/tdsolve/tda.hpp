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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdsolve/arena.hpp"
#include "tdsolve/attract.hpp"
#include "tdsolve/counters.hpp"
#include "tdsolve/solve_result.hpp"

namespace tdsolve {

/**
 * A pluggable partial solver used to strengthen the generalized attractor.
 * Instances are expected to be "nice with traps": monotone under restriction
 * to opponent traps, stable on their own output, propagating nonemptiness
 * into intersecting sigma-traps, and always returning an opponent trap whose
 * top priority belongs to sigma. This is assumed, not checked at call time;
 * the depth-k solvers below satisfy it.
 */
struct SubSolver {
  std::string name;
  std::function<VertexSet(const SubgameView&, Player, Counters*)> fn;

  VertexSet operator()(const SubgameView& view, Player sigma,
                       Counters* counters) const {
    if (counters) counters->add("subsolver.calls");
    return fn(view, sigma, counters);
  }

  /// The trivial solver that finds nothing (depth 0).
  static SubSolver empty() {
    return SubSolver{"empty", [](const SubgameView& view, Player,
                                 Counters*) {
                       return VertexSet(view.alive().universe());
                     }};
  }

  static SubSolver tda(int k);
};

namespace detail {

inline VertexSet gen_attr_impl(const SubgameView& view, int lambda,
                               const VertexSet& x, Player sigma,
                               const SubSolver& sub, Counters* counters,
                               std::uint64_t* direct_iterations) {
  require_aligned(view, "gen_attr");
  require_subset(x, view, "gen_attr");
  if (counters) counters->add("genattr.calls");

  const ParityGame& g = view.game();
  VertexSet cur = x;
  for (;;) {
    if (counters) counters->add("genattr.iterations");
    if (direct_iterations) ++*direct_iterations;
    const VertexSet safe = safe_attr(view, lambda, cur, sigma, counters);
    const SubgameView remainder(g, view.alive() - safe);
    const VertexSet arena = restrict(remainder, lambda, sigma, counters);
    VertexSet next = safe | sub(SubgameView(g, arena), sigma, counters);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace detail

/**
 * Generalized safe attractor. Starting from x, repeat until stable:
 * extend by the lambda-safe attractor, then adjoin whatever the sub-solver
 * wins inside the lambda-restriction of the untouched remainder. The loop
 * body always runs at least once, so even from an empty seed the sub-solver
 * gets its chance; with the empty sub-solver this is exactly safe_attr.
 */
inline VertexSet gen_attr(const SubgameView& view, int lambda,
                          const VertexSet& x, Player sigma,
                          const SubSolver& sub, Counters* counters = nullptr) {
  return detail::gen_attr_impl(view, lambda, x, sigma, sub, counters,
                               nullptr);
}

/**
 * Sequential safe attractor: peel the sigma-owned targets of x by
 * descending priority groups, folding each group through gen_attr with
 * lambda equal to the group's priority. A vertex joins the result when
 * sigma can steer it toward some target w while keeping every priority
 * along the way below p(w), or win outright via the sub-solver.
 */
inline VertexSet seq_attr(const SubgameView& view, const VertexSet& x,
                          Player sigma, const SubSolver& sub,
                          Counters* counters = nullptr) {
  require_aligned(view, "seq_attr");
  require_subset(x, view, "seq_attr");
  if (counters) counters->add("seqattr.calls");
  std::uint64_t direct_iterations = 0;

  VertexSet work = x & sigma_vertices(view, sigma);
  VertexSet c(view.alive().universe());
  while (!work.empty()) {
    if (counters) counters->add("seqattr.iterations");
    const VertexSet group = max_vertices(view, work);
    const int lambda = view.game().priority(group.front());
    c = detail::gen_attr_impl(view, lambda, c | group, sigma, sub, counters,
                              &direct_iterations);
    work -= c;
  }

  if (counters) {
    // one SeqAttr call drives at most n + |distinct sigma-priorities|
    // gen_attr loop iterations of its own: every extra loop adds a vertex
    std::vector<int> ps;
    sigma_vertices(view, sigma).for_each(
        [&](Vertex v) { ps.push_back(view.game().priority(v)); });
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    if (direct_iterations > view.alive_count() + ps.size())
      counters->add("seqattr.genattr_bound_violations");
  }
  return c;
}

/**
 * Priority-driven reformulation of seq_attr: run gen_attr once for every
 * sigma-parity priority of the supplied list, highest first, seeding each
 * step with the matching slice of x. Requires the list to cover every
 * priority of x's sigma-owned vertices; the output always equals
 * seq_attr(view, x, sigma, sub). Kept as an independently testable surface.
 */
inline VertexSet seq_attr_p(const SubgameView& view,
                            const std::vector<int>& priorities,
                            const VertexSet& x, Player sigma,
                            const SubSolver& sub,
                            Counters* counters = nullptr) {
  require_aligned(view, "seq_attr_p");
  require_subset(x, view, "seq_attr_p");

  bool covered = true;
  (x & sigma_vertices(view, sigma)).for_each([&](Vertex v) {
    const int p = view.game().priority(v);
    if (std::find(priorities.begin(), priorities.end(), p) ==
        priorities.end())
      covered = false;
  });
  if (!covered)
    throw std::invalid_argument(
        "seq_attr_p: priority list must cover all sigma-priorities of x");

  std::vector<int> queue;
  for (int p : priorities)
    if (parity_of(p) == sigma) queue.push_back(p);
  std::sort(queue.rbegin(), queue.rend());
  queue.erase(std::unique(queue.begin(), queue.end()), queue.end());

  VertexSet c(view.alive().universe());
  for (int lambda : queue) {
    VertexSet seed = c;
    x.for_each([&](Vertex v) {
      if (view.game().priority(v) == lambda) seed.set(v);
    });
    // an empty seed cannot start the fixpoint (the original formulation
    // never issues such calls), so it passes through unchanged
    if (seed.empty()) continue;
    c = gen_attr(view, lambda, seed, sigma, sub, counters);
  }
  return c;
}

/**
 * The trap-depth strengthening loop: run seq_attr on the shrinking target
 * set of sigma-owned vertices, dropping targets with no edge back into the
 * attracted region. With a sub-solver that is nice with traps, the output
 * is the unique largest "good" set: an opponent trap with top priority of
 * sigma's parity, each of whose sigma-subtraps either keeps that property
 * or yields a nonempty sub-solver result.
 */
inline VertexSet tda_generic(const SubgameView& view, Player sigma,
                             const SubSolver& sub,
                             Counters* counters = nullptr) {
  require_aligned(view, "tda_generic");
  if (counters) counters->add("tda.calls");

  VertexSet targets = sigma_vertices(view, sigma);
  const std::uint64_t target_budget = targets.count() + 1;
  std::uint64_t own_iterations = 0;
  VertexSet c(view.alive().universe());

  while (!targets.empty()) {
    if (counters) counters->add("tda.outer_iterations");
    ++own_iterations;
    c = seq_attr(view, targets, sigma, sub, counters);
    VertexSet kept(targets.universe());
    targets.for_each([&](Vertex v) {
      for (Vertex w : view.game().successors(v))
        if (c.test(w)) {
          kept.set(v);
          return;
        }
    });
    if (kept == targets) break;
    targets = kept;
    c = VertexSet(view.alive().universe());  // recomputed next round
    if (targets.empty()) break;
  }

  if (counters && own_iterations > target_budget)
    counters->add("tda.outer_bound_violations");
  return c;
}

/**
 * The depth-k solver: the largest set from which sigma, moving first, can
 * win the trap-depth game within k rounds. Depth 0 finds nothing; depth
 * k+1 strengthens depth k through tda_generic. No memoization across the
 * recursion: every nested call sees a fresh view.
 */
inline VertexSet tda_k(const SubgameView& view, Player sigma, int k,
                       Counters* counters = nullptr) {
  if (k <= 0) return VertexSet(view.alive().universe());
  require_aligned(view, "tda_k");
  return tda_generic(view, sigma, SubSolver::tda(k - 1), counters);
}

inline SubSolver SubSolver::tda(int k) {
  if (k <= 0) return SubSolver::empty();
  return SubSolver{"tda_" + std::to_string(k),
                   [k](const SubgameView& view, Player sigma,
                       Counters* counters) {
                     return tda_k(view, sigma, k, counters);
                   }};
}

struct TrapDepthResult {
  int k = 0;
  std::vector<Player> winners;  // players achieving depth k, Even first

  bool wins(Player p) const {
    return std::find(winners.begin(), winners.end(), p) != winners.end();
  }
};

/**
 * The trap-depth of the game: the least k such that some player, moving
 * first, wins the trap-depth game within k rounds, found by running tda_k
 * for k = 1, 2, ... The search is bounded by ceil(d/2) for d distinct
 * priorities, since the top live priority drops twice per round.
 */
inline TrapDepthResult trap_depth(const SubgameView& view,
                                  Counters* counters = nullptr) {
  require_aligned(view, "trap_depth");
  if (view.empty())
    throw std::invalid_argument("trap_depth: empty game");

  const int bound = int((distinct_priority_count(view) + 1) / 2);
  for (int k = 1; k <= bound; ++k) {
    TrapDepthResult result;
    result.k = k;
    if (!tda_k(view, Player::Even, k, counters).empty())
      result.winners.push_back(Player::Even);
    if (!tda_k(view, Player::Odd, k, counters).empty())
      result.winners.push_back(Player::Odd);
    if (!result.winners.empty()) return result;
  }
  throw std::logic_error(
      "trap_depth: no winner within ceil(d/2) rounds; this contradicts the "
      "trap-depth characterization");
}

/**
 * Full solver by iterated peeling: for k = 1, 2, ... try each player's
 * depth-k solver (Even first); on the first nonempty find, move its whole
 * attractor into that player's region and restart at k = 1 on the rest,
 * which is a trap and hence a valid subgame. Uncapped, the loop always
 * terminates with a complete partition; with k_cap, whatever survives all
 * capped depths is reported as undecided.
 */
inline SolveResult solve_full(const SubgameView& view,
                              std::optional<int> k_cap = std::nullopt) {
  require_aligned(view, "solve_full");
  Counters counters;
  SolveResult result(view.alive().universe());

  VertexSet remaining = view.alive();
  while (!remaining.empty()) {
    const SubgameView stage(view.game(), remaining);
    const int natural = int((distinct_priority_count(stage) + 1) / 2);
    const int bound = k_cap ? std::min(natural, *k_cap) : natural;

    bool removed = false;
    for (int k = 1; k <= bound && !removed; ++k) {
      for (Player sigma : {Player::Even, Player::Odd}) {
        counters.add("solve.tda_k_calls");
        const VertexSet s = tda_k(stage, sigma, k, &counters);
        if (s.empty()) continue;
        const VertexSet gained = attr(stage, s, sigma, &counters);
        (sigma == Player::Even ? result.w_even : result.w_odd) |= gained;
        remaining -= gained;
        counters.add("solve.stages");
        removed = true;
        break;
      }
    }
    if (!removed) {
      if (!k_cap || *k_cap >= natural)
        throw std::logic_error(
            "solve_full: no winner found within the depth bound; this "
            "contradicts the trap-depth characterization");
      result.undecided = remaining;
      break;
    }
  }
  result.counters = counters.tally;
  return result;
}

}  // namespace tdsolve
