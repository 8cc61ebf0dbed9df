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

#include <deque>
#include <optional>

#include "tdsolve/arena.hpp"
#include "tdsolve/counters.hpp"

namespace tdsolve {

namespace detail {

/**
 * Shared worklist fixpoint behind attr and safe_attr. Attracts for sigma
 * toward seed inside alive; when lambda is set, only vertices of priority
 * below lambda may join (the seed stays regardless of priority).
 *
 * FIFO processing with per-vertex remaining-successor counts keeps the work
 * linear in the live edges: one pass to count successors, and each live edge
 * is relaxed at most once when its head leaves the queue. Opponent vertices
 * with no live successor at all are attracted vacuously, which makes the
 * routine usable on transient restrictions that contain dead ends.
 *
 * The result is the least fixpoint and does not depend on processing order;
 * the FIFO order is fixed so instrumentation counters are reproducible.
 */
inline VertexSet attract(const ParityGame& g, const VertexSet& alive,
                         const VertexSet& seed, Player sigma,
                         std::optional<int> lambda, Counters* counters) {
  const Player tau = opponent(sigma);
  VertexSet in = seed & alive;
  std::deque<Vertex> queue;
  std::vector<std::uint32_t> remaining(g.size(), 0);
  std::uint64_t relaxations = 0;
  std::size_t live_edges = 0;

  auto admissible = [&](Vertex v) {
    return !lambda || g.priority(v) < *lambda;
  };

  in.for_each([&](Vertex v) { queue.push_back(v); });

  // count live successors of opponent vertices; vacuously attract dead ends
  alive.for_each([&](Vertex v) {
    const bool need_count = g.owner(v) == tau && !in.test(v);
    if (!need_count && !counters) return;
    std::uint32_t out_degree = 0;
    for (Vertex w : g.successors(v))
      if (alive.test(w)) ++out_degree;
    if (counters) {
      live_edges += out_degree;
      if (need_count) relaxations += out_degree;
    }
    if (!need_count) return;
    remaining[v] = out_degree;
    if (out_degree == 0 && admissible(v)) {
      in.set(v);
      queue.push_back(v);
    }
  });

  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.predecessors(u)) {
      if (!alive.test(w)) continue;
      ++relaxations;
      if (in.test(w) || !admissible(w)) continue;
      if (g.owner(w) == sigma) {
        in.set(w);
        queue.push_back(w);
      } else if (--remaining[w] == 0) {
        in.set(w);
        queue.push_back(w);
      }
    }
  }

  if (counters) {
    counters->add("attr.calls");
    counters->add("attr.edge_relaxations", relaxations);
    if (relaxations > 2 * live_edges)
      counters->add("attr.edge_bound_violations");
  }
  return in;
}

}  // namespace detail

/**
 * Vertices from which sigma can force the token into x in finitely many
 * steps. The result contains x.
 */
inline VertexSet attr(const SubgameView& view, const VertexSet& x,
                      Player sigma, Counters* counters = nullptr) {
  require_subset(x, view, "attr");
  return detail::attract(view.game(), view.alive(), x, sigma, std::nullopt,
                         counters);
}

/**
 * Like attr, but only vertices of priority strictly below lambda may be
 * added along the way; members of x stay regardless of their priority.
 */
inline VertexSet safe_attr(const SubgameView& view, int lambda,
                           const VertexSet& x, Player sigma,
                           Counters* counters = nullptr) {
  require_subset(x, view, "safe_attr");
  return detail::attract(view.game(), view.alive(), x, sigma, lambda,
                         counters);
}

/**
 * The region where sigma can keep every visited priority below lambda
 * forever: the live set minus the opponent attractor of {p >= lambda}.
 * Being the complement of an opponent attractor, the result is an
 * opponent trap (possibly empty).
 */
inline VertexSet restrict(const SubgameView& view, int lambda, Player sigma,
                          Counters* counters = nullptr) {
  VertexSet high(view.alive().universe());
  view.alive().for_each([&](Vertex v) {
    if (view.game().priority(v) >= lambda) high.set(v);
  });
  const VertexSet reach = detail::attract(view.game(), view.alive(), high,
                                          opponent(sigma), std::nullopt,
                                          counters);
  return view.alive() - reach;
}

}  // namespace tdsolve
