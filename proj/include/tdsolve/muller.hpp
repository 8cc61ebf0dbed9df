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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tdsolve/arena.hpp"
#include "tdsolve/certificate.hpp"
#include "tdsolve/oracle.hpp"

namespace tdsolve {

/**
 * A Muller game with its winner condition given as an explicit list of
 * vertex sets: Red wins a play iff the set of infinitely recurring vertices
 * is a member of the family. The arena is kept as a parity game whose
 * owners encode the coloring (Red = Even); its 0/1 priorities just mirror
 * the colors and carry no meaning here. The family is stored deduplicated
 * and ordered by size, then lexicographically.
 */
class ExplicitMullerGame {
 public:
  ExplicitMullerGame(std::uint32_t n,
                     std::vector<std::vector<Vertex>> successors,
                     const VertexSet& red, std::vector<VertexSet> family)
      : arena_(make_arena(n, std::move(successors), red)),
        family_(normalize(n, std::move(family))) {}

  const ParityGame& arena() const { return arena_; }
  std::uint32_t size() const { return arena_.size(); }

  bool is_red(Vertex v) const { return arena_.owner(v) == kRed; }

  VertexSet red() const {
    VertexSet s(size());
    for (Vertex v = 0; v < size(); ++v)
      if (is_red(v)) s.set(v);
    return s;
  }

  const std::vector<VertexSet>& family() const { return family_; }

  /// Exact membership of the recurring set in the family.
  bool red_wins_if_recurs(const VertexSet& recurring) const {
    return std::binary_search(family_.begin(), family_.end(), recurring,
                              VertexSet::size_lex_less);
  }

  ExplicitMullerGame with_family(std::vector<VertexSet> family) const {
    ExplicitMullerGame g = *this;
    g.family_ = normalize(size(), std::move(family));
    return g;
  }

 private:
  static ParityGame make_arena(std::uint32_t n,
                               std::vector<std::vector<Vertex>> successors,
                               const VertexSet& red) {
    if (red.universe() != n)
      throw std::invalid_argument("red set universe does not match n");
    std::vector<int> priorities(n);
    std::vector<Player> owners(n);
    for (Vertex v = 0; v < n; ++v) {
      owners[v] = red.test(v) ? kRed : kBlue;
      priorities[v] = red.test(v) ? 0 : 1;
    }
    return ParityGame(std::move(priorities), std::move(owners),
                      std::move(successors));
  }

  static std::vector<VertexSet> normalize(std::uint32_t n,
                                          std::vector<VertexSet> family) {
    for (const VertexSet& s : family)
      if (s.universe() != n)
        throw std::invalid_argument("family member universe does not match n");
    std::sort(family.begin(), family.end(), VertexSet::size_lex_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
  }

  ParityGame arena_;
  std::vector<VertexSet> family_;
};

/**
 * Drops family members whose induced subgraph has a dead end; such sets can
 * never be exactly the recurring vertices of a play. The graph is unchanged.
 */
inline ExplicitMullerGame prune_family(const ExplicitMullerGame& g) {
  std::vector<VertexSet> kept;
  for (const VertexSet& r : g.family()) {
    bool valid = !r.empty();
    r.for_each([&](Vertex v) {
      if (!valid) return;
      for (Vertex w : g.arena().successors(v))
        if (r.test(w)) return;
      valid = false;
    });
    if (valid) kept.push_back(r);
  }
  return g.with_family(std::move(kept));
}

/// Oracle over the Muller game with the family winner condition.
inline TrapOracle muller_oracle(const ExplicitMullerGame& g,
                                std::size_t cap = kDefaultOracleCap) {
  return TrapOracle(
      SubgameView(g.arena()),
      [fam = g.family()](const VertexSet& s) {
        return std::binary_search(fam.begin(), fam.end(), s,
                                  VertexSet::size_lex_less);
      },
      cap);
}

/// Trap-depth recursion with the explicit winner condition.
inline bool delta(const ExplicitMullerGame& g, Player sigma, int k,
                  std::size_t cap = kDefaultOracleCap) {
  return muller_oracle(g, cap).delta(sigma, k);
}

inline bool validate_certificate(const ExplicitMullerGame& g,
                                 const TrapDepthCertificate& cert,
                                 std::string* diagnostic = nullptr,
                                 std::size_t cap = kDefaultOracleCap) {
  return muller_oracle(g, cap).validate_certificate(cert, diagnostic);
}

/**
 * Whether every nonempty red-trap of the subgame induced by r contains some
 * member of w as a blue-trap of the red-trap's own subgame. Vacuously true
 * when the subgame has no red-traps. Exhaustive over red-traps, so r is
 * bounded by the oracle cap.
 */
inline bool trap_covers(const ExplicitMullerGame& g, const VertexSet& r,
                        const std::vector<VertexSet>& w,
                        std::size_t cap = kDefaultOracleCap) {
  const SubgameView sub(g.arena(), r);
  for (const VertexSet& h : enumerate_traps(sub, kRed, cap)) {
    const SubgameView trap_view(g.arena(), h);
    bool covered = false;
    for (const VertexSet& s : w) {
      if (!s.subset_of(h)) continue;
      if (is_trap(trap_view, s, kBlue)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

struct MullerDecision {
  bool red_wins_somewhere = false;
  std::vector<VertexSet> winning_sets;  // the collection W, in build order
};

/**
 * Decides whether Red's winning region is nonempty, by the explicit-family
 * procedure: prune the family, then sweep it minimal-first (size, then
 * lexicographic), admitting a set R into W exactly when every red-trap of
 * its subgame contains a member of W or R itself as a blue-subtrap. Red
 * wins somewhere iff some member of W is a blue-trap of the whole game.
 */
inline MullerDecision red_wins_somewhere(const ExplicitMullerGame& g,
                                         std::size_t cap = kDefaultOracleCap) {
  const ExplicitMullerGame pruned = prune_family(g);
  MullerDecision decision;
  for (const VertexSet& r : pruned.family()) {
    std::vector<VertexSet> candidates = decision.winning_sets;
    candidates.push_back(r);
    if (trap_covers(pruned, r, candidates, cap))
      decision.winning_sets.push_back(r);
  }
  const SubgameView whole(g.arena());
  for (const VertexSet& s : decision.winning_sets)
    if (is_trap(whole, s, kBlue)) {
      decision.red_wins_somewhere = true;
      break;
    }
  return decision;
}

struct LarReduction {
  ParityGame game;                    // general ownership, priorities 2..2n+1
  std::vector<Vertex> initial_state;  // per original vertex
};

/**
 * Classical latest-appearance-record reduction, used purely as a reference
 * oracle. States are (record, hit) pairs where the record is a permutation
 * of the vertices with the current vertex in front; moving to w rotates w to
 * the front and the hit is w's old position. A state gets priority 2h when
 * the first h record entries form a family member and 2h+1 otherwise, so
 * Red wins the Muller game from v iff Even wins the reduced parity game
 * from v's initial state (identity record, fixed for determinism).
 */
inline LarReduction lar_reduce(const ExplicitMullerGame& g) {
  const std::uint32_t n = g.size();
  if (n > 6) throw OracleCapError(n, 6);
  if (n == 0) throw std::invalid_argument("lar_reduce: empty game");

  // a state packs the record in base-8 digits plus the hit position
  using Code = std::uint64_t;
  auto encode = [n](const std::vector<Vertex>& record, std::uint32_t hit) {
    Code c = hit;
    for (std::uint32_t i = 0; i < n; ++i)
      c = (c << 3) | Code(record[i]);
    return c;
  };

  std::map<Code, Vertex> id_of;
  std::vector<std::vector<Vertex>> records;
  std::vector<std::uint32_t> hits;
  std::vector<std::vector<Vertex>> succ;

  auto intern = [&](const std::vector<Vertex>& record, std::uint32_t hit) {
    const Code c = encode(record, hit);
    auto it = id_of.find(c);
    if (it != id_of.end()) return it->second;
    const Vertex id = Vertex(records.size());
    id_of.emplace(c, id);
    records.push_back(record);
    hits.push_back(hit);
    succ.emplace_back();
    return id;
  };

  auto step = [&](const std::vector<Vertex>& record, Vertex to) {
    std::vector<Vertex> next{to};
    std::uint32_t hit = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (record[i] == to)
        hit = i + 1;
      else
        next.push_back(record[i]);
    }
    return std::pair(next, hit);
  };

  LarReduction out{ParityGame({0}, {Player::Even}, {{0}}), {}};
  out.initial_state.resize(n);

  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto [record, hit] = step(identity, v);
    out.initial_state[v] = intern(record, hit);
  }

  for (Vertex id = 0; id < records.size(); ++id) {  // grows while iterating
    const Vertex current = records[id][0];
    for (Vertex w : g.arena().successors(current)) {
      const auto [record, hit] = step(records[id], w);
      const Vertex target = intern(record, hit);  // may reallocate succ
      succ[id].push_back(target);
    }
  }

  const std::size_t states = records.size();
  std::vector<int> priorities(states);
  std::vector<Player> owners(states);
  succ.resize(states);
  for (std::size_t s = 0; s < states; ++s) {
    VertexSet prefix(n);
    for (std::uint32_t i = 0; i < hits[s]; ++i) prefix.set(records[s][i]);
    priorities[s] = g.red_wins_if_recurs(prefix) ? int(2 * hits[s])
                                                 : int(2 * hits[s] + 1);
    owners[s] = g.is_red(records[s][0]) ? Player::Even : Player::Odd;
  }
  out.game = ParityGame(std::move(priorities), std::move(owners),
                        std::move(succ));
  return out;
}

}  // namespace tdsolve
