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

#include <cmath>
#include <cstdint>
#include <vector>

#include "tdsolve/arena.hpp"

namespace tdsolve {

/// Tiny deterministic generator so games are identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/**
 * The maximum-trap-depth ladder on n vertices (n even, >= 4): two rows of
 * n/2 columns, bottom vertex of column j at id 2j with priority 2j+1, top
 * vertex at id 2j+1 with priority 2j+2, owners aligned. Tops only step down
 * to their own column; bottoms step up to their own and the next column and
 * back down the bottom row.
 *
 * The wiring realizes the alternating-trap staircase: Even wins everywhere,
 * the only Odd-trap is the whole graph, dropping the right-most top vertex
 * leaves an Even-trap whose only usable Odd-subtrap drops the right-most
 * bottom vertex and lands on the next smaller ladder, so the trap depth is
 * exactly n/2. The oracle suite checks all of this exhaustively for n <= 10,
 * and the n = 6 instance is frozen as a fixture file.
 */
inline ParityGame ladder(std::uint32_t n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("ladder: n must be even and at least 4");
  const std::uint32_t columns = n / 2;
  std::vector<int> priorities(n);
  std::vector<Player> owners(n);
  std::vector<std::vector<Vertex>> successors(n);
  for (std::uint32_t j = 0; j < columns; ++j) {
    const Vertex bottom = 2 * j, top = 2 * j + 1;
    priorities[bottom] = int(2 * j + 1);
    priorities[top] = int(2 * j + 2);
    owners[bottom] = Player::Odd;
    owners[top] = Player::Even;
    successors[top].push_back(bottom);
    successors[bottom].push_back(top);
    if (j + 1 < columns) successors[bottom].push_back(top + 2);
    if (j > 0) successors[bottom].push_back(bottom - 2);
  }
  return ParityGame(std::move(priorities), std::move(owners),
                    std::move(successors));
}

/// One vertex per entry, each with only a self-loop, aligned ownership.
inline ParityGame self_loops(const std::vector<int>& priorities) {
  if (priorities.empty())
    throw std::invalid_argument("self_loops: empty priority list");
  const std::uint32_t n = std::uint32_t(priorities.size());
  std::vector<Player> owners(n);
  std::vector<std::vector<Vertex>> successors(n);
  for (Vertex v = 0; v < n; ++v) {
    owners[v] = parity_of(priorities[v]);
    successors[v] = {v};
  }
  return ParityGame(priorities, std::move(owners), std::move(successors));
}

/**
 * Seeded random aligned game: every vertex draws one guaranteed successor,
 * then extra edges are sampled until the edge budget round(avg_degree * n)
 * is spent (duplicates collapse, so the realized degree can fall short).
 * Priorities are uniform in [0, max_priority]; owners follow parity.
 * Identical parameters and seed give the identical game.
 */
inline ParityGame random_game(std::uint32_t n, double avg_degree,
                              int max_priority, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_game: n must be positive");
  if (avg_degree < 1.0)
    throw std::invalid_argument("random_game: avg_degree must be at least 1");
  if (max_priority < 0)
    throw std::invalid_argument("random_game: max_priority must be >= 0");

  SplitMix64 rng(seed);
  std::vector<int> priorities(n);
  std::vector<Player> owners(n);
  std::vector<std::vector<Vertex>> successors(n);
  for (Vertex v = 0; v < n; ++v) {
    priorities[v] = int(rng.below(std::uint64_t(max_priority) + 1));
    owners[v] = parity_of(priorities[v]);
    successors[v].push_back(Vertex(rng.below(n)));
  }
  const auto budget = std::uint64_t(std::llround(avg_degree * n));
  for (std::uint64_t e = n; e < budget; ++e) {
    const Vertex from = Vertex(rng.below(n));
    successors[from].push_back(Vertex(rng.below(n)));
  }
  return ParityGame(std::move(priorities), std::move(owners),
                    std::move(successors));
}

}  // namespace tdsolve
