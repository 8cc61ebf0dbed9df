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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tdsolve/arena.hpp"
#include "tdsolve/certificate.hpp"

namespace tdsolve {

/**
 * Outcome of a solver run: the winning-region partition of the live set,
 * instrumentation counter totals, and optional trap-depth certificates.
 * w_even and w_odd are disjoint; together with undecided (nonempty only
 * when a depth-capped solve gave up early) they cover the live set.
 */
struct SolveResult {
  VertexSet w_even;
  VertexSet w_odd;
  VertexSet undecided;
  std::map<std::string, std::uint64_t> counters;
  std::vector<TrapDepthCertificate> certificates;

  SolveResult() = default;
  explicit SolveResult(std::uint32_t universe)
      : w_even(universe), w_odd(universe), undecided(universe) {}

  Player winner(Vertex v) const {
    return w_even.test(v) ? Player::Even : Player::Odd;
  }
};

}  // namespace tdsolve
