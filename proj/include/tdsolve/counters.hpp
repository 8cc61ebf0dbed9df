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

namespace tdsolve {

/**
 * Instrumentation tallies threaded through the solvers. The *_bound_violations
 * counters are bumped whenever a run exceeds its theoretical work bound; a
 * correct build keeps them at zero on every input.
 *
 * Names in use:
 *   attr.calls, attr.edge_relaxations, attr.edge_bound_violations
 *   genattr.calls, genattr.iterations
 *   seqattr.calls, seqattr.iterations, seqattr.genattr_bound_violations
 *   tda.calls, tda.outer_iterations, tda.outer_bound_violations
 *   subsolver.calls
 *   zielonka.recursions, buchi.iterations
 *   solve.stages, solve.tda_k_calls
 */
struct Counters {
  std::map<std::string, std::uint64_t> tally;

  void add(const char* name, std::uint64_t delta = 1) { tally[name] += delta; }

  std::uint64_t get(const std::string& name) const {
    auto it = tally.find(name);
    return it == tally.end() ? 0 : it->second;
  }

  void merge_into(std::map<std::string, std::uint64_t>& out) const {
    for (const auto& [k, v] : tally) out[k] += v;
  }
};

}  // namespace tdsolve
