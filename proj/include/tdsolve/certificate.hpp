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

#include <vector>

#include "tdsolve/arena.hpp"

namespace tdsolve {

/**
 * A recorded play of the trap-depth game: first_player opens and the moves
 * alternate X1, Y1, X2, Y2, ... Each X must be a nonempty opponent trap of
 * the current subgame that is winning-if-recurring for first_player, each Y
 * a nonempty first_player trap of the game induced by the preceding X that
 * is winning-if-recurring for the opponent. A complete play leaves the next
 * player to move without a legal move; validation lives in the oracle.
 */
struct TrapDepthCertificate {
  Player first_player = Player::Even;
  std::vector<VertexSet> moves;
};

}  // namespace tdsolve
