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
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdsolve/arena.hpp"
#include "tdsolve/certificate.hpp"

namespace tdsolve {

/// Default bound on the live-vertex count of oracle inputs (2^n subsets).
inline constexpr std::size_t kDefaultOracleCap = 14;

/// The input is too large for exhaustive search; never approximated.
class OracleCapError : public std::runtime_error {
 public:
  explicit OracleCapError(std::size_t size, std::size_t cap)
      : std::runtime_error("oracle cap exceeded: " + std::to_string(size) +
                           " live vertices, cap " + std::to_string(cap)) {}
};

/**
 * Exhaustive search found maximal winning first moves without a unique
 * subset-maximum. This must never fire: it would falsify the claim that
 * the depth-k solvers return THE largest winning first move.
 */
class TheoremViolationError : public std::logic_error {
 public:
  explicit TheoremViolationError(const std::string& what)
      : std::logic_error(what) {}
};

/// Decides the winner if exactly this set recurs forever: true means Red/Even.
using RecurrencePredicate = std::function<bool(const VertexSet&)>;

/**
 * Brute-force ground truth over one subgame at desk scale. Enumerates traps,
 * evaluates the who-wins-in-k-rounds recursion of the trap-depth game, finds
 * largest winning first moves, and builds and validates play certificates.
 *
 * The live vertices are compacted into a 64-bit mask space; trap lists and
 * recursion values are memoized per (subset, player[, depth]), so one oracle
 * instance answers many queries on the same arena cheaply. Instances are
 * independent; build one per concurrent worker.
 */
class TrapOracle {
 public:
  TrapOracle(const SubgameView& root, RecurrencePredicate red_wins,
             std::size_t cap = kDefaultOracleCap)
      : game_(&root.game()), universe_(root.alive().universe()) {
    const std::size_t size = root.alive_count();
    if (size > cap || size > 63) throw OracleCapError(size, std::min<std::size_t>(cap, 63));
    root.alive().for_each([&](Vertex v) { orig_of_.push_back(v); });
    local_of_.assign(universe_, kNoVertex);
    for (std::size_t i = 0; i < orig_of_.size(); ++i)
      local_of_[orig_of_[i]] = Vertex(i);
    succ_.resize(orig_of_.size());
    owner_odd_ = 0;
    for (std::size_t i = 0; i < orig_of_.size(); ++i) {
      for (Vertex w : game_->successors(orig_of_[i]))
        if (local_of_[w] != kNoVertex) succ_[i] |= 1ull << local_of_[w];
      if (game_->owner(orig_of_[i]) == Player::Odd) owner_odd_ |= 1ull << i;
    }
    red_wins_ = [orig = orig_of_, n = universe_,
                 pred = std::move(red_wins)](std::uint64_t mask) {
      VertexSet s(n);
      while (mask) {
        s.set(orig[std::size_t(std::countr_zero(mask))]);
        mask &= mask - 1;
      }
      return pred(s);
    };
  }

  /// Oracle with the parity winner condition: top priority parity decides.
  static TrapOracle parity(const SubgameView& root,
                           std::size_t cap = kDefaultOracleCap) {
    TrapOracle o(root, [](const VertexSet&) { return false; }, cap);
    std::vector<int> prio(o.orig_of_.size());
    for (std::size_t i = 0; i < prio.size(); ++i)
      prio[i] = o.game_->priority(o.orig_of_[i]);
    o.red_wins_ = [prio = std::move(prio)](std::uint64_t mask) {
      int best = INT32_MIN;
      while (mask) {
        const int i = std::countr_zero(mask);
        best = std::max(best, prio[std::size_t(i)]);
        mask &= mask - 1;
      }
      return parity_of(best) == Player::Even;
    };
    return o;
  }

  std::uint64_t root_mask() const {
    return orig_of_.size() == 64 ? ~0ull : (1ull << orig_of_.size()) - 1;
  }

  VertexSet to_set(std::uint64_t mask) const {
    VertexSet s(universe_);
    while (mask) {
      s.set(orig_of_[std::size_t(std::countr_zero(mask))]);
      mask &= mask - 1;
    }
    return s;
  }

  /// Local mask of a set, or nullopt if it leaves the oracle's live set.
  std::optional<std::uint64_t> to_mask(const VertexSet& s) const {
    std::uint64_t mask = 0;
    bool ok = true;
    s.for_each([&](Vertex v) {
      if (v >= universe_ || local_of_[v] == kNoVertex)
        ok = false;
      else
        mask |= 1ull << local_of_[v];
    });
    if (!ok) return std::nullopt;
    return mask;
  }

  /// True iff sigma wins when exactly this subset recurs.
  bool winning_if_recurs(std::uint64_t mask, Player sigma) const {
    const bool red = red_wins_(mask);
    return sigma == Player::Even ? red : !red;
  }

  bool is_trap_mask(std::uint64_t within, std::uint64_t x,
                    Player sigma) const {
    std::uint64_t rest = x;
    while (rest) {
      const std::size_t v = std::size_t(std::countr_zero(rest));
      rest &= rest - 1;
      const std::uint64_t live_succ = succ_[v] & within;
      const bool odd_owner = (owner_odd_ >> v) & 1;
      const Player owner = odd_owner ? Player::Odd : Player::Even;
      if (owner == sigma) {
        if (live_succ & ~x) return false;
      } else {
        if (!(live_succ & x)) return false;
      }
    }
    return true;
  }

  /// All nonempty sigma-traps of the subgame induced by `within` (memoized).
  const std::vector<std::uint64_t>& traps_of(std::uint64_t within,
                                             Player sigma) {
    auto& cache = trap_cache_[int(sigma)];
    auto it = cache.find(within);
    if (it != cache.end()) return it->second;
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = within; s; s = (s - 1) & within)
      if (is_trap_mask(within, s, sigma)) out.push_back(s);
    return cache.emplace(within, std::move(out)).first->second;
  }

  /**
   * The literal recursion: sigma, moving first on the subgame `within`, can
   * win the trap-depth game in at most k rounds.
   */
  bool delta_mask(std::uint64_t within, Player sigma, int k) {
    if (k <= 0) return false;
    auto& memo = delta_memo_[int(sigma)][within];
    if (std::size_t(k) <= memo.size() && memo[std::size_t(k) - 1] != kUnknown)
      return memo[std::size_t(k) - 1] == kTrue;
    bool value = false;
    for (std::uint64_t x : traps_of(within, opponent(sigma))) {
      if (!winning_if_recurs(x, sigma)) continue;
      if (all_replies_lose(x, sigma, k)) {
        value = true;
        break;
      }
    }
    if (memo.size() < std::size_t(k)) memo.resize(std::size_t(k), kUnknown);
    memo[std::size_t(k) - 1] = value ? kTrue : kFalse;
    return value;
  }

  /// x assumed a legal first move; every opponent reply loses within k-1.
  bool all_replies_lose(std::uint64_t x, Player sigma, int k) {
    for (std::uint64_t y : traps_of(x, sigma)) {
      if (winning_if_recurs(y, sigma)) continue;
      if (!delta_mask(y, sigma, k - 1)) return false;
    }
    return true;
  }

  bool is_winning_first_move_mask(std::uint64_t within, std::uint64_t x,
                                  Player sigma, int k) {
    return k > 0 && x != 0 && is_trap_mask(within, x, opponent(sigma)) &&
           winning_if_recurs(x, sigma) && all_replies_lose(x, sigma, k);
  }

  std::vector<std::uint64_t> winning_first_moves_mask(std::uint64_t within,
                                                      Player sigma, int k) {
    std::vector<std::uint64_t> out;
    if (k <= 0) return out;
    for (std::uint64_t x : traps_of(within, opponent(sigma)))
      if (winning_if_recurs(x, sigma) && all_replies_lose(x, sigma, k))
        out.push_back(x);
    return out;
  }

  /**
   * The subset-maximum winning first move, or 0 if none. Raises
   * TheoremViolationError if maximal winning moves exist but no single one
   * contains all others.
   */
  std::uint64_t largest_first_move_mask(std::uint64_t within, Player sigma,
                                        int k) {
    const auto moves = winning_first_moves_mask(within, sigma, k);
    if (moves.empty()) return 0;
    std::uint64_t best = moves.front();
    for (std::uint64_t m : moves)
      if (std::popcount(m) > std::popcount(best)) best = m;
    for (std::uint64_t m : moves)
      if (m & ~best)
        throw TheoremViolationError(
            "largest_first_move: maximal winning first moves are not nested; "
            "no unique largest good set");
    return best;
  }

  /// Fewest rounds sigma needs to win moving first, or nullopt up to limit.
  std::optional<int> rounds_needed(std::uint64_t within, Player sigma,
                                   int limit) {
    for (int k = 1; k <= limit; ++k)
      if (delta_mask(within, sigma, k)) return k;
    return std::nullopt;
  }

  /**
   * A complete winning play for sigma moving first within k rounds: sigma
   * plays its largest winning first move, the opponent answers with its
   * most resilient legal reply, and so on until the opponent is stuck.
   */
  std::optional<std::vector<std::uint64_t>> winning_line_mask(
      std::uint64_t within, Player sigma, int k) {
    if (k <= 0) return std::nullopt;
    const std::uint64_t x = largest_first_move_mask(within, sigma, k);
    if (x == 0) return std::nullopt;
    std::vector<std::uint64_t> line{x};
    std::uint64_t best_reply = 0;
    int best_rounds = -1;
    for (std::uint64_t y : traps_of(x, sigma)) {
      if (winning_if_recurs(y, sigma)) continue;  // not legal for opponent
      const auto r = rounds_needed(y, sigma, k - 1);
      if (r && *r > best_rounds) {
        best_rounds = *r;
        best_reply = y;
      }
    }
    if (best_reply == 0) return line;  // opponent has no legal reply
    line.push_back(best_reply);
    auto rest = winning_line_mask(best_reply, sigma, k - 1);
    if (!rest) return std::nullopt;  // cannot happen for a winning x
    line.insert(line.end(), rest->begin(), rest->end());
    return line;
  }

  /// Does `mover` have any legal move on the subgame `within`?
  bool has_legal_move(std::uint64_t within, Player mover) {
    for (std::uint64_t x : traps_of(within, opponent(mover)))
      if (winning_if_recurs(x, mover)) return true;
    return false;
  }

  // -- original-universe wrappers ------------------------------------------

  bool delta(Player sigma, int k) { return delta_mask(root_mask(), sigma, k); }

  VertexSet largest_first_move(Player sigma, int k) {
    return to_set(largest_first_move_mask(root_mask(), sigma, k));
  }

  std::vector<VertexSet> winning_first_moves(Player sigma, int k) {
    std::vector<VertexSet> out;
    for (std::uint64_t m : winning_first_moves_mask(root_mask(), sigma, k))
      out.push_back(to_set(m));
    return out;
  }

  bool is_winning_first_move(const VertexSet& x, Player sigma, int k) {
    const auto mask = to_mask(x);
    return mask && is_winning_first_move_mask(root_mask(), *mask, sigma, k);
  }

  std::vector<VertexSet> enumerate_traps(Player sigma) {
    std::vector<VertexSet> out;
    for (std::uint64_t m : traps_of(root_mask(), sigma))
      out.push_back(to_set(m));
    std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
    return out;
  }

  std::optional<TrapDepthCertificate> winning_certificate(Player sigma,
                                                          int k) {
    const auto line = winning_line_mask(root_mask(), sigma, k);
    if (!line) return std::nullopt;
    TrapDepthCertificate cert;
    cert.first_player = sigma;
    for (std::uint64_t m : *line) cert.moves.push_back(to_set(m));
    return cert;
  }

  /**
   * Replays a recorded trap-depth-game play move by move. True iff every
   * move is legal and the player due to move after the last one is stuck.
   * On failure the diagnostic names the first offending move.
   */
  bool validate_certificate(const TrapDepthCertificate& cert,
                            std::string* diagnostic = nullptr) {
    auto fail = [&](const std::string& msg) {
      if (diagnostic) *diagnostic = msg;
      return false;
    };
    const Player sigma = cert.first_player;
    std::uint64_t current = root_mask();
    for (std::size_t i = 0; i < cert.moves.size(); ++i) {
      const Player mover = (i % 2 == 0) ? sigma : opponent(sigma);
      const std::string tag = "move " + std::to_string(i + 1) + ": ";
      const auto mask = to_mask(cert.moves[i]);
      if (!mask)
        return fail(tag + "set leaves the game's live vertices");
      if (*mask == 0) return fail(tag + "empty set is not a legal move");
      if (*mask & ~current)
        return fail(tag + "set is not contained in the current subgame");
      if (!is_trap_mask(current, *mask, opponent(mover)))
        return fail(tag + "not a " + player_name(opponent(mover)) +
                    "-trap of the current subgame");
      if (!winning_if_recurs(*mask, mover))
        return fail(tag + "recurrence winner is not " + player_name(mover));
      current = *mask;
    }
    const Player next = (cert.moves.size() % 2 == 0) ? sigma : opponent(sigma);
    if (has_legal_move(current, next))
      return fail("final position: " + std::string(player_name(next)) +
                  " still has a legal move");
    if (diagnostic) diagnostic->clear();
    return true;
  }

 private:
  enum : std::int8_t { kUnknown = -1, kFalse = 0, kTrue = 1 };

  const ParityGame* game_;
  std::uint32_t universe_;
  std::vector<Vertex> orig_of_;
  std::vector<Vertex> local_of_;
  std::vector<std::uint64_t> succ_;
  std::uint64_t owner_odd_ = 0;
  std::function<bool(std::uint64_t)> red_wins_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> trap_cache_[2];
  std::unordered_map<std::uint64_t, std::vector<std::int8_t>> delta_memo_[2];
};

// -- one-shot conveniences over a fresh oracle -----------------------------

/// All nonempty sigma-traps of the view, ordered by size then members.
inline std::vector<VertexSet> enumerate_traps(
    const SubgameView& view, Player sigma,
    std::size_t cap = kDefaultOracleCap) {
  return TrapOracle::parity(view, cap).enumerate_traps(sigma);
}

/// Parity-game trap-depth recursion on the view.
inline bool delta(const SubgameView& view, Player sigma, int k,
                  std::size_t cap = kDefaultOracleCap) {
  return TrapOracle::parity(view, cap).delta(sigma, k);
}

inline VertexSet largest_first_move(const SubgameView& view, Player sigma,
                                    int k,
                                    std::size_t cap = kDefaultOracleCap) {
  return TrapOracle::parity(view, cap).largest_first_move(sigma, k);
}

inline bool validate_certificate(const SubgameView& view,
                                 const TrapDepthCertificate& cert,
                                 std::string* diagnostic = nullptr,
                                 std::size_t cap = kDefaultOracleCap) {
  return TrapOracle::parity(view, cap).validate_certificate(cert, diagnostic);
}

inline std::optional<TrapDepthCertificate> winning_certificate(
    const SubgameView& view, Player sigma, int k,
    std::size_t cap = kDefaultOracleCap) {
  return TrapOracle::parity(view, cap).winning_certificate(sigma, k);
}

}  // namespace tdsolve
