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
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdsolve {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = UINT32_MAX;

/**
 * The two players of a parity game. In Muller-game contexts the same
 * players go by colors: Red is Even and Blue is Odd.
 */
enum class Player : std::uint8_t { Even = 0, Odd = 1 };

inline constexpr Player kRed = Player::Even;
inline constexpr Player kBlue = Player::Odd;

constexpr Player opponent(Player p) {
  return p == Player::Even ? Player::Odd : Player::Even;
}

/// Mathematical parity of a priority: -1 is odd, -2 is even.
constexpr Player parity_of(long long priority) {
  return (priority % 2) == 0 ? Player::Even : Player::Odd;
}

inline const char* player_name(Player p) {
  return p == Player::Even ? "Even" : "Odd";
}

/**
 * A set of vertices of one arena, stored as a dense bitmask over 0..n-1.
 * All set operations require both operands to share the same universe size.
 */
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::uint32_t universe)
      : n_(universe), words_((universe + 63u) / 64u, 0) {}

  VertexSet(std::uint32_t universe, std::initializer_list<Vertex> vs)
      : VertexSet(universe) {
    for (Vertex v : vs) set(v);
  }

  static VertexSet full(std::uint32_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ull;
    s.trim();
    return s;
  }

  std::uint32_t universe() const { return n_; }

  bool test(Vertex v) const {
    assert(v < n_);
    return (words_[v >> 6] >> (v & 63u)) & 1u;
  }

  void set(Vertex v) {
    assert(v < n_);
    words_[v >> 6] |= 1ull << (v & 63u);
  }

  void reset(Vertex v) {
    assert(v < n_);
    words_[v >> 6] &= ~(1ull << (v & 63u));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or kNoVertex if empty.
  Vertex front() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return Vertex(w * 64 + std::countr_zero(words_[w]));
    return kNoVertex;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  /// Calls f(v) for every member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(Vertex(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  /// Raw 64-bit mask; only valid for universes of at most 64 vertices.
  std::uint64_t to_u64() const {
    assert(n_ <= 64);
    return words_.empty() ? 0 : words_[0];
  }

  static VertexSet from_u64(std::uint32_t universe, std::uint64_t bits) {
    assert(universe <= 64);
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = bits;
    s.trim();
    return s;
  }

  /// Orders by cardinality, then lexicographically as sorted id sequences.
  static bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    assert(a.n_ == b.n_);
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) {
        // the set containing the smallest differing vertex comes first
        return (a.words_[w] >> std::countr_zero(diff)) & 1u;
      }
    }
    return false;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ull << (n_ % 64)) - 1;
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Raised when a vertex set that must induce a subgame has a dead end.
class DeadEndError : public std::runtime_error {
 public:
  explicit DeadEndError(Vertex v)
      : std::runtime_error("vertex " + std::to_string(v) +
                           " has no successor inside the set"),
        vertex_(v) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

/**
 * A finite parity game: a directed graph with an integer priority and an
 * owning player per vertex. Every vertex has out-degree at least one, and
 * duplicate edges are collapsed. Immutable after construction, so games may
 * be shared freely across threads.
 */
class ParityGame {
 public:
  ParityGame(std::vector<int> priorities, std::vector<Player> owners,
             std::vector<std::vector<Vertex>> successors)
      : priority_(std::move(priorities)), owner_(std::move(owners)) {
    const std::size_t n = priority_.size();
    if (owner_.size() != n || successors.size() != n)
      throw std::invalid_argument(
          "priorities, owners and successors must have equal length");
    succ_.resize(n);
    pred_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& ss = successors[v];
      std::sort(ss.begin(), ss.end());
      ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
      if (ss.empty())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " has no successors");
      for (Vertex w : ss)
        if (w >= n)
          throw std::invalid_argument("vertex " + std::to_string(v) +
                                      " has successor " + std::to_string(w) +
                                      " outside the game");
      succ_[v] = std::move(ss);
    }
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex w : succ_[v]) pred_[w].push_back(Vertex(v));
    for (std::size_t v = 0; v < n; ++v) edge_count_ += succ_[v].size();
  }

  std::uint32_t size() const { return std::uint32_t(priority_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  int priority(Vertex v) const { return priority_[v]; }
  Player owner(Vertex v) const { return owner_[v]; }

  std::span<const Vertex> successors(Vertex v) const { return succ_[v]; }
  std::span<const Vertex> predecessors(Vertex v) const { return pred_[v]; }

  /// Owner equals priority parity at v.
  bool aligned_at(Vertex v) const {
    return parity_of(priority_[v]) == owner_[v];
  }

 private:
  std::vector<int> priority_;
  std::vector<Player> owner_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  std::size_t edge_count_ = 0;
};

/// Owner equals priority parity everywhere.
inline bool aligned(const ParityGame& g) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (!g.aligned_at(v)) return false;
  return true;
}

/**
 * A parity game restricted to a subset of live vertices. Views produced by
 * induced_subgame (and by restricting to traps) have no dead ends; the
 * attractor-style fixpoints below also accept transient views that do.
 */
class SubgameView {
 public:
  explicit SubgameView(const ParityGame& g)
      : game_(&g), alive_(VertexSet::full(g.size())) {}

  SubgameView(const ParityGame& g, VertexSet alive)
      : game_(&g), alive_(std::move(alive)) {
    assert(alive_.universe() == g.size());
  }

  const ParityGame& game() const { return *game_; }
  const VertexSet& alive() const { return alive_; }
  bool contains(Vertex v) const { return alive_.test(v); }
  std::size_t alive_count() const { return alive_.count(); }
  bool empty() const { return alive_.empty(); }

  /// Number of edges with both endpoints alive.
  std::size_t edge_count() const {
    std::size_t m = 0;
    alive_.for_each([&](Vertex v) {
      for (Vertex w : game_->successors(v))
        if (alive_.test(w)) ++m;
    });
    return m;
  }

 private:
  const ParityGame* game_;
  VertexSet alive_;
};

inline void require_subset(const VertexSet& x, const SubgameView& view,
                           const char* what) {
  if (!x.subset_of(view.alive()))
    throw std::invalid_argument(std::string(what) +
                                ": set contains vertices outside the subgame");
}

/// Owner equals priority parity on every live vertex.
inline bool aligned(const SubgameView& view) {
  bool ok = true;
  view.alive().for_each([&](Vertex v) { ok &= view.game().aligned_at(v); });
  return ok;
}

inline void require_aligned(const SubgameView& view, const char* what) {
  if (!aligned(view))
    throw std::invalid_argument(
        std::string(what) +
        ": game is not aligned (owner must equal priority parity)");
}

/// Live vertices owned by sigma.
inline VertexSet sigma_vertices(const SubgameView& view, Player sigma) {
  VertexSet out(view.alive().universe());
  view.alive().for_each([&](Vertex v) {
    if (view.game().owner(v) == sigma) out.set(v);
  });
  return out;
}

/**
 * Whether x is a sigma-trap of the view: no sigma vertex of x has a live
 * successor outside x, and every opponent vertex of x keeps at least one
 * successor inside x. The empty set is vacuously a trap; callers that need
 * nonemptiness (as in the trap-depth game) check it separately.
 */
inline bool is_trap(const SubgameView& view, const VertexSet& x,
                    Player sigma) {
  require_subset(x, view, "is_trap");
  const ParityGame& g = view.game();
  bool ok = true;
  x.for_each([&](Vertex v) {
    if (!ok) return;
    if (g.owner(v) == sigma) {
      for (Vertex w : g.successors(v))
        if (view.contains(w) && !x.test(w)) {
          ok = false;
          return;
        }
    } else {
      bool stays = false;
      for (Vertex w : g.successors(v))
        if (x.test(w)) {
          stays = true;
          break;
        }
      if (!stays) ok = false;
    }
  });
  return ok;
}

/**
 * The view restricted to x. Throws DeadEndError naming the first vertex of
 * x without a successor in x; never throws when x is a trap of the view.
 */
inline SubgameView induced_subgame(const SubgameView& view,
                                   const VertexSet& x) {
  require_subset(x, view, "induced_subgame");
  Vertex dead = kNoVertex;
  x.for_each([&](Vertex v) {
    if (dead != kNoVertex) return;
    for (Vertex w : view.game().successors(v))
      if (x.test(w)) return;
    dead = v;
  });
  if (dead != kNoVertex) throw DeadEndError(dead);
  return SubgameView(view.game(), x);
}

/// Largest priority over a nonempty set of live vertices.
inline int max_priority(const SubgameView& view, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("max_priority: empty set");
  require_subset(x, view, "max_priority");
  int best = INT32_MIN;
  x.for_each([&](Vertex v) { best = std::max(best, view.game().priority(v)); });
  return best;
}

/// All vertices of x attaining the maximum priority (ties are kept).
inline VertexSet max_vertices(const SubgameView& view, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("max_vertices: empty set");
  require_subset(x, view, "max_vertices");
  const int top = max_priority(view, x);
  VertexSet out(x.universe());
  x.for_each([&](Vertex v) {
    if (view.game().priority(v) == top) out.set(v);
  });
  return out;
}

/// Number of distinct priorities among live vertices.
inline std::size_t distinct_priority_count(const SubgameView& view) {
  std::vector<int> ps;
  view.alive().for_each([&](Vertex v) { ps.push_back(view.game().priority(v)); });
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps.size();
}

}  // namespace tdsolve
