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
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tdsolve/arena.hpp"
#include "tdsolve/certificate.hpp"
#include "tdsolve/muller.hpp"
#include "tdsolve/solve_result.hpp"

namespace tdsolve {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

namespace detail {

/// Whitespace-insensitive token reader that tracks line and column.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }
  int column() const { return column_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_, message);
  }

  bool try_punct(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_punct(char c) {
    if (!try_punct(c))
      fail(std::string("expected '") + c + "'");
  }

  /// Lowercase word [a-zA-Z_]+, or empty if the next token is not a word.
  std::string peek_word() {
    skip_space();
    std::size_t p = pos_;
    std::string w;
    while (p < text_.size() && (std::isalpha(unsigned(text_[p])) ||
                                text_[p] == '_'))
      w += char(std::tolower(unsigned(text_[p++])));
    return w;
  }

  std::string take_word() {
    std::string w = peek_word();
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return w;
  }

  long long take_integer(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("expected ") + what);
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(unsigned(text_[pos_])))
      fail(std::string("expected ") + what);
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(unsigned(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > INT32_MAX) fail("integer out of range");
      advance();
    }
    return negative ? -value : value;
  }

  /// Consumes a double-quoted string (vertex names are parsed and ignored).
  void skip_quoted() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '"') return;
    advance();
    while (pos_ < text_.size() && text_[pos_] != '"') advance();
    if (pos_ >= text_.size()) fail("unterminated string");
    advance();
  }

  bool peek_is(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, column_ = 1;
};

}  // namespace detail

/**
 * PGSolver text format: an optional `parity <maxid>;` header, optional
 * `start <id>;` annotations (parsed and ignored), then one record per
 * vertex: `<id> <priority> <owner> <succ>(,<succ>)* ("name")? ;` with
 * owner 0 = Even and 1 = Odd. Vertex ids are remapped to dense 0..n-1 in
 * record order; duplicate successors collapse. Priorities may be negative.
 */
inline ParityGame parse_pgsolver(std::string_view text) {
  detail::Scanner in(text);

  struct Record {
    long long id;
    int priority;
    Player owner;
    std::vector<long long> successors;
    int line, column;
  };
  std::vector<Record> records;
  std::map<long long, Vertex> dense;

  if (in.peek_word() == "parity") {
    in.take_word();
    in.take_integer("maximal vertex id");
    in.expect_punct(';');
  }
  while (!in.at_end()) {
    if (in.peek_word() == "start") {
      in.take_word();
      in.take_integer("start vertex id");
      in.expect_punct(';');
      continue;
    }
    Record rec;
    rec.line = in.line();
    rec.column = in.column();
    rec.id = in.take_integer("vertex id");
    if (rec.id < 0) in.fail("vertex id must be nonnegative");
    rec.priority = int(in.take_integer("priority"));
    const long long owner = in.take_integer("owner (0 or 1)");
    if (owner != 0 && owner != 1) in.fail("owner must be 0 or 1");
    rec.owner = owner == 0 ? Player::Even : Player::Odd;
    if (in.peek_is(';'))
      in.fail("vertex " + std::to_string(rec.id) + " has zero successors");
    do {
      rec.successors.push_back(in.take_integer("successor id"));
    } while (in.try_punct(','));
    in.skip_quoted();
    in.expect_punct(';');
    if (dense.count(rec.id))
      throw ParseError(rec.line, rec.column,
                       "duplicate record for vertex " +
                           std::to_string(rec.id));
    dense.emplace(rec.id, Vertex(records.size()));
    records.push_back(std::move(rec));
  }

  std::vector<int> priorities;
  std::vector<Player> owners;
  std::vector<std::vector<Vertex>> successors;
  for (const Record& rec : records) {
    priorities.push_back(rec.priority);
    owners.push_back(rec.owner);
    std::vector<Vertex> ss;
    for (long long s : rec.successors) {
      auto it = dense.find(s);
      if (it == dense.end())
        throw ParseError(rec.line, rec.column,
                         "successor " + std::to_string(s) +
                             " has no vertex record");
      ss.push_back(it->second);
    }
    successors.push_back(std::move(ss));
  }
  return ParityGame(std::move(priorities), std::move(owners),
                    std::move(successors));
}

/// Canonical PGSolver text; parse_pgsolver(emit_pgsolver(g)) reproduces g.
inline std::string emit_pgsolver(const ParityGame& g) {
  std::ostringstream out;
  if (g.size() > 0) out << "parity " << g.size() - 1 << ";\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << v << ' ' << g.priority(v) << ' '
        << (g.owner(v) == Player::Even ? 0 : 1) << ' ';
    bool first = true;
    for (Vertex w : g.successors(v)) {
      if (!first) out << ',';
      out << w;
      first = false;
    }
    out << ";\n";
  }
  return out.str();
}

struct AlignResult {
  ParityGame game;
  std::vector<Vertex> original_of;  // per new vertex; proxies map back
  std::uint32_t original_count = 0;
};

/**
 * Bridges a general-ownership game to the aligned model. Every vertex whose
 * owner disagrees with its priority parity keeps its priority but forwards
 * through a fresh proxy that inherits its successors; the proxy's priority
 * sits strictly below every original priority with parity matching the
 * original owner, so it never decides a play and winners are preserved on
 * the original vertices. Aligned inputs come back unchanged.
 */
inline AlignResult align_gadget(const ParityGame& g) {
  const std::uint32_t n = g.size();
  AlignResult out{ParityGame({0}, {Player::Even}, {{0}}), {}, n};

  int min_priority = 0;
  for (Vertex v = 0; v < n; ++v)
    min_priority = std::min(min_priority, g.priority(v));
  const int base = min_priority - 1;
  const int even_proxy = parity_of(base) == Player::Even ? base : base - 1;
  const int odd_proxy = parity_of(base) == Player::Odd ? base : base - 1;

  std::vector<int> priorities;
  std::vector<Player> owners;
  std::vector<std::vector<Vertex>> successors;
  for (Vertex v = 0; v < n; ++v) {
    priorities.push_back(g.priority(v));
    owners.push_back(parity_of(g.priority(v)));
    successors.emplace_back(g.successors(v).begin(), g.successors(v).end());
    out.original_of.push_back(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.aligned_at(v)) continue;
    const Vertex proxy = Vertex(priorities.size());
    priorities.push_back(g.owner(v) == Player::Even ? even_proxy
                                                    : odd_proxy);
    owners.push_back(g.owner(v));
    std::vector<Vertex> forwarded = std::move(successors[v]);
    successors[v] = {proxy};
    successors.push_back(std::move(forwarded));
    out.original_of.push_back(v);
  }
  out.game = ParityGame(std::move(priorities), std::move(owners),
                        std::move(successors));
  return out;
}

/**
 * Explicit Muller game text format:
 *   muller <n>;
 *   red <id>(,<id>)*;          (or `red;` when no vertex is red)
 *   <id> <succ>(,<succ>)*;     (one line per vertex, ids 0..n-1)
 *   set <id>(,<id>)*;          (zero or more family members)
 */
inline ExplicitMullerGame parse_muller(std::string_view text) {
  detail::Scanner in(text);
  if (in.take_word() != "muller") in.fail("expected 'muller <n>;'");
  const long long n64 = in.take_integer("vertex count");
  if (n64 < 1) in.fail("vertex count must be positive");
  const auto n = std::uint32_t(n64);
  in.expect_punct(';');

  auto take_vertex = [&](const char* what) {
    const long long v = in.take_integer(what);
    if (v < 0 || v >= n64)
      in.fail(std::string(what) + " " + std::to_string(v) +
              " is outside 0.." + std::to_string(n64 - 1));
    return Vertex(v);
  };

  if (in.take_word() != "red") in.fail("expected 'red <ids>;'");
  VertexSet red(n);
  if (!in.try_punct(';')) {
    do {
      red.set(take_vertex("red vertex"));
    } while (in.try_punct(','));
    in.expect_punct(';');
  }

  std::vector<std::vector<Vertex>> successors(n);
  std::vector<bool> seen(n, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    const int line = in.line(), column = in.column();
    const Vertex v = take_vertex("vertex id");
    if (seen[v])
      throw ParseError(line, column,
                       "duplicate record for vertex " + std::to_string(v));
    seen[v] = true;
    do {
      successors[v].push_back(take_vertex("successor id"));
    } while (in.try_punct(','));
    in.expect_punct(';');
  }

  std::vector<VertexSet> family;
  while (!in.at_end()) {
    if (in.take_word() != "set") in.fail("expected 'set <ids>;'");
    VertexSet s(n);
    do {
      s.set(take_vertex("set member"));
    } while (in.try_punct(','));
    in.expect_punct(';');
    family.push_back(std::move(s));
  }
  return ExplicitMullerGame(n, std::move(successors), red, std::move(family));
}

inline std::string emit_muller(const ExplicitMullerGame& g) {
  std::ostringstream out;
  out << "muller " << g.size() << ";\n";
  out << "red";
  bool first = true;
  g.red().for_each([&](Vertex v) {
    out << (first ? " " : ",") << v;
    first = false;
  });
  out << ";\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << v;
    first = true;
    for (Vertex w : g.arena().successors(v)) {
      out << (first ? " " : ",") << w;
      first = false;
    }
    out << ";\n";
  }
  for (const VertexSet& s : g.family()) {
    out << "set";
    first = true;
    s.for_each([&](Vertex v) {
      out << (first ? " " : ",") << v;
      first = false;
    });
    out << ";\n";
  }
  return out.str();
}

namespace detail {

inline nlohmann::ordered_json ids_json(const VertexSet& s) {
  auto arr = nlohmann::ordered_json::array();
  s.for_each([&](Vertex v) { arr.push_back(v); });
  return arr;
}

inline nlohmann::ordered_json certificate_json(
    const TrapDepthCertificate& cert) {
  nlohmann::ordered_json j;
  j["first_player"] = player_name(cert.first_player);
  auto moves = nlohmann::ordered_json::array();
  for (const VertexSet& m : cert.moves) moves.push_back(ids_json(m));
  j["moves"] = moves;
  return j;
}

}  // namespace detail

/// Stable-key JSON document with sorted vertex id arrays.
inline std::string emit_result_json(const SolveResult& r) {
  nlohmann::ordered_json j;
  j["w_even"] = detail::ids_json(r.w_even);
  j["w_odd"] = detail::ids_json(r.w_odd);
  if (!r.undecided.empty()) j["undecided"] = detail::ids_json(r.undecided);
  j["counters"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.counters) j["counters"][name] = value;
  if (!r.certificates.empty()) {
    auto certs = nlohmann::ordered_json::array();
    for (const auto& cert : r.certificates)
      certs.push_back(detail::certificate_json(cert));
    j["certificates"] = certs;
  }
  return j.dump(2) + "\n";
}

/// DOT export of the live arena with vertices colored by winner.
inline std::string emit_result_dot(const SubgameView& view,
                                   const SolveResult& r) {
  std::ostringstream out;
  out << "digraph game {\n";
  view.alive().for_each([&](Vertex v) {
    const char* color = r.w_even.test(v)   ? "indianred"
                        : r.w_odd.test(v)  ? "steelblue"
                                           : "gray";
    out << "  v" << v << " [label=\"" << v << " p" << view.game().priority(v)
        << (view.game().owner(v) == Player::Even ? " E" : " O")
        << "\", style=filled, fillcolor=" << color << "];\n";
  });
  view.alive().for_each([&](Vertex v) {
    for (Vertex w : view.game().successors(v))
      if (view.contains(w)) out << "  v" << v << " -> v" << w << ";\n";
  });
  out << "}\n";
  return out.str();
}

inline std::string emit_certificate(const TrapDepthCertificate& cert) {
  return detail::certificate_json(cert).dump(2) + "\n";
}

/// Reads a certificate written by emit_certificate for a game of n vertices.
inline TrapDepthCertificate parse_certificate(std::string_view text,
                                              std::uint32_t universe) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, 1, std::string("certificate is not valid JSON: ") +
                               e.what());
  }
  TrapDepthCertificate cert;
  const std::string player = j.value("first_player", "");
  if (player == "Even")
    cert.first_player = Player::Even;
  else if (player == "Odd")
    cert.first_player = Player::Odd;
  else
    throw ParseError(1, 1, "first_player must be \"Even\" or \"Odd\"");
  if (!j.contains("moves") || !j["moves"].is_array())
    throw ParseError(1, 1, "certificate needs a \"moves\" array");
  for (const auto& move : j["moves"]) {
    VertexSet s(universe);
    for (const auto& id : move) {
      const auto v = id.get<std::int64_t>();
      if (v < 0 || v >= std::int64_t(universe))
        throw ParseError(1, 1,
                         "move vertex " + std::to_string(v) +
                             " is outside the game");
      s.set(Vertex(v));
    }
    cert.moves.push_back(std::move(s));
  }
  return cert;
}

}  // namespace tdsolve
