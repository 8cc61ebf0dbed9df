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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdsolve/classic.hpp"
#include "tdsolve/gen.hpp"
#include "tdsolve/io.hpp"
#include "tdsolve/muller.hpp"
#include "tdsolve/oracle.hpp"
#include "tdsolve/tda.hpp"

namespace tdsolve::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Player parse_player(const std::string& name) {
  std::string lower;
  for (char c : name) lower += char(std::tolower(unsigned(c)));
  if (lower == "even" || lower == "red" || lower == "0") return Player::Even;
  if (lower == "odd" || lower == "blue" || lower == "1") return Player::Odd;
  throw std::runtime_error("unknown player: " + name +
                           " (use even/odd or red/blue)");
}

inline std::vector<int> parse_int_list(const std::string& csv,
                                       const char* what) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::runtime_error(std::string("bad ") + what + " list entry: " +
                               item);
    }
  if (out.empty())
    throw std::runtime_error(std::string(what) + " list is empty");
  return out;
}

}  // namespace detail

/**
 * Runs one command-line invocation against the given streams and returns
 * the process exit code: 0 on success, 1 on file/solver/oracle errors,
 * 2 on usage errors.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"parity and explicit Muller game solver toolkit"};
  app.require_subcommand(1);

  // solve
  std::string solve_file, solve_algo = "tda", solve_format = "json";
  int solve_kcap = 0;
  auto* solve = app.add_subcommand("solve", "solve a parity game file");
  solve->add_option("file", solve_file)->required();
  solve->add_option("--algo", solve_algo)
      ->check(CLI::IsMember({"tda", "zielonka", "buchi"}));
  solve->add_option("--k-cap", solve_kcap);
  solve->add_option("--format", solve_format)
      ->check(CLI::IsMember({"json", "dot"}));

  // depth
  std::string depth_file;
  int depth_maxk = 0;
  auto* depth = app.add_subcommand("depth", "measure the trap depth");
  depth->add_option("file", depth_file)->required();
  depth->add_option("--max-k", depth_maxk);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a game (PGSolver text)");
  gen->require_subcommand(1);
  std::uint32_t ladder_n = 4;
  auto* gen_ladder = gen->add_subcommand("ladder", "maximum-depth ladder");
  gen_ladder->add_option("--n", ladder_n)->required();
  std::string selfloop_ps;
  auto* gen_self = gen->add_subcommand("selfloops", "self-loop family");
  gen_self->add_option("--p", selfloop_ps)->required();
  std::uint32_t rand_n = 8;
  double rand_deg = 2.0;
  int rand_maxp = 3;
  std::uint64_t rand_seed = 1;
  auto* gen_rand = gen->add_subcommand("random", "seeded random aligned game");
  gen_rand->add_option("--n", rand_n)->required();
  gen_rand->add_option("--deg", rand_deg);
  gen_rand->add_option("--maxp", rand_maxp);
  gen_rand->add_option("--seed", rand_seed);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  std::string delta_file, delta_player;
  int delta_k = 1;
  auto* oracle_delta =
      oracle_cmd->add_subcommand("delta", "trap-depth game recursion");
  oracle_delta->add_option("file", delta_file)->required();
  oracle_delta->add_option("--player", delta_player)->required();
  oracle_delta->add_option("--k", delta_k)->required();
  std::string fm_file, fm_player;
  int fm_k = 1;
  auto* oracle_fm = oracle_cmd->add_subcommand(
      "first-move", "largest winning first move");
  oracle_fm->add_option("file", fm_file)->required();
  oracle_fm->add_option("--player", fm_player)->required();
  oracle_fm->add_option("--k", fm_k)->required();

  // muller
  auto* muller_cmd = app.add_subcommand("muller", "explicit Muller games");
  muller_cmd->require_subcommand(1);
  std::string muller_file;
  auto* muller_solve = muller_cmd->add_subcommand(
      "solve", "decide whether Red wins somewhere");
  muller_solve->add_option("file", muller_file)->required();

  // check
  std::string check_file, check_cert;
  auto* check = app.add_subcommand("check", "validate a play certificate");
  check->add_option("file", check_file)->required();
  check->add_option("--cert", check_cert)->required();

  // align
  std::string align_file;
  auto* align = app.add_subcommand(
      "align", "convert to the aligned model (PGSolver text)");
  align->add_option("file", align_file)->required();

  // bench
  std::string bench_family = "ladder", bench_nlist, bench_algos = "tda";
  double bench_deg = 2.0;
  int bench_maxp = 6;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time solvers on a family");
  bench->add_option("--family", bench_family)
      ->check(CLI::IsMember({"ladder", "random"}));
  bench->add_option("--n-list", bench_nlist)->required();
  bench->add_option("--algo", bench_algos);
  bench->add_option("--deg", bench_deg);
  bench->add_option("--maxp", bench_maxp);
  bench->add_option("--seed", bench_seed);

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*solve) {
      const ParityGame game = parse_pgsolver(detail::read_file(solve_file));
      const SubgameView view(game);
      SolveResult result;
      if (solve_algo == "zielonka") {
        result = zielonka_solve(view);
      } else if (solve_algo == "buchi") {
        result = SolveResult(game.size());
        Counters counters;
        result.w_odd = buchi_solve(view, &counters);
        result.w_even = view.alive() - result.w_odd;
        result.counters = counters.tally;
      } else {
        result = solve_full(view, solve_kcap > 0
                                      ? std::optional<int>(solve_kcap)
                                      : std::nullopt);
      }
      out << (solve_format == "dot" ? emit_result_dot(view, result)
                                    : emit_result_json(result));
      return 0;
    }
    if (*depth) {
      const ParityGame game = parse_pgsolver(detail::read_file(depth_file));
      const SubgameView view(game);
      require_aligned(view, "depth");
      const int natural = int((distinct_priority_count(view) + 1) / 2);
      const int bound = depth_maxk > 0 ? std::min(depth_maxk, natural)
                                       : natural;
      for (int k = 1; k <= bound; ++k) {
        nlohmann::ordered_json j;
        auto winners = nlohmann::ordered_json::array();
        if (!tda_k(view, Player::Even, k).empty()) winners.push_back("Even");
        if (!tda_k(view, Player::Odd, k).empty()) winners.push_back("Odd");
        if (!winners.empty()) {
          j["k"] = k;
          j["winners"] = winners;
          out << j.dump() << "\n";
          return 0;
        }
      }
      err << "no winner within depth " << bound << "\n";
      return 1;
    }
    if (*gen) {
      if (*gen_ladder) {
        out << emit_pgsolver(ladder(ladder_n));
      } else if (*gen_self) {
        out << emit_pgsolver(
            self_loops(detail::parse_int_list(selfloop_ps, "priority")));
      } else {
        out << emit_pgsolver(
            random_game(rand_n, rand_deg, rand_maxp, rand_seed));
      }
      return 0;
    }
    if (*oracle_cmd) {
      if (*oracle_delta) {
        const ParityGame game =
            parse_pgsolver(detail::read_file(delta_file));
        const bool value = delta(SubgameView(game),
                                 detail::parse_player(delta_player), delta_k);
        nlohmann::ordered_json j;
        j["delta"] = value;
        out << j.dump() << "\n";
      } else {
        const ParityGame game = parse_pgsolver(detail::read_file(fm_file));
        const VertexSet move = largest_first_move(
            SubgameView(game), detail::parse_player(fm_player), fm_k);
        nlohmann::ordered_json j;
        j["first_move"] = nlohmann::ordered_json::array();
        move.for_each([&](Vertex v) { j["first_move"].push_back(v); });
        out << j.dump() << "\n";
      }
      return 0;
    }
    if (*muller_cmd) {
      const ExplicitMullerGame game =
          parse_muller(detail::read_file(muller_file));
      const MullerDecision decision = red_wins_somewhere(game);
      nlohmann::ordered_json j;
      j["answer"] = decision.red_wins_somewhere;
      j["w"] = nlohmann::ordered_json::array();
      for (const VertexSet& s : decision.winning_sets) {
        auto arr = nlohmann::ordered_json::array();
        s.for_each([&](Vertex v) { arr.push_back(v); });
        j["w"].push_back(arr);
      }
      out << j.dump() << "\n";
      return 0;
    }
    if (*check) {
      const std::string text = detail::read_file(check_file);
      std::string diagnostic;
      bool valid;
      if (text.rfind("muller", 0) == 0) {
        const ExplicitMullerGame game = parse_muller(text);
        const TrapDepthCertificate cert = parse_certificate(
            detail::read_file(check_cert), game.size());
        valid = validate_certificate(game, cert, &diagnostic);
      } else {
        const ParityGame game = parse_pgsolver(text);
        const TrapDepthCertificate cert = parse_certificate(
            detail::read_file(check_cert), game.size());
        valid = validate_certificate(SubgameView(game), cert, &diagnostic);
      }
      nlohmann::ordered_json j;
      j["valid"] = valid;
      if (!valid) j["diagnostic"] = diagnostic;
      out << j.dump() << "\n";
      return 0;
    }
    if (*align) {
      const ParityGame game = parse_pgsolver(detail::read_file(align_file));
      out << emit_pgsolver(align_gadget(game).game);
      return 0;
    }
    if (*bench) {
      const std::vector<int> sizes =
          detail::parse_int_list(bench_nlist, "size");
      std::stringstream algos_in(bench_algos);
      std::string algo;
      std::vector<std::string> algos;
      while (std::getline(algos_in, algo, ',')) algos.push_back(algo);
      for (int n : sizes) {
        const ParityGame game =
            bench_family == "ladder"
                ? ladder(std::uint32_t(n))
                : random_game(std::uint32_t(n), bench_deg, bench_maxp,
                              bench_seed + std::uint64_t(n));
        for (const std::string& a : algos) {
          const SubgameView view(game);
          const auto start = std::chrono::steady_clock::now();
          SolveResult result = a == "zielonka" ? zielonka_solve(view)
                                               : solve_full(view);
          const auto stop = std::chrono::steady_clock::now();
          nlohmann::ordered_json j;
          j["family"] = bench_family;
          j["n"] = n;
          j["algo"] = a;
          j["wall_ms"] =
              std::chrono::duration<double, std::milli>(stop - start).count();
          j["counters"] = nlohmann::ordered_json::object();
          for (const auto& [name, value] : result.counters)
            j["counters"][name] = value;
          out << j.dump() << "\n";
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace tdsolve::cli
