// Copyright 2026 The BNPG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bnpg/io.hpp"
#include "bnpg/oracle.hpp"
#include "bnpg/structured_solvers.hpp"
#include "bnpg/tree_solver.hpp"

namespace {

// Exit codes: 0 solved/verified, 1 input error, 2 guard or size refusal,
// 3 proven no-PSNE / no-solution.
constexpr int kExitSolved = 0;
constexpr int kExitInputError = 1;
constexpr int kExitRefused = 2;
constexpr int kExitNoSolution = 3;

bnpg::InstanceDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bnpg::InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return bnpg::parse_instance(buffer.str());
}

const bnpg::BNPGGame& need_game(const bnpg::InstanceDocument& doc, const std::string& path) {
  if (!doc.game) throw bnpg::InputError("'" + path + "' is not a game document");
  return *doc.game;
}

void emit(const bnpg::InstanceDocument& doc) { std::cout << bnpg::serialize_instance(doc); }

int run_verify(const std::string& game_path, const std::string& profile_path,
               const std::string& eps_text) {
  const auto game_doc = load(game_path);
  const auto& game = need_game(game_doc, game_path);
  const auto profile_doc = load(profile_path);

  if (profile_doc.mixed) {
    const bnpg::Rational eps = bnpg::Rational::parse(eps_text);
    const auto verdict = bnpg::verify_eps_ne(game, *profile_doc.mixed, eps);
    if (verdict.holds) {
      std::cout << "eps-NE verified (eps = " << eps << ")\n";
      return kExitSolved;
    }
    const auto& w = *verdict.witness;
    std::cout << "not an eps-NE: player " << w.player << " supported action "
              << w.supported_action << " loses more than eps against action " << w.better_action
              << "\n";
    return kExitNoSolution;
  }
  if (!profile_doc.profile) {
    throw bnpg::InputError("'" + profile_path + "' is not a profile document");
  }
  const auto verdict = bnpg::verify_psne(game, *profile_doc.profile);
  if (verdict.is_psne) {
    std::cout << "PSNE verified\n";
    return kExitSolved;
  }
  std::cout << "not a PSNE: player " << *verdict.deviator << " deviates\n";
  return kExitNoSolution;
}

int run_solve(const std::string& game_path, const std::string& method, int max_rank) {
  const auto doc = load(game_path);
  const auto& game = need_game(doc, game_path);

  std::optional<bnpg::StrategyProfile> witness;
  std::string used = method;
  if (method == "auto") {
    if (game.graph.is_forest()) {
      used = "tree";
    } else if (game.graph.is_complete()) {
      used = "clique";
    } else if (bnpg::circuit_rank(game.graph) <= max_rank) {
      used = "circuit-rank";
    } else if (game.player_count() <= 25) {
      used = "brute";
    } else {
      std::cerr << "refusing: graph is neither a forest, complete, nor of circuit rank <= "
                << max_rank << ", and too large for brute force\n";
      return kExitRefused;
    }
  }

  if (used == "tree") {
    witness = bnpg::solve_tree_psne(game);
  } else if (used == "clique") {
    witness = bnpg::solve_clique_psne(game);
  } else if (used == "circuit-rank") {
    witness = bnpg::solve_bounded_circuit_rank_psne(game, max_rank);
  } else if (used == "brute") {
    const auto all = bnpg::enumerate_psne(game);
    if (!all.empty()) witness = all.front();
  } else {
    throw CLI::ValidationError("--method", "unknown method '" + used + "'");
  }

  if (!witness) {
    std::cout << "no PSNE exists\n";
    return kExitNoSolution;
  }
  emit(bnpg::InstanceDocument::of(*witness));
  return kExitSolved;
}

int run_anm(const std::string& path, const std::string& method) {
  const auto doc = load(path);
  if (!doc.anm) throw bnpg::InputError("'" + path + "' is not an anm document");
  std::optional<bnpg::EditSet> edits;
  if (method == "asymmetric") {
    edits = bnpg::solve_anm_asymmetric(*doc.anm);
  } else if (method == "brute") {
    edits = bnpg::brute_anm(*doc.anm);
  } else {
    throw CLI::ValidationError("--method", "unknown method '" + method + "'");
  }
  if (!edits) {
    std::cout << "no edit set within budget makes the target a PSNE\n";
    return kExitNoSolution;
  }
  emit(bnpg::InstanceDocument::of(*edits));
  return kExitSolved;
}

int run_reduce(const std::string& kind, const std::string& path, const std::string& symmetry,
               const std::string& variant, const std::string& eps_text) {
  const auto doc = load(path);
  if (kind == "homogenize") {
    if (!doc.anm) throw bnpg::InputError("homogenize needs an anm document");
    emit(bnpg::InstanceDocument::of(bnpg::homogenize(*doc.anm).instance));
  } else if (kind == "homogenize-deg13") {
    if (!doc.anm) throw bnpg::InputError("homogenize-deg13 needs an anm document");
    emit(bnpg::InstanceDocument::of(bnpg::homogenize_bounded_degree(*doc.anm).instance));
  } else if (kind == "knapsack-to-anm") {
    if (!doc.knapsack) throw bnpg::InputError("knapsack-to-anm needs a knapsack document");
    const auto sym =
        symmetry == "symmetric" ? bnpg::Symmetry::symmetric : bnpg::Symmetry::asymmetric;
    emit(bnpg::InstanceDocument::of(bnpg::knapsack_to_anm(*doc.knapsack, sym)));
  } else if (kind == "sat-to-anm") {
    if (!doc.sat) throw bnpg::InputError("sat-to-anm needs a sat document");
    const auto var = variant == "arbitrary-target" ? bnpg::SatAnmVariant::arbitrary_target
                                                   : bnpg::SatAnmVariant::all_invest;
    emit(bnpg::InstanceDocument::of(bnpg::sat_to_anm(*doc.sat, var)));
  } else if (kind == "dpgg-to-bnpg") {
    if (!doc.dpgg) throw bnpg::InputError("dpgg-to-bnpg needs a dpgg document");
    emit(bnpg::InstanceDocument::of(
        bnpg::dpgg_to_bnpg(*doc.dpgg, bnpg::Rational::parse(eps_text))));
  } else {
    throw bnpg::InputError("unknown reduction '" + kind + "'");
  }
  return kExitSolved;
}

int run_oracle(const std::string& subproblem, const std::string& path) {
  const auto doc = load(path);
  if (subproblem == "enumerate-psne") {
    const auto& game = need_game(doc, path);
    const auto all = bnpg::enumerate_psne(game);
    for (const auto& profile : all) {
      std::string line;
      for (auto a : profile.actions) line += a ? '1' : '0';
      std::cout << line << "\n";
    }
    return all.empty() ? kExitNoSolution : kExitSolved;
  }
  if (subproblem == "min-knapsack") {
    if (!doc.knapsack) throw bnpg::InputError("min-knapsack needs a knapsack document");
    const auto opt = bnpg::brute_min_knapsack(*doc.knapsack);
    if (!opt) {
      std::cout << "infeasible\n";
      return kExitNoSolution;
    }
    std::cout << *opt << "\n";
    return kExitSolved;
  }
  if (subproblem == "anm") {
    if (!doc.anm) throw bnpg::InputError("oracle anm needs an anm document");
    const auto edits = bnpg::brute_anm(*doc.anm);
    if (!edits) {
      std::cout << "no edit set within budget makes the target a PSNE\n";
      return kExitNoSolution;
    }
    emit(bnpg::InstanceDocument::of(*edits));
    return kExitSolved;
  }
  if (subproblem == "sat") {
    if (!doc.sat) throw bnpg::InputError("oracle sat needs a sat document");
    const bool satisfiable = bnpg::brute_sat(*doc.sat);
    std::cout << (satisfiable ? "satisfiable" : "unsatisfiable") << "\n";
    return satisfiable ? kExitSolved : kExitNoSolution;
  }
  throw bnpg::InputError("unknown oracle subproblem '" + subproblem + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver toolkit for binary networked public goods games with altruism"};
  app.require_subcommand(1);

  std::string game_path;
  std::string profile_path;
  std::string eps_text = "0";
  auto* verify = app.add_subcommand("verify", "check a pure profile (or a mixed one with --eps)");
  verify->add_option("game", game_path)->required();
  verify->add_option("profile", profile_path)->required();
  verify->add_option("--eps", eps_text, "tolerance for mixed-profile verification");

  std::string solve_path;
  std::string method = "auto";
  int max_rank = 3;
  auto* solve = app.add_subcommand("solve", "find a PSNE or prove none exists");
  solve->add_option("game", solve_path)->required();
  solve->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "tree", "clique", "circuit-rank", "brute"}));
  solve->add_option("--max-rank", max_rank, "circuit-rank bound for auto dispatch");

  std::string anm_path;
  std::string anm_method = "asymmetric";
  auto* anm = app.add_subcommand("anm", "solve altruistic network modification");
  anm->add_option("instance", anm_path)->required();
  anm->add_option("--method", anm_method)->check(CLI::IsMember({"asymmetric", "brute"}));

  std::string reduce_kind;
  std::string reduce_path;
  std::string symmetry = "asymmetric";
  std::string variant = "all-invest";
  std::string reduce_eps = "1";
  auto* reduce = app.add_subcommand("reduce", "build a reduction gadget instance");
  reduce->add_option("kind", reduce_kind)
      ->required()
      ->check(CLI::IsMember(
          {"homogenize", "homogenize-deg13", "knapsack-to-anm", "sat-to-anm", "dpgg-to-bnpg"}));
  reduce->add_option("input", reduce_path)->required();
  reduce->add_option("--symmetry", symmetry)->check(CLI::IsMember({"asymmetric", "symmetric"}));
  reduce->add_option("--variant", variant)
      ->check(CLI::IsMember({"all-invest", "arbitrary-target"}));
  reduce->add_option("--eps", reduce_eps, "eps for dpgg-to-bnpg");

  bnpg::GenSpec spec;
  auto* gen = app.add_subcommand("gen", "generate a random instance document");
  gen->add_option("kind", spec.kind)
      ->required()
      ->check(CLI::IsMember({"tree", "clique", "circuit-rank", "sat", "knapsack", "anm-tree",
                             "anm-clique", "anm-circuit-rank"}));
  gen->add_option("--n", spec.size, "players / variables / items");
  gen->add_option("--seed", spec.seed);
  gen->add_option("--rank", spec.rank, "circuit rank for circuit-rank kinds");
  gen->add_option("--max-degree", spec.max_degree, "degree cap for tree kinds (0 = none)");
  gen->add_flag("--undirected-altruism{false},--directed-altruism{true}",
                spec.directed_altruism, "altruism directedness for anm kinds");

  std::string oracle_sub;
  std::string oracle_path;
  auto* oracle = app.add_subcommand("oracle", "run a brute-force reference solver");
  oracle->add_option("subproblem", oracle_sub)
      ->required()
      ->check(CLI::IsMember({"enumerate-psne", "min-knapsack", "anm", "sat"}));
  oracle->add_option("input", oracle_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(game_path, profile_path, eps_text);
    if (solve->parsed()) return run_solve(solve_path, method, max_rank);
    if (anm->parsed()) return run_anm(anm_path, anm_method);
    if (reduce->parsed()) {
      return run_reduce(reduce_kind, reduce_path, symmetry, variant, reduce_eps);
    }
    if (gen->parsed()) {
      emit(bnpg::generate_instance(spec));
      return kExitSolved;
    }
    if (oracle->parsed()) return run_oracle(oracle_sub, oracle_path);
  } catch (const bnpg::GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const bnpg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const bnpg::RangeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
