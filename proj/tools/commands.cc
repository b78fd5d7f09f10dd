#include "commands.hh"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "pgtk/decomp.hh"
#include "pgtk/game.hh"
#include "pgtk/generate.hh"
#include "pgtk/pgsolver.hh"
#include "pgtk/solve.hh"
#include "pgtk/solvers.hh"

namespace pgtk::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

ParityGame load_game(const std::string& path) {
  ParityGame g = parse_pgsolver(read_file(path));
  auto errs = validate_game(g);
  if (!errs.empty()) throw std::runtime_error(path + ": " + errs.front());
  return g;
}

const char* owner_name(Owner o) { return o == Owner::Even ? "Even" : "Odd"; }

const char* verdict_name(NcVerdict v) {
  switch (v) {
    case NcVerdict::EvenWins: return "Even";
    case NcVerdict::OddWins: return "Odd";
    default: return "TreewidthExceeded";
  }
}

json stats_json(const SimStats& st) {
  return json{{"states", st.states},
              {"max_history", st.max_history},
              {"rejects", st.rejects},
              {"rounds", st.max_rounds}};
}

struct SolverRun {
  std::string winner;
  json stats = json::object();
};

// Runs one solver for one start vertex; throws on bad inputs or exhausted
// budgets.
SolverRun run_solver(const std::string& solver, const ParityGame& g, int s,
                     const std::optional<DecompositionFile>& df,
                     std::optional<int> k, std::optional<long> rounds,
                     long budget) {
  if (s < 0 || s >= g.size()) throw std::runtime_error("start vertex out of range");
  SolverRun out;
  SimConfig cfg;
  cfg.state_budget = budget;
  if (solver == "zielonka") {
    out.winner = owner_name(solve_zielonka(g).winner(s));
  } else if (solver == "bruteforce") {
    out.winner = owner_name(solve_bruteforce(g, s));
  } else if (solver == "dagwidth") {
    if (!df) throw std::runtime_error("dagwidth needs --decomp");
    DagDecomposition dd = tree_to_dag(df->decomposition, df->root.value_or(0));
    SolveReport r = solve_dagwidth(g, dd, s, cfg);
    out.winner = owner_name(r.winner);
    out.stats = stats_json(r.stats);
  } else if (solver == "treewidth") {
    if (!df) throw std::runtime_error("treewidth needs --decomp");
    SolveReport r = solve_treewidth(g, df->decomposition, s, cfg);
    out.winner = owner_name(r.winner);
    out.stats = stats_json(r.stats);
  } else if (solver == "nc") {
    NcReport r = df ? solve_nc_scripted(g, df->decomposition, s, rounds, budget)
                    : solve_nc(g, k.value_or(g.size()), s, rounds, budget);
    out.winner = verdict_name(r.verdict);
    out.stats = stats_json(r.stats_main);
    out.stats["states_swapped"] = r.stats_swapped.states;
  } else {
    throw std::runtime_error("unknown solver: " + solver);
  }
  return out;
}

std::optional<DecompositionFile> load_decomp(const std::optional<std::string>& path,
                                             const ParityGame& g) {
  if (!path) return std::nullopt;
  DecompositionFile df = parse_decomposition(read_file(*path));
  auto errs = validate_tree_decomposition(g, df.decomposition);
  if (!errs.empty()) throw std::runtime_error(*path + ": " + errs.front());
  return df;
}

}  // namespace

int cmd_solve(const SolveOptions& o) {
  try {
    ParityGame g = load_game(o.game_file);
    auto df = load_decomp(o.decomp_file, g);
    auto t0 = std::chrono::steady_clock::now();
    SolverRun run;
    try {
      run = run_solver(o.solver, g, o.start, df, o.k, o.rounds, o.budget);
    } catch (const BudgetExceeded& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kResourceError;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (o.json) {
      json rep{{"instance", o.game_file}, {"solver", o.solver},
               {"start", o.start},        {"winner", run.winner},
               {"ms", ms},                {"stats", run.stats}};
      std::cout << rep.dump() << "\n";
    } else {
      std::cout << "winner: " << run.winner << "\n";
      std::cout << "time_ms: " << ms << "\n";
      for (auto& [key, val] : run.stats.items())
        std::cout << key << ": " << val << "\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_generate(const GenerateOptions& o) {
  try {
    fs::create_directories(o.out_dir);
    for (int i = 0; i < o.count; ++i) {
      std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
      GeneratedInstance inst = generate_game(o.n, o.k, o.d, seed, o.self_loop_repair);
      std::string stem = (fs::path(o.out_dir) / ("game-" + std::to_string(seed))).string();
      write_file(stem + ".pg", write_pgsolver(inst.game));
      write_file(stem + ".td", write_decomposition(inst.decomposition));
      if (o.json) {
        std::cout << json{{"game", stem + ".pg"}, {"decomposition", stem + ".td"},
                          {"seed", seed}}
                         .dump()
                  << "\n";
      } else {
        std::cout << stem << ".pg " << stem << ".td\n";
      }
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_compare(const CompareOptions& o) {
  std::vector<fs::path> games;
  try {
    for (const auto& entry : fs::directory_iterator(o.corpus_dir))
      if (entry.path().extension() == ".pg") games.push_back(entry.path());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::sort(games.begin(), games.end());
  bool trouble = false;
  for (const auto& path : games) {
    std::string name = path.filename().string();
    try {
      ParityGame g = load_game(path.string());
      fs::path td_path = path;
      td_path.replace_extension(".td");
      std::optional<std::string> td_file;
      if (fs::exists(td_path)) td_file = td_path.string();
      auto df = load_decomp(td_file, g);
      json winners = json::object();
      bool agree = true;
      for (const auto& solver : o.solvers) {
        std::vector<std::string> per_vertex;
        for (int s = 0; s < g.size(); ++s)
          per_vertex.push_back(
              run_solver(solver, g, s, df, o.k, o.rounds, o.budget).winner);
        winners[solver] = per_vertex;
      }
      for (const auto& solver : o.solvers)
        if (winners[solver] != winners[o.solvers.front()]) agree = false;
      if (!agree) trouble = true;
      if (o.json) {
        std::cout << json{{"instance", name}, {"winners", winners}, {"agree", agree}}
                         .dump()
                  << "\n";
      } else {
        std::cout << name << ": " << (agree ? "agree" : "DISAGREE") << "\n";
        if (!agree)
          for (const auto& solver : o.solvers)
            std::cout << "  " << solver << ": " << winners[solver].dump() << "\n";
      }
    } catch (const std::exception& e) {
      trouble = true;
      if (o.json)
        std::cout << json{{"instance", name}, {"error", e.what()}}.dump() << "\n";
      else
        std::cout << name << ": error: " << e.what() << "\n";
    }
  }
  if (!o.json) std::cout << "instances: " << games.size() << "\n";
  return trouble ? kInputError : kOk;
}

int cmd_validate(const ValidateOptions& o) {
  std::vector<std::string> violations;
  try {
    ParityGame g = parse_pgsolver(read_file(o.game_file));
    for (auto& v : validate_game(g)) violations.push_back("game: " + v);
    if (o.decomp_file) {
      DecompositionFile df = parse_decomposition(read_file(*o.decomp_file));
      for (auto& v : validate_tree_decomposition(g, df.decomposition))
        violations.push_back("decomposition: " + v);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (o.json) {
    std::cout << json{{"file", o.game_file}, {"violations", violations}}.dump() << "\n";
  } else if (violations.empty()) {
    std::cout << "OK\n";
  } else {
    for (const auto& v : violations) std::cout << v << "\n";
  }
  return violations.empty() ? kOk : kInputError;
}

}  // namespace pgtk::cli
