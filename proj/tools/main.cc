#include <CLI11.hpp>

#include "commands.hh"

int main(int argc, char** argv) {
  CLI::App app{"Parity-game toolkit: solve, generate, compare, validate"};
  app.require_subcommand(1);

  pgtk::cli::SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Solve one game from one start vertex");
  solve->add_option("game", so.game_file, "PGSolver-format game file")->required();
  solve->add_option("start", so.start, "start vertex id")->required();
  solve->add_option("--solver", so.solver,
                    "zielonka|bruteforce|dagwidth|treewidth|nc");
  solve->add_option("--decomp", so.decomp_file, "decomposition file");
  solve->add_option("--k", so.k, "set-size bound for the nc solver");
  solve->add_option("--rounds", so.rounds, "round bound override");
  solve->add_option("--budget", so.budget, "state budget");
  solve->add_flag("--json", so.json, "JSON lines output");

  pgtk::cli::GenerateOptions go;
  auto* gen = app.add_subcommand("generate", "Generate random partial k-tree games");
  gen->add_option("--n", go.n, "vertices");
  gen->add_option("--k", go.k, "backbone clique size (width k+1)");
  gen->add_option("--d", go.d, "maximum priority");
  gen->add_option("--count", go.count, "number of instances");
  gen->add_option("--seed", go.seed, "base seed; instance i uses seed+i");
  gen->add_option("--out", go.out_dir, "output directory");
  gen->add_flag("--self-loop-repair", go.self_loop_repair,
                "repair dead ends with self-loops instead of bag back-edges");
  gen->add_flag("--json", go.json, "JSON lines output");

  pgtk::cli::CompareOptions co;
  auto* cmp = app.add_subcommand("compare", "Run several solvers over a corpus");
  cmp->add_option("corpus", co.corpus_dir, "directory of .pg (+ .td) files")->required();
  cmp->add_option("--solver", co.solvers, "solvers to run")->required();
  cmp->add_option("--k", co.k, "set-size bound for the nc solver");
  cmp->add_option("--rounds", co.rounds, "round bound override");
  cmp->add_option("--budget", co.budget, "state budget");
  cmp->add_flag("--json", co.json, "JSON lines output");

  pgtk::cli::ValidateOptions vo;
  auto* val = app.add_subcommand("validate", "Check a game and optional decomposition");
  val->add_option("game", vo.game_file, "PGSolver-format game file")->required();
  val->add_option("--decomp", vo.decomp_file, "decomposition file");
  val->add_flag("--json", vo.json, "JSON lines output");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) return pgtk::cli::cmd_solve(so);
  if (gen->parsed()) return pgtk::cli::cmd_generate(go);
  if (cmp->parsed()) return pgtk::cli::cmd_compare(co);
  return pgtk::cli::cmd_validate(vo);
}
