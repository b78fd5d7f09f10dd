#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgtk::cli {

// Exit codes shared by all commands: 0 success, 1 input error or
// disagreement/violation, 2 resource exhaustion.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kResourceError = 2;

struct SolveOptions {
  std::string game_file;
  int start = 0;
  std::string solver = "zielonka";  // zielonka|bruteforce|dagwidth|treewidth|nc
  std::optional<std::string> decomp_file;
  std::optional<int> k;
  std::optional<long> rounds;
  long budget = 10'000'000;
  bool json = false;
};
int cmd_solve(const SolveOptions& o);

struct GenerateOptions {
  int n = 6;
  int k = 2;
  int d = 3;
  int count = 1;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool self_loop_repair = false;
  bool json = false;
};
int cmd_generate(const GenerateOptions& o);

struct CompareOptions {
  std::string corpus_dir;
  std::vector<std::string> solvers;
  std::optional<int> k;
  std::optional<long> rounds;
  long budget = 10'000'000;
  bool json = false;
};
int cmd_compare(const CompareOptions& o);

struct ValidateOptions {
  std::string game_file;
  std::optional<std::string> decomp_file;
  bool json = false;
};
int cmd_validate(const ValidateOptions& o);

}  // namespace pgtk::cli
