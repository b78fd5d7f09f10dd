#pragma once

#include <optional>

#include "pgtk/decomp.hh"
#include "pgtk/simgame.hh"

namespace pgtk {

// Rounds after which the simulation is stopped in Even's favor when Odd plays
// a width-k set strategy on an n-vertex game.
long round_bound(int k, int n);

// Owners exchanged and every priority raised by one: the new game is won by
// Even exactly where the old one is won by Odd.
ParityGame swap_players(const ParityGame& g);

// Descends the DAG decomposition: on rejection the play moves to the
// successor bag in the direction of the rejected vertex, keeping only the
// newest record.
class DagPolicy : public SimPolicy {
 public:
  DagPolicy(const DagDecomposition& dd, int start) : dd_(dd), start_(start) {}
  std::vector<int> initial_state() const override { return {start_}; }
  std::vector<RejectChoice> reject_choices(const std::vector<int>& S, int v,
                                           const History& appended,
                                           const std::vector<int>& state) const override;

 private:
  const DagDecomposition& dd_;
  int start_;
};

// The input game extended with one copy of v per non-initial bag containing
// v, so that plays can only descend the rooted decomposition. Copies that
// could never reach a real successor are left out; they would be dead ends.
struct ModifiedGame {
  ParityGame game;
  int original_n = 0;
  std::vector<int> copy_vertex;  // per id >= original_n: the copied vertex
  std::vector<int> copy_node;    // per id >= original_n: the bag it lives at

  int node_of(int w, const RootedTreeDecomposition& rtd) const;
};

ModifiedGame modify_game(const ParityGame& g, const RootedTreeDecomposition& rtd);

// On rejection at w the play moves to the bag w belongs to, plus w itself,
// keeping only the newest record. Each bag hosts at most one subgame; a
// rejection that would revisit a bag falls back to the whole vertex set,
// after which no further rejection is possible.
class TwPolicy : public SimPolicy {
 public:
  TwPolicy(const ModifiedGame& mg, const RootedTreeDecomposition& rtd)
      : mg_(mg), rtd_(rtd) {}
  std::vector<int> initial_state() const override { return {rtd_.root}; }
  std::vector<RejectChoice> reject_choices(const std::vector<int>& S, int v,
                                           const History& appended,
                                           const std::vector<int>& state) const override;

 private:
  const ModifiedGame& mg_;
  const RootedTreeDecomposition& rtd_;
};

// Odd picks any next set of at most k vertices containing the rejected
// vertex and deletes records down to at most three, in every possible way.
class NcUniversalPolicy : public SimPolicy {
 public:
  NcUniversalPolicy(int k, int n);
  std::vector<RejectChoice> reject_choices(const std::vector<int>& S, int v,
                                           const History& appended,
                                           const std::vector<int>& state) const override;

 private:
  int k_, n_;
};

// Odd's scripted set strategy on a tree decomposition: track a live node set
// L, keep exactly the records whose node still borders L, and move to the
// splitter of L while fewer than three records remain, otherwise to the
// meeting point of the three record nodes.
class SliceReducePolicy : public SimPolicy {
 public:
  explicit SliceReducePolicy(const TreeDecomposition& td);
  std::vector<int> initial_state() const override { return {0}; }
  std::vector<RejectChoice> reject_choices(const std::vector<int>& S, int v,
                                           const History& appended,
                                           const std::vector<int>& state) const override;

 private:
  const TreeDecomposition& td_;
  std::vector<std::vector<int>> adj_;
};

struct SolveReport {
  Owner winner;
  SimStats stats;
};

// Simulation on the bag of the lowest source covering s, descending the DAG.
SolveReport solve_dagwidth(const ParityGame& g, const DagDecomposition& dd, int s,
                           const SimConfig& cfg = {});

// Simulation on the modified game, one subgame per decomposition node.
SolveReport solve_treewidth(const ParityGame& g, const TreeDecomposition& td, int s,
                            const SimConfig& cfg = {});

enum class NcVerdict { EvenWins, OddWins, TreewidthExceeded };

struct NcReport {
  NcVerdict verdict;
  SimStats stats_main;
  SimStats stats_swapped;
};

// Round-bounded simulation with universal Odd set choices, run on the game
// and on its player swap. Even winning both runs means no width-k set
// strategy can pin the game down.
NcReport solve_nc(const ParityGame& g, int k, int s,
                  std::optional<long> rounds = std::nullopt,
                  long budget = 10'000'000);

// Same decision rule but with Odd's set choices scripted by slice/reduce on
// the given decomposition; k is its width.
NcReport solve_nc_scripted(const ParityGame& g, const TreeDecomposition& td, int s,
                           std::optional<long> rounds = std::nullopt,
                           long budget = 10'000'000);

}  // namespace pgtk
