#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pgtk/game.hh"
#include "pgtk/profiles.hh"

namespace pgtk {

// A rejected profile: the set it was given for, the highest priority seen
// since the rejection (kUnreachable until a priority is recorded), and the
// profile itself.
struct Record {
  std::vector<int> F;  // sorted
  int p = kUnreachable;
  StrategyProfile P;

  bool operator==(const Record& o) const {
    return F == o.F && p == o.p && P == o.P;
  }
};

using History = std::vector<Record>;

Record update_record(const Record& r, int p2);
History update_history(const History& h, int p2);

// One simulated or real move: from v, with priority p, to u.
struct PathEntry {
  int v, p, u;
};

// Winner by the parity of the highest entry priority on the closing cycle.
// Throws when the path does not end in a cycle.
Owner winner_of_lasso(const std::vector<PathEntry>& path);

// If c is in the final set of some record, adjudicates against the last such
// record; otherwise returns nothing.
std::optional<Owner> adjudicate_return(int c, const History& h,
                                       const std::vector<PathEntry>& path);

// One option Odd has after rejecting: the trimmed history, the set for the
// next subgame, and the policy's successor state.
struct RejectChoice {
  History history;
  std::vector<int> next_set;  // sorted
  std::vector<int> policy_state;
};

// Supplies the set-selection and history-trimming behavior of a solver.
// Several options mean Odd chooses among them.
class SimPolicy {
 public:
  virtual ~SimPolicy() = default;
  virtual std::vector<int> initial_state() const { return {}; }
  // `appended` already contains the updated records plus the new rejected
  // record at the back. Returning no option makes rejecting impossible; an
  // Odd player left with neither accepts nor a rejection loses.
  virtual std::vector<RejectChoice> reject_choices(
      const std::vector<int>& S, int v, const History& appended,
      const std::vector<int>& state) const = 0;
};

// For a game played entirely on one set: rejecting is impossible.
class OneBagPolicy : public SimPolicy {
 public:
  std::vector<RejectChoice> reject_choices(const std::vector<int>&, int,
                                           const History&,
                                           const std::vector<int>&) const override {
    throw std::logic_error("rejection is unreachable when the set covers the game");
  }
};

enum class OutcomeReason { ReturnAdjudication, Cycle, RoundBoundExhausted };

struct TerminalOutcome {
  Owner winner;
  OutcomeReason reason;
};

struct SimStats {
  long states = 0;
  int max_path = 0;
  int max_history = 0;
  int max_reject_depth = 0;
  long rejects = 0;
  long max_rounds = 0;
  long rounds_limit_hits = 0;  // terminals declared for Even by the round bound
};

struct SimConfig {
  std::optional<long> round_bound;
  long state_budget = 10'000'000;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& m) : std::runtime_error(m) {}
};

struct SimResult {
  Owner winner;
  SimStats stats;
};

// Exhaustive alternating search over the simulation game: Even picks edges
// and profiles existentially, Odd picks edges, accept targets, rejections and
// policy options universally. Memoized on the full game state.
SimResult solve_simulation(const ParityGame& g, const std::vector<int>& S0, int s,
                           const SimPolicy& policy, const SimConfig& cfg = {});

// Scripted agents for property tests.
class EvenAgent {
 public:
  virtual ~EvenAgent() = default;
  virtual int pick_edge(int c) = 0;
  virtual StrategyProfile pick_profile(int v, const std::vector<int>& S) = 0;
};

class OddAgent {
 public:
  virtual ~OddAgent() = default;
  virtual int pick_edge(int c) = 0;
  // Accepted vertex, or nothing for reject.
  virtual std::optional<int> respond(const StrategyProfile& offered, int v,
                                     const std::vector<int>& S) = 0;
};

// Plays a fixed positional strategy: its edge at owned vertices, its true
// profile when asked for one.
class FollowEven : public EvenAgent {
 public:
  FollowEven(const ParityGame& g, Strategy sigma);
  int pick_edge(int c) override;
  StrategyProfile pick_profile(int v, const std::vector<int>& S) override;

 private:
  const ParityGame& g_;
  Strategy sigma_;
};

// Plays a fixed positional strategy; rejects exactly the profiles its own
// profile refutes, otherwise accepts the lowest vertex whose claim its
// strategy can match or beat.
class FollowOdd : public OddAgent {
 public:
  FollowOdd(const ParityGame& g, Strategy tau);
  int pick_edge(int c) override;
  std::optional<int> respond(const StrategyProfile& offered, int v,
                             const std::vector<int>& S) override;

 private:
  const ParityGame& g_;
  Strategy tau_;
};

// Visits every reachable state of the simulation game, with either side
// optionally scripted by an agent (a null agent enumerates all moves).
// Reports each distinct terminal. No branch is pruned.
SimStats explore_simulation(const ParityGame& g, const std::vector<int>& S0, int s,
                            const SimPolicy& policy, EvenAgent* even, OddAgent* odd,
                            const std::function<void(const TerminalOutcome&)>& on_terminal,
                            const SimConfig& cfg = {});

}  // namespace pgtk
