#include "pgtk/simgame.hh"

#include <algorithm>
#include <climits>
#include <unordered_map>
#include <utility>

namespace pgtk {

namespace {

bool in_set(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

int max_path_priority(const std::vector<PathEntry>& path) {
  int m = kUnreachable;
  for (const auto& e : path) m = std::max(m, e.p);
  return m;
}

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct EngState {
  std::vector<int> S;
  History hist;
  std::vector<PathEntry> path;
  int c = -1;        // current vertex, -1 while the initial profile is owed
  int pending = -1;  // vertex awaiting a profile, -1 otherwise
  std::vector<int> pstate;
  long rounds = 0;   // rounds consumed before the current one
};

class Engine {
 public:
  Engine(const ParityGame& g, const SimPolicy& policy, const SimConfig& cfg,
         bool prune, EvenAgent* ea, OddAgent* oa,
         const std::function<void(const TerminalOutcome&)>* on_terminal)
      : g_(g),
        policy_(policy),
        cfg_(cfg),
        prune_(prune),
        ea_(ea),
        oa_(oa),
        on_terminal_(on_terminal),
        domain_(g.priority_values()) {}

  bool run(const std::vector<int>& S0, int s) {
    if (S0.empty()) throw std::runtime_error("the initial set is empty");
    EngState st;
    st.S = S0;
    std::sort(st.S.begin(), st.S.end());
    st.S.erase(std::unique(st.S.begin(), st.S.end()), st.S.end());
    st.pstate = policy_.initial_state();
    if (in_set(st.S, s))
      st.c = s;
    else
      st.pending = s;
    return eval(std::move(st));
  }

  SimStats stats;

 private:
  bool terminal(Owner w, OutcomeReason r) {
    if (r == OutcomeReason::RoundBoundExhausted) ++stats.rounds_limit_hits;
    if (on_terminal_) (*on_terminal_)({w, r});
    return w == Owner::Even;
  }

  std::vector<int> key_of(const EngState& st) const {
    std::vector<int> k;
    k.push_back(st.c);
    k.push_back(st.pending);
    k.push_back(static_cast<int>(st.S.size()));
    k.insert(k.end(), st.S.begin(), st.S.end());
    k.push_back(static_cast<int>(st.path.size()));
    for (const auto& e : st.path) {
      k.push_back(e.v);
      k.push_back(e.p);
      k.push_back(e.u);
    }
    k.push_back(static_cast<int>(st.hist.size()));
    for (const auto& r : st.hist) {
      // A record's profile ranges over its own set, so F need not repeat.
      k.push_back(static_cast<int>(r.F.size()));
      k.insert(k.end(), r.F.begin(), r.F.end());
      k.push_back(r.p);
      k.insert(k.end(), r.P.entries.begin(), r.P.entries.end());
    }
    k.push_back(static_cast<int>(st.pstate.size()));
    k.insert(k.end(), st.pstate.begin(), st.pstate.end());
    return k;
  }

  // Entry point of one round: edge selection when the current vertex is in
  // the set, otherwise the profile owed for the pending vertex.
  bool eval(EngState st) {
    if (cfg_.round_bound && st.rounds >= *cfg_.round_bound)
      return terminal(Owner::Even, OutcomeReason::RoundBoundExhausted);
    if (++stats.states > cfg_.state_budget)
      throw BudgetExceeded("simulation state budget exhausted");
    stats.max_history = std::max(stats.max_history, static_cast<int>(st.hist.size()));
    stats.max_rounds = std::max(stats.max_rounds, st.rounds + 1);
    std::vector<int> key = key_of(st);
    long remaining = 0;
    if (cfg_.round_bound) {
      remaining = *cfg_.round_bound - st.rounds;
      // The outcome is monotone in the rounds still available: exhaustion is
      // an Even win, so shrinking the allowance never hurts Even, and an Odd
      // strategy that forces its terminals inside the allowance keeps doing
      // so under any larger one. Cached outcomes for other allowances of the
      // same state therefore settle many lookups outright.
      if (prune_) {
        auto bit = thresh_.find(key);
        if (bit != thresh_.end()) {
          if (remaining <= bit->second.even_max) {
            --stats.states;
            return true;
          }
          if (remaining >= bit->second.odd_min) {
            --stats.states;
            return false;
          }
        }
      }
      key.push_back(static_cast<int>(st.rounds));
    }
    auto [it, inserted] = memo_.try_emplace(key, kInProgress);
    if (!inserted) {
      if (it->second == kInProgress)
        throw std::logic_error("simulation state revisited within a single play");
      --stats.states;
      return it->second == 1;
    }
    st.rounds += 1;
    bool val = st.pending >= 0 ? eval_profile(st) : eval_move(st);
    memo_[key] = val ? 1 : 0;
    if (cfg_.round_bound && prune_) {
      key.pop_back();
      auto& bi = thresh_[std::move(key)];
      if (val)
        bi.even_max = std::max(bi.even_max, remaining);
      else
        bi.odd_min = std::min(bi.odd_min, remaining);
    }
    return val;
  }

  bool eval_move(EngState& st) {
    Owner o = g_.owner(st.c);
    std::vector<int> moves;
    if ((o == Owner::Even && ea_) || (o == Owner::Odd && oa_)) {
      int v = o == Owner::Even ? ea_->pick_edge(st.c) : oa_->pick_edge(st.c);
      const auto& succ = g_.succ(st.c);
      if (std::find(succ.begin(), succ.end(), v) == succ.end())
        throw std::logic_error("agent picked a missing edge");
      moves = {v};
    } else {
      moves = g_.succ(st.c);
      std::sort(moves.begin(), moves.end());
      moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    }
    bool acc = o == Owner::Odd;
    for (int v : moves) {
      EngState next = st;
      bool r = after_edge(next, v);
      if (o == Owner::Even) {
        acc = acc || r;
        if (prune_ && acc) break;
      } else {
        acc = acc && r;
        if (prune_ && !acc) break;
      }
    }
    return acc;
  }

  bool after_edge(EngState& st, int v) {
    bool in_record = false;
    for (const auto& r : st.hist)
      if (in_set(r.F, v)) {
        in_record = true;
        break;
      }
    if (in_set(st.S, v) || in_record) {
      st.path.push_back({st.c, g_.priority(v), v});
      st.c = v;
      return settle(st);
    }
    st.pending = v;
    return eval_profile(st);
  }

  // After an append: adjudicate a return into a recorded set, then look for a
  // closed cycle, otherwise start the next round.
  bool settle(EngState& st) {
    if (st.path.size() > st.S.size() + 1)
      throw std::logic_error("path has more entries than possible sources");
    stats.max_path = std::max(stats.max_path, static_cast<int>(st.path.size()));
    if (auto w = adjudicate_return(st.c, st.hist, st.path))
      return terminal(*w, OutcomeReason::ReturnAdjudication);
    for (size_t i = 0; i < st.path.size(); ++i) {
      if (st.path[i].v != st.c || !in_set(st.S, st.path[i].v)) continue;
      int m = kUnreachable;
      for (size_t j = i; j < st.path.size(); ++j) m = std::max(m, st.path[j].p);
      if (m < 0) throw std::logic_error("cycle carries no priority");
      return terminal(m % 2 == 0 ? Owner::Even : Owner::Odd, OutcomeReason::Cycle);
    }
    if (!in_set(st.S, st.c))
      throw std::logic_error("current vertex escaped the set without adjudication");
    st.pending = -1;
    return eval(st);
  }

  bool eval_profile(EngState& st) {
    int v = st.pending;
    if (ea_) {
      StrategyProfile p = ea_->pick_profile(v, st.S);
      if (p.final_set != st.S)
        throw std::logic_error("agent profile ranges over the wrong set");
      EngState next = st;
      return given_profile(next, p);
    }
    // Odometer over every profile: each entry is unreachable or a priority.
    // Restricting the menu to walk-certifiable values is tempting but wrong:
    // a claim is a commitment, not a measurement, and Even sometimes needs an
    // underclaim no walk attains (its face value enters the path on accept).
    size_t k = st.S.size();
    std::vector<int> idx(k, 0);
    bool acc = false;
    bool first = true;
    while (true) {
      if (!first) {
        size_t i = 0;
        while (i < k && ++idx[i] > static_cast<int>(domain_.size())) {
          idx[i] = 0;
          ++i;
        }
        if (i == k) break;
      }
      first = false;
      StrategyProfile p;
      p.final_set = st.S;
      p.entries.resize(k);
      for (size_t i = 0; i < k; ++i)
        p.entries[i] = idx[i] == 0 ? kUnreachable : domain_[idx[i] - 1];
      EngState next = st;
      bool r = given_profile(next, p);
      acc = acc || r;
      if (prune_ && acc) break;
      if (k == 0) break;
    }
    return acc;
  }

  bool given_profile(EngState& st, const StrategyProfile& P) {
    int v = st.pending;
    std::vector<std::optional<int>> opts;
    if (oa_) {
      auto r = oa_->respond(P, v, st.S);
      if (r && (!in_set(st.S, *r) || P.at(*r) == kUnreachable))
        throw std::logic_error("agent accepted an unacceptable vertex");
      opts.push_back(r);
    } else {
      for (size_t i = 0; i < st.S.size(); ++i)
        if (P.entries[i] != kUnreachable) opts.emplace_back(st.S[i]);
      opts.emplace_back(std::nullopt);
    }
    bool acc = true;
    for (const auto& o : opts) {
      bool r;
      if (o) {
        EngState next = st;
        int src = next.c >= 0 ? next.c : v;
        next.path.push_back({src, std::max(g_.priority(v), P.at(*o)), *o});
        next.c = *o;
        next.pending = -1;
        r = settle(next);
      } else {
        r = reject(st, P);
      }
      acc = acc && r;
      if (prune_ && !acc) break;
    }
    return acc;
  }

  bool reject(const EngState& st, const StrategyProfile& P) {
    // The rejected vertex is really visited: fold its priority into every
    // record, and start the new record with it, so that a later return
    // adjudicates against the exact maximum of the walk since the claim.
    // The path alone can miss it (it may even be empty here).
    int seen = std::max(max_path_priority(st.path), g_.priority(st.pending));
    History h = update_history(st.hist, seen);
    Record rec;
    rec.F = st.S;
    rec.p = g_.priority(st.pending);
    rec.P = P;
    h.push_back(std::move(rec));
    auto choices = policy_.reject_choices(st.S, st.pending, h, st.pstate);
    // No way to continue: Odd cannot reject, so this branch is moot and by
    // itself never costs Even anything.
    if (choices.empty()) return true;
    ++stats.rejects;
    stats.max_reject_depth = std::max(stats.max_reject_depth, ++depth_);
    bool acc = true;
    for (auto& ch : choices) {
      EngState next;
      next.S = std::move(ch.next_set);
      std::sort(next.S.begin(), next.S.end());
      next.hist = std::move(ch.history);
      next.pstate = std::move(ch.policy_state);
      next.rounds = st.rounds;
      if (in_set(next.S, st.pending))
        next.c = st.pending;
      else
        next.pending = st.pending;
      bool r = eval(std::move(next));
      acc = acc && r;
      if (prune_ && !acc) break;
    }
    --depth_;
    return acc;
  }

  static constexpr signed char kInProgress = 2;

  struct BoundInfo {
    long even_max = -1;           // largest allowance known to go to Even
    long odd_min = LONG_MAX;      // smallest allowance known to go to Odd
  };

  const ParityGame& g_;
  const SimPolicy& policy_;
  SimConfig cfg_;
  bool prune_;
  EvenAgent* ea_;
  OddAgent* oa_;
  const std::function<void(const TerminalOutcome&)>* on_terminal_;
  std::vector<int> domain_;
  std::unordered_map<std::vector<int>, signed char, VecHash> memo_;
  std::unordered_map<std::vector<int>, BoundInfo, VecHash> thresh_;
  int depth_ = 0;
};

}  // namespace

Record update_record(const Record& r, int p2) {
  Record out = r;
  out.p = std::max(out.p, p2);
  return out;
}

History update_history(const History& h, int p2) {
  History out;
  out.reserve(h.size());
  for (const auto& r : h) out.push_back(update_record(r, p2));
  return out;
}

Owner winner_of_lasso(const std::vector<PathEntry>& path) {
  if (path.empty()) throw std::logic_error("empty path has no cycle");
  int u = path.back().u;
  for (size_t i = 0; i < path.size(); ++i) {
    if (path[i].v != u) continue;
    int m = kUnreachable;
    for (size_t j = i; j < path.size(); ++j) m = std::max(m, path[j].p);
    if (m < 0) throw std::logic_error("cycle carries no priority");
    return m % 2 == 0 ? Owner::Even : Owner::Odd;
  }
  throw std::logic_error("path does not close a cycle");
}

std::optional<Owner> adjudicate_return(int c, const History& h,
                                       const std::vector<PathEntry>& path) {
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    if (!std::binary_search(it->F.begin(), it->F.end(), c)) continue;
    int claim = it->P.at(c);
    if (claim == kUnreachable) return Owner::Odd;
    int seen = std::max(max_path_priority(path), it->p);
    if (seen < 0) throw std::logic_error("no priority observed before the return");
    return sig_leq(claim, seen) ? Owner::Even : Owner::Odd;
  }
  return std::nullopt;
}

SimResult solve_simulation(const ParityGame& g, const std::vector<int>& S0, int s,
                           const SimPolicy& policy, const SimConfig& cfg) {
  Engine e(g, policy, cfg, true, nullptr, nullptr, nullptr);
  bool even = e.run(S0, s);
  return {even ? Owner::Even : Owner::Odd, e.stats};
}

FollowEven::FollowEven(const ParityGame& g, Strategy sigma)
    : g_(g), sigma_(std::move(sigma)) {
  if (sigma_.owner != Owner::Even)
    throw std::logic_error("even agent needs a strategy for Even");
}

int FollowEven::pick_edge(int c) { return sigma_.choice[c]; }

StrategyProfile FollowEven::pick_profile(int v, const std::vector<int>& S) {
  return profile_of_strategy(g_, sigma_, v, S);
}

FollowOdd::FollowOdd(const ParityGame& g, Strategy tau)
    : g_(g), tau_(std::move(tau)) {
  if (tau_.owner != Owner::Odd)
    throw std::logic_error("odd agent needs a strategy for Odd");
}

int FollowOdd::pick_edge(int c) { return tau_.choice[c]; }

std::optional<int> FollowOdd::respond(const StrategyProfile& offered, int v,
                                      const std::vector<int>& S) {
  StrategyProfile mine = profile_of_strategy(g_, tau_, v, S);
  if (refutes(mine, offered)) return std::nullopt;
  for (size_t i = 0; i < S.size(); ++i) {
    if (offered.entries[i] == kUnreachable || mine.entries[i] == kUnreachable)
      continue;
    if (sig_leq(offered.entries[i], mine.entries[i])) return S[i];
  }
  // The offer is unrefuted yet nowhere matchable; rejecting is the only
  // conservative reply.
  return std::nullopt;
}

SimStats explore_simulation(const ParityGame& g, const std::vector<int>& S0, int s,
                            const SimPolicy& policy, EvenAgent* even, OddAgent* odd,
                            const std::function<void(const TerminalOutcome&)>& on_terminal,
                            const SimConfig& cfg) {
  Engine e(g, policy, cfg, false, even, odd, &on_terminal);
  e.run(S0, s);
  return e.stats;
}

}  // namespace pgtk
