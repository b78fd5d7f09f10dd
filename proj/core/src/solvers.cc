#include "pgtk/solvers.hh"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pgtk {

namespace {

bool in_set(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

long round_bound(int k, int n) {
  double logn = n <= 1 ? 0.0 : std::log(static_cast<double>(n)) / std::log(1.5);
  return static_cast<long>(std::ceil((k + 1) * (2.0 * logn + 2.0)));
}

ParityGame swap_players(const ParityGame& g) {
  ParityGame out = g;
  for (auto& vd : out.verts) {
    vd.owner = opponent(vd.owner);
    vd.priority += 1;
  }
  return out;
}

std::vector<RejectChoice> DagPolicy::reject_choices(const std::vector<int>&, int v,
                                                    const History& appended,
                                                    const std::vector<int>& state) const {
  int j = direction_dag(dd_, state.at(0), v);
  RejectChoice rc;
  rc.history = {appended.back()};
  rc.next_set = dd_.bags[j];
  rc.policy_state = {j};
  return {rc};
}

int ModifiedGame::node_of(int w, const RootedTreeDecomposition& rtd) const {
  if (w < original_n) return rtd.first[w];
  return copy_node[w - original_n];
}

ModifiedGame modify_game(const ParityGame& g, const RootedTreeDecomposition& rtd) {
  int n = g.size();
  const TreeDecomposition& td = rtd.base;
  int I = td.num_nodes();

  // good[v][i]: some bag at or below i holds both v and a successor of v, so
  // a copy of v at i can still reach a real move.
  std::vector<std::vector<char>> good(n, std::vector<char>(I, 0));
  std::vector<int> order;  // nodes, parents before children
  order.push_back(rtd.root);
  for (size_t q = 0; q < order.size(); ++q)
    for (int c : rtd.children[order[q]]) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int i = *it;
    for (int v : td.bags[i]) {
      char ok = 0;
      for (int u : g.succ(v))
        if (td.bag_contains(i, u)) {
          ok = 1;
          break;
        }
      for (int c : rtd.children[i])
        if (good[v][c]) ok = 1;
      good[v][i] = ok;
    }
  }

  ModifiedGame mg;
  mg.original_n = n;
  mg.game.verts.resize(n);
  for (int v = 0; v < n; ++v) {
    mg.game.verts[v].owner = g.owner(v);
    mg.game.verts[v].priority = g.priority(v);
    mg.game.verts[v].name = g.verts[v].name;
  }
  std::vector<std::vector<int>> copy_id(n, std::vector<int>(I, -1));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < I; ++i) {
      if (i == rtd.first[v] || !td.bag_contains(i, v) || !good[v][i]) continue;
      copy_id[v][i] = static_cast<int>(mg.game.verts.size());
      ParityGame::VertexData vd;
      vd.owner = g.owner(v);
      vd.priority = g.priority(v);
      if (!g.verts[v].name.empty())
        vd.name = g.verts[v].name + "_" + std::to_string(i);
      mg.game.verts.push_back(vd);
      mg.copy_vertex.push_back(v);
      mg.copy_node.push_back(i);
    }

  for (int v = 0; v < n; ++v) {
    std::vector<int> succ;
    int f = rtd.first[v];
    for (int u : g.succ(v))
      if (td.bag_contains(f, u)) succ.push_back(u);
    for (int c : rtd.children[f])
      if (copy_id[v][c] >= 0) succ.push_back(copy_id[v][c]);
    mg.game.verts[v].succ = sorted_unique(std::move(succ));
  }
  for (size_t t = 0; t < mg.copy_vertex.size(); ++t) {
    int v = mg.copy_vertex[t];
    int i = mg.copy_node[t];
    std::vector<int> succ;
    for (int u : g.succ(v))
      if (td.bag_contains(i, u)) succ.push_back(u);
    for (int c : rtd.children[i])
      if (copy_id[v][c] >= 0) succ.push_back(copy_id[v][c]);
    mg.game.verts[n + t].succ = sorted_unique(std::move(succ));
  }
  return mg;
}

std::vector<RejectChoice> TwPolicy::reject_choices(const std::vector<int>&, int v,
                                                   const History& appended,
                                                   const std::vector<int>& state) const {
  RejectChoice rc;
  rc.history = {appended.back()};
  int j = mg_.node_of(v, rtd_);
  if (in_set(state, j)) {
    // A revisit would break the descent; give up locality and finish the
    // play on the full vertex set.
    rc.next_set.resize(mg_.game.size());
    for (int w = 0; w < mg_.game.size(); ++w) rc.next_set[w] = w;
    rc.policy_state = state;
    return {rc};
  }
  rc.next_set = rtd_.base.bags[j];
  rc.next_set.push_back(v);
  rc.next_set = sorted_unique(std::move(rc.next_set));
  rc.policy_state = state;
  rc.policy_state.push_back(j);
  std::sort(rc.policy_state.begin(), rc.policy_state.end());
  return {rc};
}

NcUniversalPolicy::NcUniversalPolicy(int k, int n) : k_(k), n_(n) {
  if (n > 20)
    throw std::runtime_error("universal set selection is only feasible for small games");
}

std::vector<RejectChoice> NcUniversalPolicy::reject_choices(
    const std::vector<int>&, int v, const History& appended,
    const std::vector<int>& state) const {
  if (appended.size() > 4)
    throw std::logic_error("more than four records reached a rejection");
  std::vector<History> histories;
  int m = static_cast<int>(appended.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
    History h;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) h.push_back(appended[i]);
    histories.push_back(std::move(h));
  }
  std::vector<std::vector<int>> sets;
  for (long mask = 0; mask < (1L << n_); ++mask) {
    if (!(mask & (1L << v))) continue;
    if (__builtin_popcountl(static_cast<unsigned long>(mask)) > k_) continue;
    std::vector<int> s;
    for (int w = 0; w < n_; ++w)
      if (mask & (1L << w)) s.push_back(w);
    sets.push_back(std::move(s));
  }
  std::vector<RejectChoice> out;
  out.reserve(histories.size() * sets.size());
  for (const auto& h : histories)
    for (const auto& s : sets) out.push_back({h, s, state});
  return out;
}

SliceReducePolicy::SliceReducePolicy(const TreeDecomposition& td)
    : td_(td), adj_(td.adjacency()) {}

std::vector<RejectChoice> SliceReducePolicy::reject_choices(
    const std::vector<int>&, int v, const History& appended,
    const std::vector<int>& state) const {
  int I = td_.num_nodes();
  std::vector<int> live;
  std::vector<int> kept_idx;
  if (state.at(0) == 0) {
    // First rejection: every record is dropped, the live set is the whole
    // tree.
    live.resize(I);
    for (int i = 0; i < I; ++i) live[i] = i;
  } else {
    int cur = state.at(1);
    int m = state.at(2);
    if (static_cast<int>(appended.size()) != m + 1)
      throw std::logic_error("record count fell out of step with the policy");
    std::vector<int> nodes(state.begin() + 3, state.begin() + 3 + m);
    nodes.push_back(cur);  // the node of the newly rejected record
    std::vector<int> old_live(state.begin() + 3 + m, state.end());
    std::vector<int> towards = subtree_nodes(td_, cur, v);
    std::set_intersection(old_live.begin(), old_live.end(), towards.begin(),
                          towards.end(), std::back_inserter(live));
    if (live.empty()) throw std::logic_error("live node set became empty");
    for (int t = 0; t <= m; ++t) {
      bool borders = false;
      for (int j : adj_[nodes[t]])
        if (in_set(live, j)) {
          borders = true;
          break;
        }
      if (borders) kept_idx.push_back(t);
    }
    if (kept_idx.size() > 3)
      throw std::logic_error("more than three records border the live set");
    // Every edge leaving the live set must be blocked by a kept record.
    for (const auto& [x, y] : td_.edges) {
      int outside;
      if (in_set(live, x) && !in_set(live, y))
        outside = y;
      else if (in_set(live, y) && !in_set(live, x))
        outside = x;
      else
        continue;
      bool blocked = false;
      for (int t : kept_idx)
        if (nodes[t] == outside) blocked = true;
      if (!blocked) throw std::logic_error("an edge leaves the live set unrecorded");
    }
    std::vector<int> kept_nodes;
    for (int t : kept_idx) kept_nodes.push_back(nodes[t]);
    int target;
    if (kept_idx.size() == 3) {
      target = point_vertex(I, td_.edges, kept_nodes[0], kept_nodes[1], kept_nodes[2]);
    } else if (live.size() >= 3) {
      std::vector<int> pos(I, -1);
      for (size_t q = 0; q < live.size(); ++q) pos[live[q]] = static_cast<int>(q);
      std::vector<std::pair<int, int>> sub;
      for (const auto& [x, y] : td_.edges)
        if (pos[x] >= 0 && pos[y] >= 0) sub.emplace_back(pos[x], pos[y]);
      target = live[split_vertex(static_cast<int>(live.size()), sub)];
    } else {
      target = live[0];
    }
    RejectChoice rc;
    for (int t : kept_idx) rc.history.push_back(appended[t]);
    rc.next_set = td_.bags[target];
    rc.policy_state = {1, target, static_cast<int>(kept_nodes.size())};
    rc.policy_state.insert(rc.policy_state.end(), kept_nodes.begin(), kept_nodes.end());
    rc.policy_state.insert(rc.policy_state.end(), live.begin(), live.end());
    return {rc};
  }
  int target = I >= 3 ? split_vertex(td_) : 0;
  RejectChoice rc;
  rc.next_set = td_.bags[target];
  rc.policy_state = {1, target, 0};
  rc.policy_state.insert(rc.policy_state.end(), live.begin(), live.end());
  return {rc};
}

SolveReport solve_dagwidth(const ParityGame& g, const DagDecomposition& dd, int s,
                           const SimConfig& cfg) {
  std::vector<char> has_in(dd.num_nodes(), 0);
  for (const auto& [i, j] : dd.edges) has_in[j] = 1;
  int start = -1;
  for (int i = 0; i < dd.num_nodes() && start < 0; ++i) {
    if (has_in[i]) continue;
    if (dd.bag_contains(i, s) || in_set(guarded(dd, i), s)) start = i;
  }
  if (start < 0) throw std::runtime_error("no source bag covers the start vertex");
  DagPolicy pol(dd, start);
  SimResult r = solve_simulation(g, dd.bags[start], s, pol, cfg);
  return {r.winner, r.stats};
}

SolveReport solve_treewidth(const ParityGame& g, const TreeDecomposition& td, int s,
                            const SimConfig& cfg) {
  int root = -1;
  for (int i = 0; i < td.num_nodes() && root < 0; ++i)
    if (td.bag_contains(i, s)) root = i;
  if (root < 0) throw std::runtime_error("no bag contains the start vertex");
  RootedTreeDecomposition rtd = root_decomposition(td, root);
  ModifiedGame mg = modify_game(g, rtd);
  TwPolicy pol(mg, rtd);
  SimResult r = solve_simulation(mg.game, td.bags[root], s, pol, cfg);
  return {r.winner, r.stats};
}

NcReport solve_nc(const ParityGame& g, int k, int s, std::optional<long> rounds,
                  long budget) {
  SimConfig cfg;
  cfg.round_bound = rounds ? *rounds : round_bound(k, g.size());
  cfg.state_budget = budget;
  NcUniversalPolicy pol(k, g.size());
  NcReport rep;
  SimResult main = solve_simulation(g, {s}, s, pol, cfg);
  rep.stats_main = main.stats;
  // A decisive Odd answer is always the true winner, so the swapped game only
  // matters for telling a real Even win apart from a width refusal.
  if (main.winner == Owner::Odd) {
    rep.verdict = NcVerdict::OddWins;
    return rep;
  }
  SimResult swapped = solve_simulation(swap_players(g), {s}, s, pol, cfg);
  rep.stats_swapped = swapped.stats;
  rep.verdict = swapped.winner == Owner::Odd ? NcVerdict::EvenWins
                                             : NcVerdict::TreewidthExceeded;
  return rep;
}

NcReport solve_nc_scripted(const ParityGame& g, const TreeDecomposition& td, int s,
                           std::optional<long> rounds, long budget) {
  SimConfig cfg;
  cfg.round_bound = rounds ? *rounds : round_bound(width(td), g.size());
  cfg.state_budget = budget;
  SliceReducePolicy pol(td);
  NcReport rep;
  SimResult main = solve_simulation(g, {s}, s, pol, cfg);
  rep.stats_main = main.stats;
  if (main.winner == Owner::Odd) {
    rep.verdict = NcVerdict::OddWins;
    return rep;
  }
  SimResult swapped = solve_simulation(swap_players(g), {s}, s, pol, cfg);
  rep.stats_swapped = swapped.stats;
  rep.verdict = swapped.winner == Owner::Odd ? NcVerdict::EvenWins
                                             : NcVerdict::TreewidthExceeded;
  return rep;
}

}  // namespace pgtk
