#include "pgtk/profiles.hh"

#include <algorithm>
#include <stdexcept>

namespace pgtk {

namespace {

bool in_set(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void check_endpoints(const std::vector<int>& F, int s, int u) {
  if (in_set(F, s)) throw std::runtime_error("start vertex must lie outside F");
  if (u >= 0 && !in_set(F, u)) throw std::runtime_error("target must lie in F");
}

}  // namespace

int StrategyProfile::at(int u) const {
  auto it = std::lower_bound(final_set.begin(), final_set.end(), u);
  if (it == final_set.end() || *it != u)
    throw std::runtime_error("vertex not in the profile's final set");
  return entries[it - final_set.begin()];
}

bool StrategyProfile::all_unreachable() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](int e) { return e == kUnreachable; });
}

std::string render_profile(const StrategyProfile& p) {
  std::string out = "{";
  for (size_t i = 0; i < p.final_set.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p.final_set[i]) + ": ";
    out += p.entries[i] == kUnreachable ? "-" : std::to_string(p.entries[i]);
  }
  return out + "}";
}

std::set<int> achievable_maxima(const ParityGame& g, int s,
                                const std::vector<int>& F, int u) {
  check_endpoints(F, s, u);
  std::set<int> out;
  for (int p : g.priority_values()) {
    if (g.priority(s) > p || g.priority(u) > p) continue;
    // Forward reach from s: never expand out of F-vertices (they can only be
    // walk endpoints) nor out of vertices above the cap.
    int n = g.size();
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::vector<int> work{s};
    fwd[s] = true;
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      if (v != s && in_set(F, v)) continue;
      for (int w : g.succ(v))
        if (g.priority(w) <= p && !fwd[w]) {
          fwd[w] = true;
          work.push_back(w);
        }
    }
    // Backward reach to u with interiors outside F.
    std::vector<std::vector<int>> preds(n);
    for (int v = 0; v < n; ++v)
      if (g.priority(v) <= p)
        for (int w : g.succ(v))
          if (g.priority(w) <= p) preds[w].push_back(v);
    work.push_back(u);
    bwd[u] = true;
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      if (v != u && in_set(F, v)) continue;  // v would be an interior vertex
      for (int w : preds[v])
        if (!bwd[w]) {
          bwd[w] = true;
          work.push_back(w);
        }
    }
    for (int w = 0; w < n; ++w) {
      if (g.priority(w) != p || !fwd[w] || !bwd[w]) continue;
      if (w != u && in_set(F, w)) continue;  // w interior but final
      out.insert(p);
      break;
    }
  }
  return out;
}

std::set<int> oracle_enumerate_walks(const ParityGame& g, int s,
                                     const std::vector<int>& F, int u,
                                     int max_len) {
  check_endpoints(F, s, u);
  std::set<int> out;
  struct Item {
    int v;
    int len;
    int maxp;
  };
  // Depth-first over (vertex, length, running max); bounded by max_len.
  std::vector<Item> work{{s, 0, g.priority(s)}};
  std::set<std::tuple<int, int, int>> seen;
  while (!work.empty()) {
    auto [v, len, maxp] = work.back();
    work.pop_back();
    if (len >= max_len) continue;
    if (v != s && in_set(F, v)) continue;  // would make an F-vertex interior
    for (int w : g.succ(v)) {
      int m = std::max(maxp, g.priority(w));
      if (w == u) out.insert(m);
      auto key = std::make_tuple(w, len + 1, m);
      if (seen.insert(key).second) work.push_back({w, len + 1, m});
    }
  }
  return out;
}

StrategyProfile profile_of_strategy(const ParityGame& g, const Strategy& chi,
                                    int s, const std::vector<int>& F) {
  ParityGame r = restrict(g, chi);
  StrategyProfile p;
  p.final_set = F;
  std::sort(p.final_set.begin(), p.final_set.end());
  if (in_set(p.final_set, s))
    throw std::runtime_error("start vertex must lie outside F");
  for (int u : p.final_set) {
    std::set<int> maxima = achievable_maxima(r, s, p.final_set, u);
    if (maxima.empty()) {
      p.entries.push_back(kUnreachable);
      continue;
    }
    int best = *maxima.begin();
    for (int m : maxima) {
      bool better = chi.owner == Owner::Even ? sig_less(m, best) : sig_less(best, m);
      if (better) best = m;
    }
    p.entries.push_back(best);
  }
  return p;
}

bool refutes(const StrategyProfile& tau_profile, const StrategyProfile& P) {
  if (tau_profile.final_set != P.final_set)
    throw std::runtime_error("profiles disagree on the final set");
  if (P.all_unreachable()) return true;
  for (size_t i = 0; i < P.final_set.size(); ++i) {
    int truth = tau_profile.entries[i];
    int claim = P.entries[i];
    bool dishonest_hole = truth != kUnreachable && claim == kUnreachable;
    bool overclaim = truth != kUnreachable && claim != kUnreachable &&
                     sig_less(truth, claim);
    if (!dishonest_hole && !overclaim) return false;
  }
  return true;
}

}  // namespace pgtk
