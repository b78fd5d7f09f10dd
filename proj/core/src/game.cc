#include "pgtk/game.hh"

#include <algorithm>
#include <stdexcept>

namespace pgtk {

int cmp_significance(int a, int b) {
  if (a == b) return 0;
  bool a_odd = a % 2 != 0;
  bool b_odd = b % 2 != 0;
  if (a_odd != b_odd) return a_odd ? -1 : 1;
  if (!a_odd) return a < b ? -1 : 1;
  return a > b ? -1 : 1;
}

std::vector<int> ParityGame::priority_values() const {
  std::vector<int> ps;
  ps.reserve(verts.size());
  for (const auto& vd : verts) ps.push_back(vd.priority);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

int ParityGame::max_priority() const {
  int m = 0;
  for (const auto& vd : verts) m = std::max(m, vd.priority);
  return m;
}

std::vector<std::string> validate_game(const ParityGame& g) {
  std::vector<std::string> out;
  for (int v = 0; v < g.size(); ++v) {
    if (g.succ(v).empty())
      out.push_back("dead end at vertex " + std::to_string(v));
    for (int u : g.succ(v))
      if (u < 0 || u >= g.size())
        out.push_back("dangling edge " + std::to_string(v) + " -> " +
                      std::to_string(u));
    if (g.priority(v) < 0)
      out.push_back("negative priority at vertex " + std::to_string(v));
  }
  return out;
}

bool strategy_valid(const ParityGame& g, const Strategy& s) {
  if (static_cast<int>(s.choice.size()) != g.size()) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (g.owner(v) != s.owner) continue;
    int c = s.choice[v];
    const auto& sc = g.succ(v);
    if (std::find(sc.begin(), sc.end(), c) == sc.end()) return false;
  }
  return true;
}

ParityGame restrict(const ParityGame& g, const Strategy& s) {
  if (!strategy_valid(g, s)) throw std::runtime_error("invalid strategy");
  ParityGame r = g;
  for (int v = 0; v < g.size(); ++v)
    if (g.owner(v) == s.owner) r.verts[v].succ = {s.choice[v]};
  return r;
}

std::pair<Lasso, Owner> play(const ParityGame& g, int v0, const Strategy& sigma,
                             const Strategy& tau) {
  std::vector<int> seen_at(g.size(), -1);
  std::vector<int> walk;
  int c = v0;
  while (seen_at[c] < 0) {
    seen_at[c] = static_cast<int>(walk.size());
    walk.push_back(c);
    c = g.owner(c) == Owner::Even ? sigma.choice[c] : tau.choice[c];
  }
  Lasso l;
  int start = seen_at[c];
  l.prefix.assign(walk.begin(), walk.begin() + start);
  l.cycle.assign(walk.begin() + start, walk.end());
  int m = 0;
  for (int v : l.cycle) m = std::max(m, g.priority(v));
  return {l, m % 2 == 0 ? Owner::Even : Owner::Odd};
}

}  // namespace pgtk
