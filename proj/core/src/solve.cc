#include "pgtk/solve.hh"

#include <algorithm>
#include <stdexcept>

namespace pgtk {

namespace {

// Attractor of `target` for player p inside `alive`. Records a pulling choice
// for p's vertices added outside the target set.
std::vector<bool> attract(const ParityGame& g, const std::vector<bool>& alive,
                          Owner p, const std::vector<bool>& target,
                          std::vector<int>& choice) {
  int n = g.size();
  std::vector<std::vector<int>> preds(n);
  std::vector<int> cnt(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    auto sc = g.succ(v);
    std::sort(sc.begin(), sc.end());
    sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
    for (int u : sc)
      if (alive[u]) {
        preds[u].push_back(v);
        ++cnt[v];
      }
  }
  std::vector<bool> in(n, false);
  std::vector<int> work;
  for (int v = 0; v < n; ++v)
    if (alive[v] && target[v]) {
      in[v] = true;
      work.push_back(v);
    }
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    for (int v : preds[u]) {
      if (in[v]) continue;
      if (g.owner(v) == p) {
        in[v] = true;
        choice[v] = u;
        work.push_back(v);
      } else if (--cnt[v] == 0) {
        in[v] = true;
        work.push_back(v);
      }
    }
  }
  return in;
}

struct SubResult {
  std::vector<bool> even;      // winner mask over alive vertices
  std::vector<int> sigma, tau; // witness choices, -1 where unset
};

SubResult zsolve(const ParityGame& g, const std::vector<bool>& alive) {
  int n = g.size();
  SubResult res{std::vector<bool>(n, false), std::vector<int>(n, -1),
                std::vector<int>(n, -1)};
  int d = -1;
  for (int v = 0; v < n; ++v)
    if (alive[v]) d = std::max(d, g.priority(v));
  if (d < 0) return res;

  Owner p = d % 2 == 0 ? Owner::Even : Owner::Odd;
  std::vector<bool> top(n, false);
  for (int v = 0; v < n; ++v)
    if (alive[v] && g.priority(v) == d) top[v] = true;

  std::vector<int> pull(n, -1);
  std::vector<bool> a = attract(g, alive, p, top, pull);

  std::vector<bool> rest = alive;
  for (int v = 0; v < n; ++v)
    if (a[v]) rest[v] = false;
  SubResult sub = zsolve(g, rest);

  bool opp_empty = true;
  for (int v = 0; v < n; ++v)
    if (rest[v] && (sub.even[v] != (p == Owner::Even))) opp_empty = false;

  if (opp_empty) {
    auto& mine = p == Owner::Even ? res.sigma : res.tau;
    const auto& sub_mine = p == Owner::Even ? sub.sigma : sub.tau;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      res.even[v] = p == Owner::Even;
      if (g.owner(v) != p) continue;
      if (rest[v]) {
        mine[v] = sub_mine[v];
      } else if (top[v]) {
        for (int u : g.succ(v))
          if (alive[u]) {
            mine[v] = u;
            break;
          }
      } else {
        mine[v] = pull[v];
      }
    }
    return res;
  }

  Owner q = opponent(p);
  std::vector<bool> wq(n, false);
  for (int v = 0; v < n; ++v)
    if (rest[v] && (sub.even[v] == (q == Owner::Even))) wq[v] = true;
  std::vector<int> pull_q(n, -1);
  std::vector<bool> b = attract(g, alive, q, wq, pull_q);

  std::vector<bool> rest2 = alive;
  for (int v = 0; v < n; ++v)
    if (b[v]) rest2[v] = false;
  SubResult sub2 = zsolve(g, rest2);

  auto& qs = q == Owner::Even ? res.sigma : res.tau;
  const auto& sub_qs = q == Owner::Even ? sub.sigma : sub.tau;
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (b[v]) {
      res.even[v] = q == Owner::Even;
      if (g.owner(v) == q) qs[v] = wq[v] ? sub_qs[v] : pull_q[v];
    } else {
      res.even[v] = sub2.even[v];
      if (sub2.sigma[v] >= 0) res.sigma[v] = sub2.sigma[v];
      if (sub2.tau[v] >= 0) res.tau[v] = sub2.tau[v];
    }
  }
  return res;
}

long long outdeg_product(const ParityGame& g, Owner p, long long cap) {
  long long prod = 1;
  for (int v = 0; v < g.size(); ++v) {
    if (g.owner(v) != p) continue;
    prod *= static_cast<long long>(g.succ(v).size());
    if (prod > cap) return cap + 1;
  }
  return prod;
}

}  // namespace

WinningPartition solve_zielonka(const ParityGame& g) {
  auto violations = validate_game(g);
  if (!violations.empty())
    throw std::runtime_error("invalid game: " + violations.front());
  SubResult r = zsolve(g, std::vector<bool>(g.size(), true));
  WinningPartition wp;
  wp.even_wins.assign(r.even.begin(), r.even.end());
  wp.sigma = Strategy{Owner::Even, r.sigma};
  wp.tau = Strategy{Owner::Odd, r.tau};
  for (int v = 0; v < g.size(); ++v) {
    if (g.owner(v) == Owner::Even && wp.sigma.choice[v] < 0)
      wp.sigma.choice[v] = g.succ(v).front();
    if (g.owner(v) == Owner::Odd && wp.tau.choice[v] < 0)
      wp.tau.choice[v] = g.succ(v).front();
  }
  return wp;
}

bool adversary_cycle_reachable(const ParityGame& g, int s, Owner cycle_parity) {
  int n = g.size();
  std::vector<bool> reach(n, false);
  std::vector<int> work{s};
  reach[s] = true;
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (int u : g.succ(v))
      if (!reach[u]) {
        reach[u] = true;
        work.push_back(u);
      }
  }
  int want = cycle_parity == Owner::Even ? 0 : 1;
  for (int w = 0; w < n; ++w) {
    if (!reach[w] || g.priority(w) % 2 != want) continue;
    int cap = g.priority(w);
    // Cycle through w using only priorities <= cap has maximum exactly cap.
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int u : g.succ(w))
      if (g.priority(u) <= cap && !seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    bool closes = seen[w];
    while (!closes && !stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.succ(v)) {
        if (g.priority(u) > cap || seen[u]) continue;
        seen[u] = true;
        stack.push_back(u);
        if (u == w) {
          closes = true;
          break;
        }
      }
    }
    if (closes) return true;
  }
  return false;
}

bool strategy_wins_from(const ParityGame& g, const Strategy& s, int v) {
  ParityGame r = restrict(g, s);
  return !adversary_cycle_reachable(r, v, opponent(s.owner));
}

Owner solve_bruteforce(const ParityGame& g, int s) {
  constexpr long long kCap = 1'000'000;
  long long pe = outdeg_product(g, Owner::Even, kCap);
  long long po = outdeg_product(g, Owner::Odd, kCap);
  Owner side = pe <= po ? Owner::Even : Owner::Odd;
  if (std::min(pe, po) > kCap)
    throw std::runtime_error("instance too large for strategy enumeration");

  std::vector<int> mine;
  for (int v = 0; v < g.size(); ++v)
    if (g.owner(v) == side) mine.push_back(v);

  Strategy st{side, std::vector<int>(g.size(), -1)};
  std::vector<size_t> idx(mine.size(), 0);
  while (true) {
    for (size_t i = 0; i < mine.size(); ++i)
      st.choice[mine[i]] = g.succ(mine[i])[idx[i]];
    if (strategy_wins_from(g, st, s)) return side;
    size_t i = 0;
    for (; i < mine.size(); ++i) {
      if (++idx[i] < g.succ(mine[i]).size()) break;
      idx[i] = 0;
    }
    if (i == mine.size()) break;
  }
  return opponent(side);
}

}  // namespace pgtk
