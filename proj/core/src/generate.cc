#include "pgtk/generate.hh"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace pgtk {

namespace {

// std::uniform_int_distribution is implementation-defined; plain modulo keeps
// outputs identical across standard libraries.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int m) { return static_cast<int>(gen() % static_cast<std::uint64_t>(m)); }
};

}  // namespace

GeneratedInstance generate_game(int n, int k, int d, std::uint64_t seed,
                                bool self_loop_repair) {
  if (n < 1 || k < 1 || d < 0) throw std::runtime_error("bad generator parameters");
  Rng rng(seed);
  GeneratedInstance out;
  TreeDecomposition& td = out.decomposition;

  int base = std::min(n, k + 1);
  std::vector<int> gen_bag(n, 0);
  {
    std::vector<int> b(base);
    for (int v = 0; v < base; ++v) b[v] = v;
    td.bags.push_back(b);
  }
  for (int v = base; v < n; ++v) {
    int parent = rng.below(td.num_nodes());
    std::vector<int> pool = td.bags[parent];
    std::vector<int> bag;
    while (static_cast<int>(bag.size()) < k && !pool.empty()) {
      int pick = rng.below(static_cast<int>(pool.size()));
      bag.push_back(pool[pick]);
      pool.erase(pool.begin() + pick);
    }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    gen_bag[v] = td.num_nodes();
    td.edges.emplace_back(parent, td.num_nodes());
    td.bags.push_back(bag);
  }

  std::set<std::pair<int, int>> pairs;
  for (const auto& bag : td.bags)
    for (size_t a = 0; a < bag.size(); ++a)
      for (size_t b = a + 1; b < bag.size(); ++b)
        pairs.emplace(bag[a], bag[b]);

  ParityGame& g = out.game;
  g.verts.resize(n);
  for (const auto& [u, w] : pairs) {
    int kind = rng.below(4);  // none, forward, backward, both
    if (kind == 1 || kind == 3) g.verts[u].succ.push_back(w);
    if (kind == 2 || kind == 3) g.verts[w].succ.push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    g.verts[v].owner = rng.below(2) == 0 ? Owner::Even : Owner::Odd;
    g.verts[v].priority = rng.below(d + 1);
    g.verts[v].name = "v" + std::to_string(v);
  }
  for (int v = 0; v < n; ++v) {
    if (!g.verts[v].succ.empty()) continue;
    const std::vector<int>& bag = td.bags[gen_bag[v]];
    if (self_loop_repair || bag.size() == 1) {
      g.verts[v].succ.push_back(v);
      continue;
    }
    std::vector<int> others;
    for (int u : bag)
      if (u != v) others.push_back(u);
    g.verts[v].succ.push_back(others[rng.below(static_cast<int>(others.size()))]);
  }
  for (int v = 0; v < n; ++v) {
    auto& s = g.verts[v].succ;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return out;
}

}  // namespace pgtk
