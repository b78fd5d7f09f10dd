#include <doctest.h>

#include <random>
#include <set>

#include "pgtk/decomp.hh"
#include "pgtk/generate.hh"
#include "util.hh"

using namespace pgtk;
using test_util::E;
using test_util::O;
using test_util::make_game;

namespace {

// Random tree on n nodes: each node i >= 1 attaches to a random earlier node.
std::vector<std::pair<int, int>> random_tree(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i);
  return edges;
}

std::vector<int> component_sizes(int n, const std::vector<std::pair<int, int>>& edges,
                                 int removed) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> comp(n, -1);
  std::vector<int> sizes;
  for (int s = 0; s < n; ++s) {
    if (s == removed || comp[s] >= 0) continue;
    int size = 0;
    std::vector<int> work{s};
    comp[s] = s;
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      ++size;
      for (int w : adj[v])
        if (w != removed && comp[w] < 0) {
          comp[w] = s;
          work.push_back(w);
        }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace

TEST_CASE("tree decomposition validator") {
  ParityGame g = make_game({{E, 0, {1}}, {O, 1, {2}}, {E, 2, {0}}});
  TreeDecomposition trivial{{{0, 1, 2}}, {}};
  CHECK(validate_tree_decomposition(g, trivial).empty());

  TreeDecomposition hole{{{0, 1}}, {}};  // vertex 2 missing
  CHECK_FALSE(validate_tree_decomposition(g, hole).empty());

  // 0 sits in the two outer bags but not on the connecting middle bag.
  TreeDecomposition broken{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}};
  CHECK_FALSE(validate_tree_decomposition(g, broken).empty());
}

TEST_CASE("dag decomposition validator") {
  ParityGame g = make_game({{E, 0, {1}}, {O, 1, {2}}, {E, 2, {0}}});
  DagDecomposition trivial{{{0, 1, 2}}, {}};
  CHECK(validate_dag_decomposition(g, trivial).empty());

  // Edge 2->0 escapes below node 1 without passing the overlap {1}.
  ParityGame h = make_game({{E, 0, {1}}, {O, 1, {2}}, {E, 2, {0}}});
  DagDecomposition leak{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK_FALSE(validate_dag_decomposition(h, leak).empty());
}

TEST_CASE("orienting a valid tree decomposition yields a valid dag decomposition") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratedInstance inst = generate_game(3 + static_cast<int>(seed % 8), 2, 3, seed);
    REQUIRE(validate_tree_decomposition(inst.game, inst.decomposition).empty());
    DagDecomposition dd = tree_to_dag(inst.decomposition, 0);
    CHECK(validate_dag_decomposition(inst.game, dd).empty());
  }
}

TEST_CASE("width is the maximum bag size") {
  TreeDecomposition td{{{0, 1}, {0, 1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  CHECK(width(td) == 3);
  CHECK_THROWS(width(TreeDecomposition{}));
  TreeDecomposition one{{{0, 1, 2, 3, 4}}, {}};
  CHECK(width(one) == 5);
}

TEST_CASE("direction_tree walks toward the closest bag holding v") {
  // Path A(0)-B(1)-C(2), vertex 9 only in C; vertex 5 in B.
  TreeDecomposition td{{{1, 5}, {1, 5, 9}, {9}}, {{0, 1}, {1, 2}}};
  TreeDecomposition path{{{5}, {5, 7}, {7, 9}}, {{0, 1}, {1, 2}}};
  CHECK(direction_tree(path, 0, 9) == 1);
  CHECK(direction_tree(path, 0, 7) == 1);
  CHECK_THROWS(direction_tree(path, 0, 5));  // v in the bag itself
  (void)td;
}

TEST_CASE("guarded of a chain") {
  // bags {a=0,b=1} -> {b=1,c=2}
  DagDecomposition dd{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK(guarded(dd, 0) == std::vector<int>{2});
  CHECK(guarded(dd, 1).empty());  // sink
}

TEST_CASE("direction_dag picks the lowest qualifying child") {
  DagDecomposition dd{{{0}, {0, 1}, {0, 1}}, {{0, 1}, {0, 2}}};
  CHECK(direction_dag(dd, 0, 1) == 1);
  DagDecomposition single{{{0}, {0, 1}}, {{0, 1}}};
  CHECK(direction_dag(single, 0, 1) == 1);
  CHECK_THROWS(direction_dag(single, 1, 0));  // 0 not guarded below the sink
}

TEST_CASE("rooting computes parents and first bags") {
  // Path A(0)-B(1)-C(2); vertex 7 in bags B and C.
  TreeDecomposition td{{{5}, {5, 7}, {7}}, {{0, 1}, {1, 2}}};
  RootedTreeDecomposition at_b = root_decomposition(td, 1);
  CHECK(at_b.parent[0] == 1);
  CHECK(at_b.parent[2] == 1);
  CHECK(at_b.parent[1] == -1);
  RootedTreeDecomposition at_a = root_decomposition(td, 0);
  CHECK(at_a.first[7] == 1);
  CHECK(at_a.first[5] == 0);
}

TEST_CASE("split_vertex balances trees") {
  CHECK(split_vertex(3, {{0, 1}, {1, 2}}) == 1);
  CHECK(split_vertex(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}) == 0);
  CHECK_THROWS(split_vertex(2, {{0, 1}}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 9;
    auto edges = random_tree(n, rng);
    int s = split_vertex(n, edges);
    for (int size : component_sizes(n, edges, s)) CHECK(3 * size <= 2 * n);
  }
}

TEST_CASE("point_vertex separates three nodes") {
  CHECK(point_vertex(4, {{0, 1}, {0, 2}, {0, 3}}, 1, 2, 3) == 0);
  // Y shape: 0-1, 1-2, 1-3, 3-4; branch node is 1 for {0,2,4}? 4 hangs off 3.
  CHECK(point_vertex(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}, 0, 2, 4) == 1);
  CHECK_THROWS(point_vertex(3, {{0, 1}, {1, 2}}, 0, 1, 2));  // collinear

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 10;
    auto edges = random_tree(n, rng);
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n),
        k = static_cast<int>(rng() % n);
    if (i == j || j == k || i == k) continue;
    int l;
    try {
      l = point_vertex(n, edges, i, j, k);
    } catch (const std::exception&) {
      continue;  // collinear triple
    }
    // Removing l must leave i, j, k pairwise disconnected.
    std::vector<int> comp(n, -1);
    auto sizes = component_sizes(n, edges, l);
    (void)sizes;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    auto reach = [&](int from, int to) {
      std::vector<char> seen(n, 0);
      std::vector<int> work{from};
      seen[from] = 1;
      while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        if (v == to) return true;
        for (int w : adj[v])
          if (w != l && !seen[w]) {
            seen[w] = 1;
            work.push_back(w);
          }
      }
      return false;
    };
    CHECK_FALSE(reach(i, j));
    CHECK_FALSE(reach(j, k));
    CHECK_FALSE(reach(i, k));
  }
}

TEST_CASE("subtree_nodes returns the component toward v") {
  // Path A(0)-B(1)-C(2); vertex 9 lives in C only.
  TreeDecomposition td{{{5}, {5, 7}, {7, 9}}, {{0, 1}, {1, 2}}};
  CHECK(subtree_nodes(td, 0, 9) == std::vector<int>{1, 2});
  CHECK(subtree_nodes(td, 2, 5) == std::vector<int>{0, 1});
}

TEST_CASE("heuristic decompositions validate") {
  // Tree-shaped game: undirected star edges.
  ParityGame star = make_game(
      {{E, 0, {1, 2, 3}}, {O, 1, {0}}, {E, 2, {0}}, {O, 3, {0}}});
  TreeDecomposition td = build_tree_decomposition_heuristic(star);
  CHECK(validate_tree_decomposition(star, td).empty());
  CHECK(width(td) == 2);

  // A 4-clique needs one bag of size 4.
  ParityGame clique = make_game({{E, 0, {1, 2, 3}},
                                 {O, 1, {0, 2, 3}},
                                 {E, 2, {0, 1, 3}},
                                 {O, 3, {0, 1, 2}}});
  TreeDecomposition ctd = build_tree_decomposition_heuristic(clique);
  CHECK(validate_tree_decomposition(clique, ctd).empty());
  CHECK(width(ctd) == 4);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ParityGame g = generate_game(4 + static_cast<int>(seed % 7), 2, 3, 300 + seed).game;
    TreeDecomposition h = build_tree_decomposition_heuristic(g);
    CHECK(validate_tree_decomposition(g, h).empty());
    CHECK(width(h) <= 3);
    TreeDecomposition hf = build_tree_decomposition_heuristic(g, true);
    CHECK(validate_tree_decomposition(g, hf).empty());
  }
}

TEST_CASE("two-edge path counting") {
  TreeDecomposition path{{{0}, {0}, {0}}, {{0, 1}, {1, 2}}};
  CHECK(count_two_edge_paths(root_decomposition(path, 0)) == 1);
  TreeDecomposition star{{{0}, {0}, {0}, {0}}, {{0, 1}, {0, 2}, {0, 3}}};
  CHECK(count_two_edge_paths(root_decomposition(star, 0)) == 0);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 20);
    auto edges = random_tree(n, rng);
    TreeDecomposition td;
    td.bags.assign(n, {0});
    td.edges = edges;
    int root = static_cast<int>(rng() % n);
    CHECK(count_two_edge_paths(root_decomposition(td, root)) <= n);
  }
}

TEST_CASE("decomposition files round-trip") {
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  std::string text = write_decomposition(td, 1);
  DecompositionFile df = parse_decomposition(text);
  CHECK(df.decomposition.bags == td.bags);
  CHECK(df.decomposition.edges == td.edges);
  CHECK(df.root == 1);
  CHECK(write_decomposition(df.decomposition, df.root) == text);
  DecompositionFile no_root = parse_decomposition(write_decomposition(td));
  CHECK_FALSE(no_root.root.has_value());
}
