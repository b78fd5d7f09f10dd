#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgtk/game.hh"

namespace pgtk {

// Tree of bags covering the game's vertices and edges, with the connectivity
// property: for each vertex, the nodes whose bags contain it form a subtree.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;        // sorted vertex lists
  std::vector<std::pair<int, int>> edges;    // unordered node pairs

  int num_nodes() const { return static_cast<int>(bags.size()); }
  std::vector<std::vector<int>> adjacency() const;
  bool bag_contains(int node, int v) const;
};

struct RootedTreeDecomposition {
  TreeDecomposition base;
  int root = 0;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> first;                  // per vertex: bag node closest to root
};

// Directed acyclic arrangement of bags; every edge (i,j) requires the overlap
// of the two bags to guard everything reachable below j.
struct DagDecomposition {
  std::vector<std::vector<int>> bags;      // sorted vertex lists
  std::vector<std::pair<int, int>> edges;  // ordered node pairs

  int num_nodes() const { return static_cast<int>(bags.size()); }
  std::vector<std::vector<int>> out_edges() const;
  bool bag_contains(int node, int v) const;
};

std::vector<std::string> validate_tree_decomposition(const ParityGame& g,
                                                     const TreeDecomposition& td);
std::vector<std::string> validate_dag_decomposition(const ParityGame& g,
                                                    const DagDecomposition& dd);

// Maximum bag size. Deliberately not max-1: bag size k+1 corresponds to the
// classical treewidth k. Throws on a decomposition without nodes.
int width(const TreeDecomposition& td);
int width(const DagDecomposition& dd);

// The neighbor of i on the unique path to the closest node whose bag
// contains v. Requires v outside the bag of i.
int direction_tree(const TreeDecomposition& td, int i, int v);

// Vertices reachable strictly below i: the union of all bags at or below a
// successor of i, minus the bag of i.
std::vector<int> guarded(const DagDecomposition& dd, int i);

// Some successor j of i with v in its bag or its guarded set; lowest node id
// wins ties. Requires v in guarded(i).
int direction_dag(const DagDecomposition& dd, int i, int v);

RootedTreeDecomposition root_decomposition(const TreeDecomposition& td, int root);

// Orients all tree edges away from the root, yielding a DAG decomposition.
DagDecomposition tree_to_dag(const TreeDecomposition& td, int root);

// A node whose removal leaves components of at most two thirds of the nodes.
// Works on bare tree topology; requires at least 3 nodes.
int split_vertex(int num_nodes, const std::vector<std::pair<int, int>>& edges);
int split_vertex(const TreeDecomposition& td);

// The unique node whose removal pairwise disconnects i, j and k. Throws when
// the three nodes lie on a common path.
int point_vertex(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                 int i, int j, int k);

// The component of the tree minus i that contains direction_tree(td, i, v).
std::vector<int> subtree_nodes(const TreeDecomposition& td, int i, int v);

// Elimination-ordering heuristic; min-degree by default, min-fill on request.
// The result always validates; bags contained in a neighboring bag are merged
// so that the number of nodes stays at most the number of vertices.
TreeDecomposition build_tree_decomposition_heuristic(const ParityGame& g,
                                                     bool min_fill = false);

// Number of directed paths with two edges when all edges point away from the
// root. Always at most the number of nodes.
int count_two_edge_paths(const RootedTreeDecomposition& rtd);

// Decomposition text format:
//   td <node-count> <width>;
//   b <node-id> <v>(,<v>)*;      one per bag
//   e <i> <j>;                   one per edge
//   rooted <node-id>;            optional orientation marker
struct DecompositionFile {
  TreeDecomposition decomposition;
  std::optional<int> root;
};

DecompositionFile parse_decomposition(const std::string& text);
std::string write_decomposition(const TreeDecomposition& td,
                                std::optional<int> root = std::nullopt);

}  // namespace pgtk
