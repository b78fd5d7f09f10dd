#include "pgtk/decomp.hh"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pgtk {

namespace {

std::vector<std::vector<int>> adjacency_of(int n,
                                           const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> bfs_dist(int n, const std::vector<std::vector<int>>& adj, int from) {
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  return dist;
}

bool sorted_contains(const std::vector<int>& xs, int v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

}  // namespace

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  return adjacency_of(num_nodes(), edges);
}

bool TreeDecomposition::bag_contains(int node, int v) const {
  return sorted_contains(bags[node], v);
}

std::vector<std::vector<int>> DagDecomposition::out_edges() const {
  std::vector<std::vector<int>> out(num_nodes());
  for (auto [a, b] : edges) out[a].push_back(b);
  for (auto& o : out) std::sort(o.begin(), o.end());
  return out;
}

bool DagDecomposition::bag_contains(int node, int v) const {
  return sorted_contains(bags[node], v);
}

std::vector<std::string> validate_tree_decomposition(const ParityGame& g,
                                                     const TreeDecomposition& td) {
  std::vector<std::string> out;
  int n = td.num_nodes();
  if (n == 0) {
    out.push_back("decomposition has no nodes");
    return out;
  }
  for (auto [a, b] : td.edges)
    if (a < 0 || a >= n || b < 0 || b >= n) {
      out.push_back("edge references an unknown node");
      return out;
    }
  if (static_cast<int>(td.edges.size()) != n - 1)
    out.push_back("node/edge counts do not form a tree");
  auto dist = bfs_dist(n, td.adjacency(), 0);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end())
    out.push_back("decomposition tree is disconnected");
  if (!out.empty()) return out;

  std::vector<bool> covered(g.size(), false);
  for (const auto& bag : td.bags)
    for (int v : bag) {
      if (v < 0 || v >= g.size()) out.push_back("bag contains an unknown vertex");
      else covered[v] = true;
    }
  for (int v = 0; v < g.size(); ++v)
    if (!covered[v])
      out.push_back("vertex " + std::to_string(v) + " is in no bag");

  for (int v = 0; v < g.size(); ++v)
    for (int u : g.succ(v)) {
      bool inside = false;
      for (int i = 0; i < n && !inside; ++i)
        inside = td.bag_contains(i, v) && td.bag_contains(i, u);
      if (!inside)
        out.push_back("edge " + std::to_string(v) + " -> " + std::to_string(u) +
                      " is in no bag");
    }

  auto adj = td.adjacency();
  for (int v = 0; v < g.size(); ++v) {
    int start = -1, total = 0;
    for (int i = 0; i < n; ++i)
      if (td.bag_contains(i, v)) {
        ++total;
        start = i;
      }
    if (start < 0) continue;
    std::vector<bool> seen(n, false);
    std::vector<int> work{start};
    seen[start] = true;
    int reached = 1;
    while (!work.empty()) {
      int i = work.back();
      work.pop_back();
      for (int j : adj[i])
        if (!seen[j] && td.bag_contains(j, v)) {
          seen[j] = true;
          ++reached;
          work.push_back(j);
        }
    }
    if (reached != total)
      out.push_back("bags containing vertex " + std::to_string(v) +
                    " are not connected");
  }
  return out;
}

std::vector<std::string> validate_dag_decomposition(const ParityGame& g,
                                                    const DagDecomposition& dd) {
  std::vector<std::string> out;
  int n = dd.num_nodes();
  if (n == 0) {
    out.push_back("decomposition has no nodes");
    return out;
  }
  for (auto [a, b] : dd.edges)
    if (a < 0 || a >= n || b < 0 || b >= n) {
      out.push_back("edge references an unknown node");
      return out;
    }

  // Reachability closure; also detects cycles.
  auto succ = dd.out_edges();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  std::vector<int> state(n, 0);
  bool cyclic = false;
  std::vector<int> order;
  std::function<void(int)> dfs = [&](int i) {
    state[i] = 1;
    for (int j : succ[i]) {
      if (state[j] == 1) cyclic = true;
      else if (state[j] == 0) dfs(j);
    }
    state[i] = 2;
    order.push_back(i);
  };
  for (int i = 0; i < n; ++i)
    if (state[i] == 0) dfs(i);
  if (cyclic) {
    out.push_back("decomposition graph has a cycle");
    return out;
  }
  for (int i : order) {
    below[i][i] = true;
    for (int j : succ[i])
      for (int k = 0; k < n; ++k)
        if (below[j][k]) below[i][k] = true;
  }

  std::vector<bool> covered(g.size(), false);
  for (const auto& bag : dd.bags)
    for (int v : bag) {
      if (v < 0 || v >= g.size()) out.push_back("bag contains an unknown vertex");
      else covered[v] = true;
    }
  for (int v = 0; v < g.size(); ++v)
    if (!covered[v])
      out.push_back("vertex " + std::to_string(v) + " is in no bag");

  // Guard condition per decomposition edge.
  for (auto [i, j] : dd.edges) {
    std::vector<bool> under(g.size(), false);
    for (int k = 0; k < n; ++k)
      if (below[j][k])
        for (int v : dd.bags[k]) under[v] = true;
    std::vector<bool> in_u(g.size(), false);
    for (int v = 0; v < g.size(); ++v)
      in_u[v] = under[v] && !dd.bag_contains(i, v);
    for (int v = 0; v < g.size(); ++v) {
      if (!in_u[v]) continue;
      for (int u : g.succ(v)) {
        bool in_guard = dd.bag_contains(i, u) && dd.bag_contains(j, u);
        if (!in_u[u] && !in_guard) {
          out.push_back("edge " + std::to_string(v) + " -> " + std::to_string(u) +
                        " escapes the guard of decomposition edge (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }

  // Overlap of comparable nodes must appear in everything between them.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      std::vector<int> common;
      std::set_intersection(dd.bags[i].begin(), dd.bags[i].end(),
                            dd.bags[j].begin(), dd.bags[j].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      for (int k = 0; k < n; ++k) {
        if (!below[i][k] || !below[k][j]) continue;
        for (int v : common)
          if (!dd.bag_contains(k, v))
            out.push_back("vertex " + std::to_string(v) +
                          " missing from node " + std::to_string(k) +
                          " between " + std::to_string(i) + " and " +
                          std::to_string(j));
      }
    }
  return out;
}

int width(const TreeDecomposition& td) {
  if (td.num_nodes() == 0) throw std::runtime_error("decomposition has no nodes");
  size_t w = 0;
  for (const auto& b : td.bags) w = std::max(w, b.size());
  return static_cast<int>(w);
}

int width(const DagDecomposition& dd) {
  if (dd.num_nodes() == 0) throw std::runtime_error("decomposition has no nodes");
  size_t w = 0;
  for (const auto& b : dd.bags) w = std::max(w, b.size());
  return static_cast<int>(w);
}

int direction_tree(const TreeDecomposition& td, int i, int v) {
  if (td.bag_contains(i, v))
    throw std::runtime_error("vertex already in the bag of the queried node");
  int n = td.num_nodes();
  auto adj = td.adjacency();
  std::vector<int> prev(n, -1);
  std::queue<int> q;
  q.push(i);
  std::vector<bool> seen(n, false);
  seen[i] = true;
  int best = -1;
  while (!q.empty() && best < 0) {
    int a = q.front();
    q.pop();
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        prev[b] = a;
        if (td.bag_contains(b, v) && best < 0) best = b;
        q.push(b);
      }
    if (best >= 0) break;
  }
  if (best < 0) throw std::runtime_error("vertex is in no bag");
  int step = best;
  while (prev[step] != i) step = prev[step];
  return step;
}

std::vector<int> guarded(const DagDecomposition& dd, int i) {
  if (i < 0 || i >= dd.num_nodes()) throw std::runtime_error("unknown node");
  auto succ = dd.out_edges();
  std::vector<bool> seen(dd.num_nodes(), false);
  std::vector<int> work;
  for (int j : succ[i])
    if (!seen[j]) {
      seen[j] = true;
      work.push_back(j);
    }
  std::set<int> verts;
  while (!work.empty()) {
    int k = work.back();
    work.pop_back();
    for (int v : dd.bags[k]) verts.insert(v);
    for (int m : succ[k])
      if (!seen[m]) {
        seen[m] = true;
        work.push_back(m);
      }
  }
  std::vector<int> out;
  for (int v : verts)
    if (!dd.bag_contains(i, v)) out.push_back(v);
  return out;
}

int direction_dag(const DagDecomposition& dd, int i, int v) {
  auto g = guarded(dd, i);
  if (!std::binary_search(g.begin(), g.end(), v))
    throw std::runtime_error("vertex is not guarded at the queried node");
  auto succ = dd.out_edges();
  for (int j : succ[i]) {
    if (dd.bag_contains(j, v)) return j;
    auto gj = guarded(dd, j);
    if (std::binary_search(gj.begin(), gj.end(), v)) return j;
  }
  throw std::runtime_error("no qualifying successor node");
}

RootedTreeDecomposition root_decomposition(const TreeDecomposition& td, int root) {
  int n = td.num_nodes();
  if (root < 0 || root >= n) throw std::runtime_error("unknown root node");
  RootedTreeDecomposition r;
  r.base = td;
  r.root = root;
  r.parent.assign(n, -1);
  r.children.assign(n, {});
  auto adj = td.adjacency();
  std::vector<int> depth(n, -1);
  std::queue<int> q;
  q.push(root);
  depth[root] = 0;
  std::vector<int> order;
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    order.push_back(a);
    for (int b : adj[a])
      if (depth[b] < 0) {
        depth[b] = depth[a] + 1;
        r.parent[b] = a;
        r.children[a].push_back(b);
        q.push(b);
      }
  }
  int vs = 0;
  for (const auto& bag : td.bags)
    for (int v : bag) vs = std::max(vs, v + 1);
  r.first.assign(vs, -1);
  for (int a : order)  // BFS order: first hit is the closest to the root
    for (int v : td.bags[a])
      if (r.first[v] < 0) r.first[v] = a;
  return r;
}

DagDecomposition tree_to_dag(const TreeDecomposition& td, int root) {
  auto rtd = root_decomposition(td, root);
  DagDecomposition dd;
  dd.bags = td.bags;
  for (int b = 0; b < td.num_nodes(); ++b)
    if (rtd.parent[b] >= 0) dd.edges.emplace_back(rtd.parent[b], b);
  return dd;
}

int split_vertex(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  if (num_nodes < 3) throw std::runtime_error("tree must have at least 3 nodes");
  auto adj = adjacency_of(num_nodes, edges);
  // Subtree sizes from an arbitrary root give each node's largest component
  // after removal.
  std::vector<int> order, parent(num_nodes, -1), size(num_nodes, 1);
  order.reserve(num_nodes);
  std::vector<int> work{0};
  std::vector<bool> seen(num_nodes, false);
  seen[0] = true;
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    order.push_back(a);
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        parent[b] = a;
        work.push_back(b);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  int best = -1, best_load = num_nodes + 1;
  for (int v = 0; v < num_nodes; ++v) {
    int load = num_nodes - size[v];
    for (int b : adj[v])
      if (parent[b] == v) load = std::max(load, size[b]);
    if (load < best_load) {
      best_load = load;
      best = v;
    }
  }
  if (3 * best_load > 2 * num_nodes)
    throw std::runtime_error("no balanced separator found");
  return best;
}

int split_vertex(const TreeDecomposition& td) {
  return split_vertex(td.num_nodes(), td.edges);
}

int point_vertex(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                 int i, int j, int k) {
  auto adj = adjacency_of(num_nodes, edges);
  auto di = bfs_dist(num_nodes, adj, i);
  auto dj = bfs_dist(num_nodes, adj, j);
  auto dk = bfs_dist(num_nodes, adj, k);
  for (int m = 0; m < num_nodes; ++m) {
    if (di[m] + dj[m] == di[j] && dj[m] + dk[m] == dj[k] && di[m] + dk[m] == di[k]) {
      if (m == i || m == j || m == k)
        throw std::runtime_error("nodes lie on a common path");
      return m;
    }
  }
  throw std::runtime_error("no meeting node found");
}

std::vector<int> subtree_nodes(const TreeDecomposition& td, int i, int v) {
  int d = direction_tree(td, i, v);
  auto adj = td.adjacency();
  std::vector<bool> seen(td.num_nodes(), false);
  seen[i] = true;
  seen[d] = true;
  std::vector<int> work{d}, out{d};
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        out.push_back(b);
        work.push_back(b);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

TreeDecomposition normalize(TreeDecomposition td) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t e = 0; e < td.edges.size() && !changed; ++e) {
      auto [a, b] = td.edges[e];
      int from = -1, into = -1;
      if (std::includes(td.bags[b].begin(), td.bags[b].end(), td.bags[a].begin(),
                        td.bags[a].end())) {
        from = a;
        into = b;
      } else if (std::includes(td.bags[a].begin(), td.bags[a].end(),
                               td.bags[b].begin(), td.bags[b].end())) {
        from = b;
        into = a;
      }
      if (from < 0) continue;
      changed = true;
      TreeDecomposition next;
      std::vector<int> remap(td.num_nodes(), -1);
      for (int i = 0; i < td.num_nodes(); ++i) {
        if (i == from) continue;
        remap[i] = next.num_nodes();
        next.bags.push_back(td.bags[i]);
      }
      remap[from] = remap[into];
      for (size_t e2 = 0; e2 < td.edges.size(); ++e2) {
        if (e2 == e) continue;
        auto [x, y] = td.edges[e2];
        next.edges.emplace_back(remap[x], remap[y]);
      }
      td = std::move(next);
    }
  }
  return td;
}

}  // namespace

TreeDecomposition build_tree_decomposition_heuristic(const ParityGame& g,
                                                     bool min_fill) {
  int n = g.size();
  if (n == 0) throw std::runtime_error("empty game");
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u : g.succ(v))
      if (u != v) {
        adj[v].insert(u);
        adj[u].insert(v);
      }

  std::vector<bool> gone(n, false);
  std::vector<int> elim_pos(n, -1);
  TreeDecomposition td;
  std::vector<int> bag_owner;  // eliminated vertex per node

  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long best = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long score;
      if (!min_fill) {
        score = static_cast<long>(adj[v].size());
      } else {
        score = 0;
        for (int a : adj[v])
          for (int b : adj[v])
            if (a < b && !adj[a].count(b)) ++score;
      }
      if (pick < 0 || score < best) {
        pick = v;
        best = score;
      }
    }
    elim_pos[pick] = step;
    std::vector<int> bag{pick};
    for (int u : adj[pick]) bag.push_back(u);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(bag);
    bag_owner.push_back(pick);
    for (int a : adj[pick])
      for (int b : adj[pick])
        if (a != b) adj[a].insert(b);
    for (int a : adj[pick]) adj[a].erase(pick);
    adj[pick].clear();
    gone[pick] = true;
  }

  for (int node = 0; node < n; ++node) {
    int v = bag_owner[node];
    // Attach to the bag of the earliest-eliminated later vertex in this bag;
    // isolated vertices attach to the next elimination step.
    int link = -1;
    for (int u : td.bags[node])
      if (u != v && (link < 0 || elim_pos[u] < elim_pos[link])) link = u;
    int parent_node;
    if (link >= 0) parent_node = elim_pos[link];
    else if (node + 1 < n) parent_node = node + 1;
    else continue;  // last bag is the root
    td.edges.emplace_back(node, parent_node);
  }
  return normalize(std::move(td));
}

int count_two_edge_paths(const RootedTreeDecomposition& rtd) {
  int count = 0;
  for (int b = 0; b < rtd.base.num_nodes(); ++b)
    if (rtd.parent[b] >= 0) count += static_cast<int>(rtd.children[b].size());
  return count;
}

DecompositionFile parse_decomposition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  long declared_nodes = 0;
  std::map<long, std::vector<int>> raw_bags;
  std::vector<std::pair<long, long>> raw_edges;
  std::optional<long> raw_root;

  auto syntax = [&](const std::string& msg) -> void {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (!rest.empty() && rest.back() == ';') rest.pop_back();
    else syntax("expected ';'");
    std::istringstream rs(rest);
    if (tok == "td") {
      long w;
      if (!(rs >> declared_nodes >> w)) syntax("bad header");
      saw_header = true;
    } else if (tok == "b") {
      long id;
      if (!(rs >> id)) syntax("bad bag line");
      if (raw_bags.count(id)) syntax("duplicate bag node id");
      std::vector<int> bag;
      std::string verts;
      if (rs >> verts) {
        std::istringstream vs(verts);
        std::string piece;
        while (std::getline(vs, piece, ',')) {
          if (piece.empty()) syntax("bad vertex list");
          bag.push_back(std::stoi(piece));
        }
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      raw_bags[id] = bag;
    } else if (tok == "e") {
      long a, b;
      if (!(rs >> a >> b)) syntax("bad edge line");
      raw_edges.emplace_back(a, b);
    } else if (tok == "rooted") {
      long r;
      if (!(rs >> r)) syntax("bad rooted line");
      raw_root = r;
    } else {
      syntax("unknown directive '" + tok + "'");
    }
  }
  if (!saw_header) throw std::runtime_error("missing 'td' header");
  if (declared_nodes != static_cast<long>(raw_bags.size()))
    throw std::runtime_error("header node count does not match bag lines");

  std::map<long, int> dense;
  for (const auto& [id, bag] : raw_bags) {
    int at = static_cast<int>(dense.size());
    dense[id] = at;
  }
  DecompositionFile out;
  out.decomposition.bags.resize(raw_bags.size());
  for (const auto& [id, bag] : raw_bags) out.decomposition.bags[dense[id]] = bag;
  for (auto [a, b] : raw_edges) {
    if (!dense.count(a) || !dense.count(b))
      throw std::runtime_error("edge references an unknown node");
    out.decomposition.edges.emplace_back(dense[a], dense[b]);
  }
  if (raw_root) {
    if (!dense.count(*raw_root))
      throw std::runtime_error("rooted line references an unknown node");
    out.root = dense[*raw_root];
  }
  return out;
}

std::string write_decomposition(const TreeDecomposition& td,
                                std::optional<int> root) {
  std::string out = "td " + std::to_string(td.num_nodes()) + ' ' +
                    std::to_string(width(td)) + ";\n";
  for (int i = 0; i < td.num_nodes(); ++i) {
    out += "b " + std::to_string(i);
    for (size_t j = 0; j < td.bags[i].size(); ++j)
      out += (j == 0 ? " " : ",") + std::to_string(td.bags[i][j]);
    out += ";\n";
  }
  for (auto [a, b] : td.edges)
    out += "e " + std::to_string(a) + ' ' + std::to_string(b) + ";\n";
  if (root) out += "rooted " + std::to_string(*root) + ";\n";
  return out;
}

}  // namespace pgtk
