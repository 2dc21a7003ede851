#include "mcst/tree.hpp"

#include <algorithm>
#include <set>

namespace mcst {

int Tree::max_degree() const {
  int d = 0;
  for (const auto& adj : adjacency) d = std::max(d, static_cast<int>(adj.size()));
  return d;
}

int Tree::find_edge(int a, int b) const {
  for (const auto& [nb, e] : adjacency[a])
    if (nb == b) return e;
  return -1;
}

Tree build_tree(std::vector<std::string> vertex_labels,
                std::vector<std::tuple<int, int, std::string>> edge_list) {
  const int n = static_cast<int>(vertex_labels.size());
  if (n < 1) fail(ErrorKind::ParseError, "tree needs at least one vertex");
  if (static_cast<int>(edge_list.size()) != n - 1)
    fail(ErrorKind::CycleDetected, "edge count must be n-1, got " + std::to_string(edge_list.size()));

  Tree t;
  t.vertex_labels = std::move(vertex_labels);
  t.adjacency.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b, label] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
    if (a == b) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      fail(ErrorKind::DuplicateEdge,
           "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    const int e = static_cast<int>(t.edges.size());
    t.edges.push_back({a, b, std::move(label)});
    t.adjacency[a].emplace_back(b, e);
    t.adjacency[b].emplace_back(a, e);
  }
  for (auto& adj : t.adjacency) std::sort(adj.begin(), adj.end());

  // n-1 edges without duplicates: connected iff acyclic; check by traversal.
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [nb, e] : t.adjacency[v]) {
      (void)e;
      if (!visited[nb]) {
        visited[nb] = 1;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  if (reached != n) fail(ErrorKind::DisconnectedInput, "input graph is not connected");
  return t;
}

Tree build_plain_tree(int n, const std::vector<std::pair<int, int>>& edge_list) {
  std::vector<std::tuple<int, int, std::string>> edges;
  edges.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) edges.emplace_back(a, b, "-");
  return build_tree(std::vector<std::string>(n, "-"), std::move(edges));
}

RootedView rooted_view(const Tree& tree, int root) {
  const int n = tree.order();
  if (root < 0 || root >= n) fail(ErrorKind::IndexOutOfRange, "root index out of range");

  RootedView view;
  view.tree = &tree;
  view.root = root;
  view.parent.assign(n, -1);
  view.parent_edge.assign(n, -1);
  view.children.assign(n, {});
  view.depth.assign(n, 0);
  view.postorder.reserve(n);

  // Iterative DFS; children are visited in ascending index order because
  // adjacency lists are sorted.
  std::vector<std::pair<int, int>> stack;  // (vertex, next adjacency slot)
  view.parent[root] = root;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (slot < tree.degree(v)) {
      const auto [nb, e] = tree.adjacency[v][slot++];
      if (nb == view.parent[v]) continue;
      view.parent[nb] = v;
      view.parent_edge[nb] = e;
      view.depth[nb] = view.depth[v] + 1;
      view.children[v].push_back(nb);
      stack.emplace_back(nb, 0);
    } else {
      view.postorder.push_back(v);
      stack.pop_back();
    }
  }
  return view;
}

std::vector<RootedSubtreeId> all_rooted_subtrees(const Tree& tree) {
  std::vector<RootedSubtreeId> ids;
  ids.reserve(3 * tree.order() - 2);
  for (int v = 0; v < tree.order(); ++v) ids.push_back({v, v});
  for (const auto& e : tree.edges) {
    ids.push_back({e.a, e.b});
    ids.push_back({e.b, e.a});
  }
  return ids;
}

RootedSubtreeIndex::RootedSubtreeIndex(const Tree& tree)
    : tree_(&tree), count_(3 * tree.order() - 2) {}

int RootedSubtreeIndex::id(int v, int direction) const {
  if (direction == v) return v;
  const int e = tree_->find_edge(v, direction);
  if (e < 0) fail(ErrorKind::IndexOutOfRange, "direction is not a neighbor");
  const int side = tree_->edges[e].a == v ? 0 : 1;
  return tree_->order() + 2 * e + side;
}

RootedSubtreeId RootedSubtreeIndex::decode(int id) const {
  const int n = tree_->order();
  if (id < n) return {id, id};
  const int e = (id - n) / 2;
  const auto& edge = tree_->edges[e];
  return (id - n) % 2 == 0 ? RootedSubtreeId{edge.a, edge.b} : RootedSubtreeId{edge.b, edge.a};
}

}  // namespace mcst
