#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcst/errors.hpp"

namespace mcst {

// Undirected labeled tree over dense 0-based vertex indices. Immutable once
// built; adjacency lists are sorted by neighbor index so that every traversal
// derived from a Tree is deterministic.
struct Tree {
  struct Edge {
    int a = 0;
    int b = 0;
    std::string label;
  };

  std::vector<std::string> vertex_labels;
  std::vector<Edge> edges;
  // Per vertex: (neighbor, edge index), ascending by neighbor.
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  int order() const { return static_cast<int>(vertex_labels.size()); }
  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  int max_degree() const;
  // Edge index joining a and b, or -1.
  int find_edge(int a, int b) const;
};

// Validates and builds a Tree. Rejects self-loops, duplicate edges, wrong edge
// count and disconnected input.
Tree build_tree(std::vector<std::string> vertex_labels,
                std::vector<std::tuple<int, int, std::string>> edge_list);

// Convenience for unlabeled use: every vertex and edge gets the label "-".
Tree build_plain_tree(int n, const std::vector<std::pair<int, int>>& edge_list);

// Orientation of a Tree from a chosen root: parents, children (ascending),
// postorder and depths, all computed by one traversal.
struct RootedView {
  const Tree* tree = nullptr;
  int root = 0;
  std::vector<int> parent;       // parent[root] == root
  std::vector<int> parent_edge;  // edge to parent, -1 for root
  std::vector<std::vector<int>> children;
  std::vector<int> postorder;  // every vertex after all of its children
  std::vector<int> depth;
};

RootedView rooted_view(const Tree& tree, int root);

// Identifies the subtree hanging below root_vertex when the tree is oriented
// away from direction_vertex; (v, v) denotes the whole tree rooted at v.
struct RootedSubtreeId {
  int root_vertex = 0;
  int direction_vertex = 0;

  bool operator==(const RootedSubtreeId&) const = default;
};

// All 3n-2 rooted subtrees of a tree: one per vertex plus two per edge.
std::vector<RootedSubtreeId> all_rooted_subtrees(const Tree& tree);

// Dense indexing of rooted subtrees: (v, v) maps to v, directed edges map to
// order() + 2*edge + side. Used to key dynamic-programming tables.
class RootedSubtreeIndex {
 public:
  RootedSubtreeIndex() = default;
  explicit RootedSubtreeIndex(const Tree& tree);

  int count() const { return count_; }
  // Index of the subtree rooted at v, oriented away from direction (a neighbor
  // of v, or v itself for the whole tree).
  int id(int v, int direction) const;
  RootedSubtreeId decode(int id) const;

 private:
  const Tree* tree_ = nullptr;
  int count_ = 0;
};

}  // namespace mcst
