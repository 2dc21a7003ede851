#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcst/tree.hpp"

namespace mcst {

// Weights live in the reals extended by negative infinity, which marks a
// forbidden mapping. IEEE doubles give the required arithmetic for free:
// -inf + x == -inf and -inf compares below every finite value. +inf and NaN
// are never produced or accepted.
using Weight = double;

inline constexpr Weight neg_inf() { return -std::numeric_limits<Weight>::infinity(); }
inline bool is_neg_inf(Weight w) { return w == neg_inf(); }
inline bool is_finite_weight(Weight w) { return w > neg_inf() && w < std::numeric_limits<Weight>::infinity(); }

enum class WeightKind { Size, LabelStrict, Table };

// Commutative weight function on vertex-label pairs and edge-label pairs.
//
// Size:        every vertex pair scores 1, every edge pair 0, so the weight of
//              a mapping equals the number of mapped vertices.
// LabelStrict: equal labels score 1 (vertices) / 0 (edges), different labels
//              are forbidden.
// Table:       explicit per-label-pair entries with fallback defaults; the
//              defaults are -inf unless overridden, so omissions are closed.
struct WeightModel {
  WeightKind kind = WeightKind::Size;
  std::map<std::pair<std::string, std::string>, Weight> vertex_table;
  std::map<std::pair<std::string, std::string>, Weight> edge_table;
  Weight default_vertex = neg_inf();
  Weight default_edge = neg_inf();

  static WeightModel size() { return WeightModel{}; }
  static WeightModel label_strict() { return WeightModel{WeightKind::LabelStrict, {}, {}, neg_inf(), neg_inf()}; }
  static WeightModel table() { return WeightModel{WeightKind::Table, {}, {}, neg_inf(), neg_inf()}; }

  void set_vertex(const std::string& a, const std::string& b, Weight w);
  void set_edge(const std::string& a, const std::string& b, Weight w);

  Weight vertex_weight(const std::string& a, const std::string& b) const;
  Weight edge_weight(const std::string& a, const std::string& b) const;
};

// Weight of a partial injective vertex mapping between two trees: the sum of
// vertex weights over mapped pairs plus edge weights over edges mapped to
// edges (both endpoints mapped and adjacent on both sides). Throws on
// non-injective input.
Weight isomorphism_weight(const WeightModel& model, const Tree& g, const Tree& h,
                          const std::vector<std::pair<int, int>>& mapping);

// Dense per-tree-pair lookup of the model, so inner loops never touch labels.
struct WeightMatrices {
  int n = 0, m = 0;
  std::vector<Weight> vertex;  // n x m
  std::vector<Weight> edge;    // (n-1) x (m-1)

  Weight vw(int gu, int hv) const { return vertex[static_cast<size_t>(gu) * m + hv]; }
  Weight ew(int ge, int he) const { return edge[static_cast<size_t>(ge) * (m - 1) + he]; }
};

WeightMatrices precompute_weights(const WeightModel& model, const Tree& g, const Tree& h);

}  // namespace mcst
