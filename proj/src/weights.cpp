#include "mcst/weights.hpp"

#include <algorithm>

namespace mcst {

namespace {

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Weight table_lookup(const std::map<std::pair<std::string, std::string>, Weight>& table,
                    const std::string& a, const std::string& b, Weight fallback) {
  const auto it = table.find(ordered(a, b));
  return it == table.end() ? fallback : it->second;
}

}  // namespace

void WeightModel::set_vertex(const std::string& a, const std::string& b, Weight w) {
  vertex_table[ordered(a, b)] = w;
}

void WeightModel::set_edge(const std::string& a, const std::string& b, Weight w) {
  edge_table[ordered(a, b)] = w;
}

Weight WeightModel::vertex_weight(const std::string& a, const std::string& b) const {
  switch (kind) {
    case WeightKind::Size:
      return 1.0;
    case WeightKind::LabelStrict:
      return a == b ? 1.0 : neg_inf();
    case WeightKind::Table:
      return table_lookup(vertex_table, a, b, default_vertex);
  }
  return neg_inf();
}

Weight WeightModel::edge_weight(const std::string& a, const std::string& b) const {
  switch (kind) {
    case WeightKind::Size:
      return 0.0;
    case WeightKind::LabelStrict:
      return a == b ? 0.0 : neg_inf();
    case WeightKind::Table:
      return table_lookup(edge_table, a, b, default_edge);
  }
  return neg_inf();
}

Weight isomorphism_weight(const WeightModel& model, const Tree& g, const Tree& h,
                          const std::vector<std::pair<int, int>>& mapping) {
  std::vector<int> image(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  for (const auto& [gu, hv] : mapping) {
    if (gu < 0 || gu >= g.order() || hv < 0 || hv >= h.order())
      fail(ErrorKind::IndexOutOfRange, "mapping index out of range");
    if (image[gu] != -1 || used[hv]) fail(ErrorKind::NotInjective, "mapping is not injective");
    image[gu] = hv;
    used[hv] = 1;
  }

  Weight total = 0.0;
  for (const auto& [gu, hv] : mapping)
    total += model.vertex_weight(g.vertex_labels[gu], h.vertex_labels[hv]);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& ge = g.edges[e];
    if (image[ge.a] == -1 || image[ge.b] == -1) continue;
    const int f = h.find_edge(image[ge.a], image[ge.b]);
    if (f < 0) continue;
    total += model.edge_weight(ge.label, h.edges[f].label);
  }
  return total;
}

WeightMatrices precompute_weights(const WeightModel& model, const Tree& g, const Tree& h) {
  WeightMatrices w;
  w.n = g.order();
  w.m = h.order();
  w.vertex.resize(static_cast<size_t>(w.n) * w.m);
  for (int u = 0; u < w.n; ++u)
    for (int v = 0; v < w.m; ++v)
      w.vertex[static_cast<size_t>(u) * w.m + v] =
          model.vertex_weight(g.vertex_labels[u], h.vertex_labels[v]);
  if (w.n > 1 && w.m > 1) {
    w.edge.resize(static_cast<size_t>(w.n - 1) * (w.m - 1));
    for (int e = 0; e < w.n - 1; ++e)
      for (int f = 0; f < w.m - 1; ++f)
        w.edge[static_cast<size_t>(e) * (w.m - 1) + f] =
            model.edge_weight(g.edges[e].label, h.edges[f].label);
  }
  return w;
}

}  // namespace mcst
