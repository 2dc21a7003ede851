#include "mcst/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "mcst/errors.hpp"
#include "mcst/kernels.hpp"

namespace mcst {

namespace {

// Column metadata of the matching instances around one h vertex, hoisted out
// of the row loop: the neighbors of v, their edge indices, and the table ids
// of the subtrees hanging off them (oriented away from v).
struct ColumnPlan {
  std::vector<int> vertices;
  std::vector<int> h_edges;
  std::vector<int> rtids;

  void build(const Tree& h, const RootedSubtreeIndex& hindex, int v, int skip_neighbor) {
    vertices.clear();
    h_edges.clear();
    rtids.clear();
    for (const auto& [nb, e] : h.adjacency[v]) {
      if (nb == skip_neighbor) continue;
      vertices.push_back(nb);
      h_edges.push_back(e);
      rtids.push_back(hindex.id(nb, v));
    }
  }
};

void fill_instance_rows(const DPTable& t, int u, const ColumnPlan& plan, BipartiteInstance& inst) {
  const auto& rows = t.gview.children[u];
  const int l = static_cast<int>(plan.vertices.size());
  inst.left = static_cast<int>(rows.size());
  inst.right = l;
  inst.weights.resize(static_cast<size_t>(inst.left) * l);
  if (l == 0) return;
  const int rtcount = t.hindex.count();
  for (int i = 0; i < inst.left; ++i) {
    const int child = rows[i];
    const int ge = t.gview.parent_edge[child];
    kernels::ops().gather_add(&t.wm.edge[static_cast<size_t>(ge) * (t.h.order() - 1)],
                              plan.h_edges.data(),
                              &t.values[static_cast<size_t>(child) * rtcount], plan.rtids.data(),
                              &inst.weights[static_cast<size_t>(i) * l], l);
  }
}

}  // namespace

void DPTable::build_instance(int u, int v, int skip_neighbor, BipartiteInstance& out,
                             std::vector<int>* col_vertices) const {
  ColumnPlan plan;
  plan.build(h, hindex, v, skip_neighbor);
  fill_instance_rows(*this, u, plan, out);
  if (col_vertices) *col_vertices = plan.vertices;
}

std::vector<std::pair<int, int>> DPTable::entry_matching(int u, int s, int v) const {
  if (store_matchings) return matchings[static_cast<size_t>(u) * hindex.count() + hindex.id(v, s)];
  BipartiteInstance inst;
  std::vector<int> cols;
  build_instance(u, v, s == v ? -1 : s, inst, &cols);
  MwmSolver solver(inst);
  solver.solve();
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : solver.matching().pairs)
    out.emplace_back(gview.children[u][i], cols[j]);
  return out;
}

McstResult solve(const Tree& g, const Tree& h, const WeightModel& model,
                 const SolveOptions& options) {
  McstResult result;
  result.table = std::make_shared<DPTable>();
  DPTable& t = *result.table;
  t.g = g;
  t.h = h;
  t.model = model;
  t.root_g = 0;
  t.gview = rooted_view(t.g, t.root_g);
  t.hindex = RootedSubtreeIndex(t.h);
  t.wm = precompute_weights(model, t.g, t.h);
  t.store_matchings = options.store_matchings;

  const int n = g.order(), m = h.order();
  const int rtcount = t.hindex.count();
  t.values.assign(static_cast<size_t>(n) * rtcount, neg_inf());
  if (options.store_matchings) t.matchings.assign(t.values.size(), {});

  SolveStats& stats = result.stats;
  ColumnPlan plan;
  BipartiteInstance inst;
  MwmSolver solver;

  for (const int u : t.gview.postorder) {
    Weight* row = &t.values[static_cast<size_t>(u) * rtcount];
    const bool leaf = t.gview.children[u].empty();
    for (int v = 0; v < m; ++v) {
      const Weight wv = t.wm.vw(u, v);
      if (is_neg_inf(wv)) continue;  // row is pre-filled with neg_inf
      if (leaf) {
        row[v] = wv;
        for (const auto& [s, e] : t.h.adjacency[v]) {
          (void)e;
          row[t.hindex.id(v, s)] = wv;
        }
        continue;
      }
      plan.build(t.h, t.hindex, v, -1);
      fill_instance_rows(t, u, plan, inst);
      solver.reset(inst);
      solver.solve();
      const Matching base = solver.matching();
      row[v] = wv + base.weight;
      if (options.store_matchings) {
        auto& stored = t.matchings[static_cast<size_t>(u) * rtcount + v];
        stored.clear();
        for (const auto& [i, j] : base.pairs)
          stored.emplace_back(t.gview.children[u][i], plan.vertices[j]);
      }
      for (int j = 0; j < static_cast<int>(plan.vertices.size()); ++j) {
        const int s = plan.vertices[j];
        const Matching mj = solver.matching_without(j);
        const int rtid = t.hindex.id(v, s);
        row[rtid] = wv + mj.weight;
        if (options.store_matchings) {
          auto& stored = t.matchings[static_cast<size_t>(u) * rtcount + rtid];
          stored.clear();
          for (const auto& [i, jj] : mj.pairs)
            stored.emplace_back(t.gview.children[u][i], plan.vertices[jj]);
        }
      }
      ++stats.pairs_solved;
      stats.base_iterations += solver.stats().base_iterations;
      stats.family_iterations += solver.stats().family_iterations;
      const long long budget = std::min(g.degree(u), h.degree(v)) + 1;
      const long long excess = solver.stats().family_iterations - budget;
      stats.max_family_excess = std::max(stats.max_family_excess, excess);
      if (excess > 0) stats.family_bound_ok = false;
    }
  }

  t.best = neg_inf();
  for (int u = 0; u < n; ++u) {
    for (int rtid = 0; rtid < rtcount; ++rtid) {
      const Weight w = t.value(u, rtid);
      if (w > t.best) {
        t.best = w;
        t.best_u = u;
        const RootedSubtreeId id = t.hindex.decode(rtid);
        t.best_v = id.root_vertex;
        t.best_s = id.direction_vertex;
      }
    }
  }

  result.weight = t.best;
  if (!is_neg_inf(t.best)) result.witness = extract_isomorphism(t);
  return result;
}

Isomorphism extract_isomorphism(const DPTable& table) {
  if (is_neg_inf(table.best))
    fail(ErrorKind::EmptyOptimum, "table maximum is -inf; no vertex pair is mappable");
  Isomorphism iso;
  iso.weight = table.best;
  // Depth-first expansion along the stored (or recomputed) child matchings.
  std::vector<std::tuple<int, int, int>> stack;  // (u, s, v)
  stack.emplace_back(table.best_u, table.best_s, table.best_v);
  while (!stack.empty()) {
    const auto [u, s, v] = stack.back();
    stack.pop_back();
    iso.pairs.emplace_back(u, v);
    for (const auto& [cu, cv] : table.entry_matching(u, s, v)) stack.emplace_back(cu, v, cv);
  }
  std::sort(iso.pairs.begin(), iso.pairs.end());
  return iso;
}

std::pair<Weight, Isomorphism> solve_rooted(const Tree& g, int r, const Tree& h, int s,
                                            const WeightModel& model) {
  const RootedView gv = rooted_view(g, r);
  const RootedView hv = rooted_view(h, s);
  const WeightMatrices wm = precompute_weights(model, g, h);
  const int m = h.order();
  std::vector<Weight> val(static_cast<size_t>(g.order()) * m, neg_inf());

  BipartiteInstance inst;
  MwmSolver solver;
  for (const int u : gv.postorder) {
    for (const int v : hv.postorder) {
      const Weight wv = wm.vw(u, v);
      if (is_neg_inf(wv)) continue;
      const auto& cu = gv.children[u];
      const auto& cv = hv.children[v];
      if (cu.empty() || cv.empty()) {
        val[static_cast<size_t>(u) * m + v] = wv;
        continue;
      }
      inst.left = static_cast<int>(cu.size());
      inst.right = static_cast<int>(cv.size());
      inst.weights.resize(static_cast<size_t>(inst.left) * inst.right);
      for (int i = 0; i < inst.left; ++i)
        for (int j = 0; j < inst.right; ++j)
          inst.at(i, j) = wm.ew(gv.parent_edge[cu[i]], hv.parent_edge[cv[j]]) +
                          val[static_cast<size_t>(cu[i]) * m + cv[j]];
      solver.reset(inst);
      solver.solve();
      val[static_cast<size_t>(u) * m + v] = wv + solver.matching().weight;
    }
  }

  const Weight best = val[static_cast<size_t>(r) * m + s];
  Isomorphism iso;
  iso.weight = best;
  if (is_neg_inf(best)) return {best, iso};

  // Traceback, recomputing the matching at each mapped internal pair.
  std::vector<std::pair<int, int>> stack{{r, s}};
  while (!stack.empty()) {
    const auto [u, v] = stack.back();
    stack.pop_back();
    iso.pairs.emplace_back(u, v);
    const auto& cu = gv.children[u];
    const auto& cv = hv.children[v];
    if (cu.empty() || cv.empty()) continue;
    inst.left = static_cast<int>(cu.size());
    inst.right = static_cast<int>(cv.size());
    inst.weights.resize(static_cast<size_t>(inst.left) * inst.right);
    for (int i = 0; i < inst.left; ++i)
      for (int j = 0; j < inst.right; ++j)
        inst.at(i, j) = wm.ew(gv.parent_edge[cu[i]], hv.parent_edge[cv[j]]) +
                        val[static_cast<size_t>(cu[i]) * m + cv[j]];
    solver.reset(inst);
    solver.solve();
    for (const auto& [i, j] : solver.matching().pairs) stack.emplace_back(cu[i], cv[j]);
  }
  std::sort(iso.pairs.begin(), iso.pairs.end());
  return {best, iso};
}

namespace {

// Memoized recursion over pairs of rooted subtrees of g and h.
struct AllRootsContext {
  const Tree& g;
  const Tree& h;
  const WeightMatrices& wm;
  RootedSubtreeIndex gindex;
  RootedSubtreeIndex hindex;
  std::vector<Weight> memo;  // NaN = unset

  AllRootsContext(const Tree& g_, const Tree& h_, const WeightMatrices& wm_)
      : g(g_), h(h_), wm(wm_), gindex(g_), hindex(h_) {
    memo.assign(static_cast<size_t>(gindex.count()) * hindex.count(),
                std::numeric_limits<Weight>::quiet_NaN());
  }

  Weight value(int u, int du, int v, int dv) {
    const size_t key = static_cast<size_t>(gindex.id(u, du)) * hindex.count() + hindex.id(v, dv);
    if (!std::isnan(memo[key])) return memo[key];
    Weight out = wm.vw(u, v);
    if (!is_neg_inf(out)) {
      std::vector<int> cu, ceu, cv, cev;
      for (const auto& [nb, e] : g.adjacency[u])
        if (nb != du) {
          cu.push_back(nb);
          ceu.push_back(e);
        }
      for (const auto& [nb, e] : h.adjacency[v])
        if (nb != dv) {
          cv.push_back(nb);
          cev.push_back(e);
        }
      if (!cu.empty() && !cv.empty()) {
        BipartiteInstance inst(static_cast<int>(cu.size()), static_cast<int>(cv.size()));
        for (int i = 0; i < inst.left; ++i)
          for (int j = 0; j < inst.right; ++j)
            inst.at(i, j) = wm.ew(ceu[i], cev[j]) + value(cu[i], u, cv[j], v);
        MwmSolver solver(inst);
        solver.solve();
        out += solver.matching().weight;
      }
    }
    memo[key] = out;
    return out;
  }
};

}  // namespace

Weight solve_all_roots(const Tree& g, const Tree& h, const WeightModel& model) {
  const WeightMatrices wm = precompute_weights(model, g, h);
  AllRootsContext ctx(g, h, wm);
  Weight best = neg_inf();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) best = std::max(best, ctx.value(u, u, v, v));
  return best;
}

}  // namespace mcst
