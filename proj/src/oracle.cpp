#include "mcst/oracle.hpp"

#include <algorithm>
#include <functional>

#include "mcst/errors.hpp"

namespace mcst {
namespace oracle {

namespace {

void note_candidate(Weight w, std::vector<std::pair<int, int>> pairs, Weight& best,
                    std::vector<std::vector<std::pair<int, int>>>& optima) {
  if (w < best) return;
  if (w > best) {
    best = w;
    optima.clear();
  }
  std::sort(pairs.begin(), pairs.end());
  optima.push_back(std::move(pairs));
}

}  // namespace

MwmOracleResult brute_force_mwm(const BipartiteInstance& inst, const OracleBudget& budget) {
  if (inst.left > budget.max_left || inst.right > budget.max_right)
    fail(ErrorKind::BudgetExceeded, "instance exceeds the brute-force budget");

  MwmOracleResult result;
  result.weight = 0.0;
  std::vector<char> used(inst.right, 0);
  std::vector<std::pair<int, int>> picked;

  // Row-by-row: match row i to an unused column or leave it unmatched.
  std::function<void(int, Weight)> go = [&](int i, Weight acc) {
    if (i == inst.left) {
      note_candidate(acc, picked, result.weight, result.optima);
      return;
    }
    go(i + 1, acc);
    for (int j = 0; j < inst.right; ++j) {
      if (used[j] || is_neg_inf(inst.at(i, j))) continue;
      used[j] = 1;
      picked.emplace_back(i, j);
      go(i + 1, acc + inst.at(i, j));
      picked.pop_back();
      used[j] = 0;
    }
  };
  go(0, 0.0);
  std::sort(result.optima.begin(), result.optima.end());
  return result;
}

McstOracleResult brute_force_mcst(const Tree& g, const Tree& h, const WeightModel& model,
                                  const OracleBudget& budget) {
  if (g.order() > budget.max_tree_order || h.order() > budget.max_tree_order)
    fail(ErrorKind::BudgetExceeded, "tree order exceeds the brute-force budget");

  McstOracleResult result;
  const WeightMatrices wm = precompute_weights(model, g, h);
  const int n = g.order();

  // For each connected vertex subset of g (they are exactly the subtrees),
  // embed it into h in every edge-preserving way. Trees make this simple: a
  // new domain vertex attaches to exactly one already-mapped neighbor, and
  // mapping tree edges to tree edges cannot create chords on either side.
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    // Connectivity check by BFS inside the mask.
    {
      std::vector<int> stack{verts[0]};
      int seen_mask = 1 << verts[0];
      int cnt = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [nb, e] : g.adjacency[v]) {
          (void)e;
          if ((mask & (1 << nb)) && !(seen_mask & (1 << nb))) {
            seen_mask |= 1 << nb;
            ++cnt;
            stack.push_back(nb);
          }
        }
      }
      if (cnt != static_cast<int>(verts.size())) continue;
    }

    // Order the domain so each vertex after the first attaches to an earlier
    // one; record that attachment edge.
    std::vector<int> order{verts[0]};
    std::vector<int> attach_to(n, -1), attach_edge(n, -1);
    std::vector<char> in_order(n, 0);
    in_order[verts[0]] = 1;
    for (size_t q = 0; q < order.size(); ++q) {
      const int v = order[q];
      for (const auto& [nb, e] : g.adjacency[v]) {
        if ((mask & (1 << nb)) && !in_order[nb]) {
          in_order[nb] = 1;
          attach_to[nb] = v;
          attach_edge[nb] = e;
          order.push_back(nb);
        }
      }
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(h.order(), 0);
    std::vector<std::pair<int, int>> pairs;
    std::function<void(size_t, Weight)> place = [&](size_t idx, Weight acc) {
      if (is_neg_inf(acc)) return;
      if (idx == order.size()) {
        note_candidate(acc, pairs, result.weight, result.optima);
        return;
      }
      const int gu = order[idx];
      if (idx == 0) {
        for (int hv = 0; hv < h.order(); ++hv) {
          image[gu] = hv;
          used[hv] = 1;
          pairs.emplace_back(gu, hv);
          place(idx + 1, acc + wm.vw(gu, hv));
          pairs.pop_back();
          used[hv] = 0;
          image[gu] = -1;
        }
        return;
      }
      const int anchor_h = image[attach_to[gu]];
      for (const auto& [hv, he] : h.adjacency[anchor_h]) {
        if (used[hv]) continue;
        image[gu] = hv;
        used[hv] = 1;
        pairs.emplace_back(gu, hv);
        place(idx + 1, acc + wm.vw(gu, hv) + wm.ew(attach_edge[gu], he));
        pairs.pop_back();
        used[hv] = 0;
        image[gu] = -1;
      }
    };
    place(0, 0.0);
  }
  std::sort(result.optima.begin(), result.optima.end());
  return result;
}

ValidationResult validate_isomorphism(const Tree& g, const Tree& h,
                                      const std::vector<std::pair<int, int>>& mapping,
                                      const WeightModel& model) {
  ValidationResult res;
  auto invalid = [&](const std::string& why) {
    res.valid = false;
    res.reason = why;
    return res;
  };
  if (mapping.empty()) {
    res.weight = 0.0;
    return res;
  }
  std::vector<int> image(g.order(), -1);
  std::vector<int> preimage(h.order(), -1);
  for (const auto& [gu, hv] : mapping) {
    if (gu < 0 || gu >= g.order() || hv < 0 || hv >= h.order())
      return invalid("index out of range");
    if (image[gu] != -1 || preimage[hv] != -1) return invalid("not injective");
    image[gu] = hv;
    preimage[hv] = gu;
  }

  auto connected = [](const Tree& t, const std::vector<int>& member, int start, int count) {
    std::vector<int> stack{start};
    std::vector<char> seen(t.order(), 0);
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [nb, e] : t.adjacency[v]) {
        (void)e;
        if (member[nb] != -1 && !seen[nb]) {
          seen[nb] = 1;
          ++reached;
          stack.push_back(nb);
        }
      }
    }
    return reached == count;
  };
  const int count = static_cast<int>(mapping.size());
  if (!connected(g, image, mapping.front().first, count)) return invalid("domain not connected");
  if (!connected(h, preimage, mapping.front().second, count)) return invalid("image not connected");

  for (const auto& [gu, hv] : mapping) {
    for (const auto& [gu2, hv2] : mapping) {
      if (gu >= gu2) continue;
      const bool ge = g.find_edge(gu, gu2) >= 0;
      const bool he = h.find_edge(hv, hv2) >= 0;
      if (ge != he) return invalid("edge preservation violated");
    }
  }
  res.weight = isomorphism_weight(model, g, h, mapping);
  if (is_neg_inf(res.weight)) return invalid("mapping contains a forbidden pair");
  return res;
}

}  // namespace oracle
}  // namespace mcst
