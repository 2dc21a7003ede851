#include "mcst/matching.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "mcst/errors.hpp"
#include "mcst/kernels.hpp"

namespace mcst {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void MwmSolver::reset(const BipartiteInstance& inst, double tol) {
  swapped_ = inst.left > inst.right;
  kk_ = swapped_ ? inst.right : inst.left;
  ll_ = swapped_ ? inst.left : inst.right;
  tol_ = tol;
  solved_ = false;
  stats_ = MwmStats{};

  wk_.assign(static_cast<size_t>(kk_) * ll_, neg_inf());
  wkT_.assign(static_cast<size_t>(ll_) * kk_, neg_inf());
  for (int i = 0; i < kk_; ++i) {
    for (int j = 0; j < ll_; ++j) {
      const Weight w = swapped_ ? inst.at(j, i) : inst.at(i, j);
      // Negative entries never contribute to an MWM; drop them with non-edges.
      const Weight k = (is_finite_weight(w) && w >= 0.0) ? w : neg_inf();
      wk_[static_cast<size_t>(i) * ll_ + j] = k;
      wkT_[static_cast<size_t>(j) * kk_ + i] = k;
    }
  }

  // Row duals start at their best incident weight (clamped at the coupling
  // weight 0), mirrored onto the row copies; column sides start at 0. Every
  // column starts matched to its mirror through the zero-weight tie edge.
  dl_.assign(kk_ + ll_, 0.0);
  dr_.assign(ll_ + kk_, 0.0);
  for (int i = 0; i < kk_; ++i) {
    double best = 0.0;
    for (int j = 0; j < ll_; ++j) best = std::max(best, wk_[static_cast<size_t>(i) * ll_ + j]);
    dl_[i] = best;
    dr_[ll_ + i] = best;
  }
  match_l_.assign(kk_ + ll_, -1);
  match_r_.assign(ll_ + kk_, -1);
  for (int j = 0; j < ll_; ++j) {
    match_l_[kk_ + j] = j;
    match_r_[j] = kk_ + j;
  }
  dead_r_.assign(ll_ + kk_, 0);
  if (kk_ == 0) solved_ = true;
}

void MwmSolver::augment_from(int s) {
  const int nr = ll_ + kk_;
  dist_.assign(nr, kInf);
  pred_.assign(nr, -1);
  settled_ = dead_r_;
  tree_lefts_.clear();
  settled_rights_.clear();

  const auto& ops = kernels::ops();
  auto relax_left = [&](int x, double base) {
    const double add = base + dl_[x];
    if (x < kk_) {
      ops.relax_row(&wk_[static_cast<size_t>(x) * ll_], dr_.data(), add, x, dist_.data(),
                    pred_.data(), ll_);
      const double nd = add + dr_[ll_ + x];  // tie edge to the row mirror
      if (nd < dist_[ll_ + x]) {
        dist_[ll_ + x] = nd;
        pred_[ll_ + x] = x;
      }
    } else {
      const int j = x - kk_;
      ops.relax_row(&wkT_[static_cast<size_t>(j) * kk_], dr_.data() + ll_, add, x,
                    dist_.data() + ll_, pred_.data() + ll_, kk_);
      const double nd = add + dr_[j];  // tie edge back to the column
      if (nd < dist_[j]) {
        dist_[j] = nd;
        pred_[j] = x;
      }
    }
  };

  relax_left(s, 0.0);
  tree_lefts_.emplace_back(s, 0.0);
  while (true) {
    const int j = kernels::ops().argmin_masked(dist_.data(), settled_.data(), nr);
    if (j < 0 || dist_[j] == kInf)
      fail(ErrorKind::NoAugmentingPath, "no augmenting path in doubled graph");
    settled_[j] = 1;
    settled_rights_.emplace_back(j, dist_[j]);
    const int matched_left = match_r_[j];
    if (matched_left < 0) {
      const double total = dist_[j];
      int cur = j;
      while (true) {
        const int x = pred_[cur];
        const int old = match_l_[x];
        match_l_[x] = cur;
        match_r_[cur] = x;
        if (x == s) break;
        cur = old;
      }
      for (const auto& [rj, dj] : settled_rights_) dr_[rj] += total - dj;
      for (const auto& [lx, ex] : tree_lefts_) dl_[lx] -= total - ex;
      return;
    }
    tree_lefts_.emplace_back(matched_left, dist_[j]);
    relax_left(matched_left, dist_[j]);
  }
}

bool MwmSolver::iterate() {
  if (solved_) return false;
  int s = -1;
  for (int i = 0; i < kk_; ++i) {
    if (match_l_[i] < 0) {
      s = i;
      break;
    }
  }
  if (s < 0) {
    solved_ = true;
    return false;
  }
  augment_from(s);
  ++stats_.base_iterations;
  return true;
}

void MwmSolver::solve() {
  while (iterate()) {
  }
}

void MwmSolver::project_internal(Matching& out) const {
  out.pairs.clear();
  out.weight = 0.0;
  for (int i = 0; i < kk_; ++i) {
    const int j = match_l_[i];
    if (j < 0 || j >= ll_) continue;
    out.pairs.emplace_back(swapped_ ? j : i, swapped_ ? i : j);
    out.weight += wk_[static_cast<size_t>(i) * ll_ + j];
  }
  std::sort(out.pairs.begin(), out.pairs.end());
}

Matching MwmSolver::matching() const {
  Matching m;
  project_internal(m);
  return m;
}

Matching MwmSolver::matching_without(int col) {
  if (!solved_) fail(ErrorKind::UsageError, "matching_without requires a solved state");
  if (swapped_) {
    // The deleted instance column is an internal row.
    const int c = col;
    if (match_l_[c] == ll_ + c) {
      Matching m;
      project_internal(m);
      return m;
    }
    snap_dl_ = dl_;
    snap_dr_ = dr_;
    snap_ml_ = match_l_;
    snap_mr_ = match_r_;
    const int j0 = match_l_[c];
    const int z = match_r_[ll_ + c];
    match_l_[c] = -1;
    match_r_[j0] = -1;
    match_l_[z] = -1;
    match_r_[ll_ + c] = -1;
    dead_r_[ll_ + c] = 1;
    augment_from(z);
    ++stats_.family_iterations;
    ++stats_.family_resolves;
    Matching m;
    project_internal(m);
    // Row c is unmatched here, so the projection already excludes it.
    dl_ = snap_dl_;
    dr_ = snap_dr_;
    match_l_ = snap_ml_;
    match_r_ = snap_mr_;
    dead_r_[ll_ + c] = 0;
    return m;
  }
  const int c = col;
  if (match_r_[c] == kk_ + c) {
    Matching m;
    project_internal(m);
    return m;
  }
  snap_dl_ = dl_;
  snap_dr_ = dr_;
  snap_ml_ = match_l_;
  snap_mr_ = match_r_;
  const int x = match_r_[c];
  const int y = match_l_[kk_ + c];
  match_l_[x] = -1;
  match_r_[c] = -1;
  match_l_[kk_ + c] = -1;
  match_r_[y] = -1;
  dead_r_[c] = 1;
  augment_from(x);
  ++stats_.family_iterations;
  ++stats_.family_resolves;
  Matching m;
  project_internal(m);
  dl_ = snap_dl_;
  dr_ = snap_dr_;
  match_l_ = snap_ml_;
  match_r_ = snap_mr_;
  dead_r_[c] = 0;
  return m;
}

bool MwmSolver::validate_duals(std::string* why) const {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int i = 0; i < kk_; ++i) {
    for (int j = 0; j < ll_; ++j) {
      const Weight w = wk_[static_cast<size_t>(i) * ll_ + j];
      if (is_neg_inf(w)) continue;
      const double rc = dl_[i] + dr_[j] - w;
      if (rc < -tol_) return bad("infeasible edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (match_l_[i] == j && std::abs(rc) > tol_)
        return bad("matched edge not tight (" + std::to_string(i) + "," + std::to_string(j) + ")");
      const double rcc = dl_[kk_ + j] + dr_[ll_ + i] - w;
      if (rcc < -tol_) return bad("infeasible mirror edge");
      if (match_l_[kk_ + j] == ll_ + i && std::abs(rcc) > tol_)
        return bad("matched mirror edge not tight");
    }
  }
  for (int i = 0; i < kk_; ++i) {
    const double rc = dl_[i] + dr_[ll_ + i];
    if (rc < -tol_) return bad("infeasible row tie edge");
    if (match_l_[i] == ll_ + i && std::abs(rc) > tol_) return bad("matched row tie edge not tight");
  }
  for (int j = 0; j < ll_; ++j) {
    const double rc = dl_[kk_ + j] + dr_[j];
    if (rc < -tol_) return bad("infeasible column tie edge");
    if (match_l_[kk_ + j] == j && std::abs(rc) > tol_)
      return bad("matched column tie edge not tight");
  }
  return true;
}

MwmSolver solve_mwm(const BipartiteInstance& inst, double tol) {
  MwmSolver solver(inst, tol);
  solver.solve();
  return solver;
}

MwmFamily solve_mwm_family(const BipartiteInstance& inst, double tol) {
  MwmSolver solver(inst, tol);
  solver.solve();
  MwmFamily fam;
  fam.base = solver.matching();
  fam.deleted.reserve(inst.right);
  for (int j = 0; j < inst.right; ++j) fam.deleted.push_back(solver.matching_without(j));
  fam.stats = solver.stats();
  return fam;
}

// ---------------------------------------------------------------------------
// Enumeration of all MWMs.
//
// With optimal duals d, a matching M of the instance is an MWM exactly when
// every edge of M is tight together with its mirror, and every vertex left
// uncovered by M has a tight tie edge. Alternatives are therefore reachable
// from the current matching by flipping alternating cycles and alternating
// paths in the tight subgraph whose endpoints respect those cover rules. The
// stream is produced by binary partition: each found structure yields a second
// matching, one differing edge is branched on, and both halves are explored.
// ---------------------------------------------------------------------------

namespace {

class MwmEnumerator {
 public:
  MwmEnumerator(const MwmSolver& solver, const std::function<bool(const Matching&)>& sink)
      : s_(solver), sink_(sink), kk_(solver.rows()), ll_(solver.cols()) {
    const double tol = s_.tolerance();
    const auto& dl = s_.duals_left();
    const auto& dr = s_.duals_right();
    cell_.assign(static_cast<size_t>(kk_) * ll_, -1);
    for (int i = 0; i < kk_; ++i) {
      for (int j = 0; j < ll_; ++j) {
        const Weight w = s_.kept(i, j);
        if (is_neg_inf(w)) continue;
        if (std::abs(dl[i] + dr[j] - w) > tol) continue;
        if (std::abs(dl[kk_ + j] + dr[ll_ + i] - w) > tol) continue;
        cell_[static_cast<size_t>(i) * ll_ + j] = static_cast<int>(edges_.size());
        edges_.emplace_back(i, j);
      }
    }
    status_.assign(edges_.size(), kFree);
    optional_l_.resize(kk_);
    for (int i = 0; i < kk_; ++i) optional_l_[i] = std::abs(dl[i] + dr[ll_ + i]) <= tol;
    optional_r_.resize(ll_);
    for (int j = 0; j < ll_; ++j) optional_r_[j] = std::abs(dl[kk_ + j] + dr[j]) <= tol;
    ml_.assign(kk_, -1);
    mr_.assign(ll_, -1);
  }

  std::size_t run() {
    // Seed with the solver's matching; by complementary slackness it lies in
    // the tight subgraph and uncovered vertices have tight tie edges.
    Matching base;
    base = s_.matching();
    for (const auto& [le, re] : base.pairs) {
      const int i = s_.sides_swapped() ? re : le;
      const int j = s_.sides_swapped() ? le : re;
      assert(cell(i, j) >= 0);
      ml_[i] = j;
      mr_[j] = i;
    }
    emitted_ = 0;
    rec();
    return emitted_;
  }

 private:
  static constexpr char kFree = 0, kIn = 1, kOut = 2;

  int cell(int i, int j) const { return cell_[static_cast<size_t>(i) * ll_ + j]; }

  bool emit() {
    Matching m;
    for (int i = 0; i < kk_; ++i) {
      if (ml_[i] < 0) continue;
      m.pairs.emplace_back(s_.sides_swapped() ? ml_[i] : i, s_.sides_swapped() ? i : ml_[i]);
      m.weight += s_.kept(i, ml_[i]);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    ++emitted_;
    return sink_(m);
  }

  // Flips the matched state of every cell in the structure (an involution).
  void apply(const std::vector<int>& structure) {
    scratch_.assign(structure.size(), 0);
    for (size_t t = 0; t < structure.size(); ++t) {
      const auto& [i, j] = edges_[structure[t]];
      scratch_[t] = (mr_[j] == i);
      if (scratch_[t]) {
        ml_[i] = -1;
        mr_[j] = -1;
      }
    }
    for (size_t t = 0; t < structure.size(); ++t) {
      if (scratch_[t]) continue;
      const auto& [i, j] = edges_[structure[t]];
      assert(ml_[i] < 0 && mr_[j] < 0);
      ml_[i] = j;
      mr_[j] = i;
    }
  }

  // Any alternating cycle in the tight subgraph that avoids locked edges.
  // Successor structure: left i reaches left mr[j] through an unmatched tight
  // cell (i, j) whose column is matched by a removable edge.
  bool find_cycle(std::vector<int>& out) {
    std::vector<char> color(kk_, 0);
    std::vector<int> prev_left(kk_, -1), via_col(kk_, -1);
    for (int start = 0; start < kk_; ++start) {
      if (color[start] != 0) continue;
      std::vector<std::pair<int, int>> stack;  // (left, next column to try)
      color[start] = 1;
      stack.emplace_back(start, 0);
      while (!stack.empty()) {
        auto& [x, j] = stack.back();
        bool advanced = false;
        for (; j < ll_; ++j) {
          const int e = cell(x, j);
          if (e < 0 || status_[e] == kOut || mr_[j] == x) continue;
          const int nxt = mr_[j];
          if (nxt < 0) continue;
          const int me = cell(nxt, j);
          if (status_[me] == kIn) continue;
          if (color[nxt] == 1) {
            // Close the cycle nxt -> ... -> x -> nxt.
            out.clear();
            out.push_back(e);
            out.push_back(me);
            int cur = x;
            while (cur != nxt) {
              out.push_back(cell(cur, via_col[cur]));
              out.push_back(cell(prev_left[cur], via_col[cur]));
              cur = prev_left[cur];
            }
            return true;
          }
          if (color[nxt] == 0) {
            color[nxt] = 1;
            prev_left[nxt] = x;
            via_col[nxt] = j;
            ++j;
            stack.emplace_back(nxt, 0);
            advanced = true;
            break;
          }
        }
        if (!advanced) {
          color[x] = 2;
          stack.pop_back();
        }
      }
    }
    return false;
  }

  // Any alternating path whose ends respect the cover rules: it may newly
  // cover an uncovered vertex, and it may uncover a vertex only if that
  // vertex's tie edge is tight (optional_*).
  bool find_path(std::vector<int>& out) {
    // Node ids: lefts 0..kk-1, rights kk..kk+ll-1.
    std::vector<char> visited(kk_ + ll_, 0);
    std::vector<int> par_cell(kk_ + ll_, -1), par_node(kk_ + ll_, -1);

    auto build = [&](int end_node) {
      out.clear();
      for (int cur = end_node; par_cell[cur] >= 0; cur = par_node[cur]) out.push_back(par_cell[cur]);
    };

    // DFS from a left vertex whose matched edge (if any) is already removed on
    // the way in. Returns the end node or -1.
    std::vector<int> stack;
    auto explore = [&](int root_left) -> int {
      stack.clear();
      stack.push_back(root_left);
      visited[root_left] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int j = 0; j < ll_; ++j) {
          const int e = cell(x, j);
          if (e < 0 || status_[e] == kOut || mr_[j] == x || visited[kk_ + j]) continue;
          visited[kk_ + j] = 1;
          par_cell[kk_ + j] = e;
          par_node[kk_ + j] = x;
          if (mr_[j] < 0) return kk_ + j;  // newly covered column
          const int nxt = mr_[j];
          const int me = cell(nxt, j);
          if (status_[me] == kIn || visited[nxt]) continue;
          visited[nxt] = 1;
          par_cell[nxt] = me;
          par_node[nxt] = kk_ + j;
          if (optional_l_[nxt]) return nxt;  // row nxt may give up its match
          stack.push_back(nxt);
        }
      }
      return -1;
    };

    for (int i = 0; i < kk_; ++i) {
      if (ml_[i] >= 0 || visited[i]) continue;
      const int end = explore(i);
      if (end >= 0) {
        build(end);
        return true;
      }
    }
    for (int j = 0; j < ll_; ++j) {
      if (mr_[j] < 0 || !optional_r_[j] || visited[kk_ + j]) continue;
      const int x = mr_[j];
      const int me = cell(x, j);
      if (status_[me] == kIn || visited[x]) continue;
      visited[kk_ + j] = 1;
      visited[x] = 1;
      par_cell[x] = me;
      par_node[x] = kk_ + j;
      if (optional_l_[x]) {  // drop the single edge (x, j)
        build(x);
        return true;
      }
      const int end = explore(x);
      if (end >= 0) {
        build(end);
        return true;
      }
    }
    return false;
  }

  bool find_structure(std::vector<int>& out) { return find_cycle(out) || find_path(out); }

  // Emits every matching of the current subfamily; the current matching must
  // not have been emitted yet. Returns false when the sink stopped the stream.
  bool rec() {
    if (!emit()) return false;
    std::vector<int> structure;
    std::vector<int> decided;
    bool ok = true;
    while (find_structure(structure)) {
      const int e = structure.front();
      const auto& [i, j] = edges_[e];
      const bool was_matched = (mr_[j] == i);
      status_[e] = was_matched ? kOut : kIn;
      apply(structure);
      ok = rec();
      if (!ok) return false;
      apply(structure);  // flip back
      status_[e] = was_matched ? kIn : kOut;
      decided.push_back(e);
    }
    for (const int e : decided) status_[e] = kFree;
    return true;
  }

  const MwmSolver& s_;
  const std::function<bool(const Matching&)>& sink_;
  int kk_, ll_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> cell_;
  std::vector<char> status_;
  std::vector<char> scratch_;
  std::vector<char> optional_l_, optional_r_;
  std::vector<int> ml_, mr_;
  std::size_t emitted_ = 0;
};

}  // namespace

std::size_t enumerate_mwms(const MwmSolver& solver,
                           const std::function<bool(const Matching&)>& sink) {
  if (!solver.solved()) fail(ErrorKind::UsageError, "enumerate_mwms requires a solved instance");
  MwmEnumerator mwme(solver, sink);
  return mwme.run();
}

}  // namespace mcst
