#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mcst/weights.hpp"

namespace mcst {

// Dense bipartite maximum-weight-matching instance. neg_inf entries are
// non-edges. Matchings of any cardinality compete, so negative entries never
// appear in an optimum.
struct BipartiteInstance {
  int left = 0;
  int right = 0;
  std::vector<Weight> weights;  // left x right, row-major

  BipartiteInstance() = default;
  BipartiteInstance(int l, int r, Weight fill = neg_inf())
      : left(l), right(r), weights(static_cast<size_t>(l) * r, fill) {}

  Weight& at(int i, int j) { return weights[static_cast<size_t>(i) * right + j]; }
  Weight at(int i, int j) const { return weights[static_cast<size_t>(i) * right + j]; }
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left, right), ascending left
  Weight weight = 0.0;
};

struct MwmStats {
  long long base_iterations = 0;    // augmentations spent on the base solve
  long long family_iterations = 0;  // augmentations spent on deleted-column re-solves
  long long family_resolves = 0;    // deleted columns that actually needed one
};

// Maximum weight matching by the Hungarian method on a doubled graph: the
// instance is mirrored and every vertex is tied to its mirror by a zero-weight
// edge, which turns the MWM problem into a perfect-matching one. Negative and
// neg_inf entries are dropped up front. The smaller side always plays the row
// role internally; each augmentation is a shortest-path step over reduced
// costs, and the optimal duals stay available so that solving the same
// instance with one right vertex deleted costs a single extra augmentation.
class MwmSolver {
 public:
  MwmSolver() = default;
  explicit MwmSolver(const BipartiteInstance& inst, double tol = 0.0) { reset(inst, tol); }

  // Re-targets the solver, reusing allocations.
  void reset(const BipartiteInstance& inst, double tol = 0.0);

  // One augmentation (matching size +1 on the doubled graph); false when the
  // doubled matching is already perfect. Duals stay feasible and matched edges
  // tight across calls.
  bool iterate();

  // Runs iterate() to completion.
  void solve();

  bool solved() const { return solved_; }

  // The MWM of the original instance (projection of the doubled matching).
  Matching matching() const;

  // MWM of the instance with right column `col` deleted, warm-started from the
  // solved state; the solver state is restored before returning. Requires
  // solved().
  Matching matching_without(int col);

  const MwmStats& stats() const { return stats_; }
  double tolerance() const { return tol_; }

  // Internal orientation: rows = the smaller of (left, right).
  bool sides_swapped() const { return swapped_; }
  int rows() const { return kk_; }
  int cols() const { return ll_; }
  // Weight used internally: the instance entry, with negatives and neg_inf
  // replaced by neg_inf.
  Weight kept(int i, int j) const { return wk_[static_cast<size_t>(i) * ll_ + j]; }

  // Duals over the doubled graph, internal orientation. Left vertices:
  // rows 0..kk-1 then column-mirrors kk..kk+ll-1; right vertices: columns
  // 0..ll-1 then row-mirrors ll..ll+kk-1.
  const std::vector<double>& duals_left() const { return dl_; }
  const std::vector<double>& duals_right() const { return dr_; }

  // Checks d(a)+d(b) >= w on every doubled edge and equality on matched ones.
  bool validate_duals(std::string* why = nullptr) const;

 private:
  void augment_from(int left_vertex);
  void project_internal(Matching& out) const;

  int kk_ = 0, ll_ = 0;
  bool swapped_ = false;
  bool solved_ = false;
  double tol_ = 0.0;
  std::vector<Weight> wk_;   // kk x ll kept weights
  std::vector<Weight> wkT_;  // ll x kk transpose
  std::vector<double> dl_, dr_;
  std::vector<int> match_l_, match_r_;
  std::vector<unsigned char> dead_r_;
  // augmentation scratch
  std::vector<double> dist_;
  std::vector<int> pred_;
  std::vector<unsigned char> settled_;
  std::vector<std::pair<int, double>> tree_lefts_;
  std::vector<std::pair<int, double>> settled_rights_;
  // family snapshot
  std::vector<double> snap_dl_, snap_dr_;
  std::vector<int> snap_ml_, snap_mr_;
  MwmStats stats_;
};

// Solves one instance and returns the matching together with the solver state
// (duals and doubled matching), which enumeration and re-solves build on.
MwmSolver solve_mwm(const BipartiteInstance& inst, double tol = 0.0);

struct MwmFamily {
  Matching base;                  // MWM of the full instance
  std::vector<Matching> deleted;  // deleted[j] = MWM with right column j removed
  MwmStats stats;
};

// Solves the instance once, then derives an MWM for every single-right-column
// deletion from the shared dual solution.
MwmFamily solve_mwm_family(const BipartiteInstance& inst, double tol = 0.0);

// Streams every MWM of the solved instance exactly once, deterministically,
// starting from solver.matching(). Alternatives are discovered as alternating
// cycles and paths in the tight subgraph of the doubled instance. The sink
// returns false to stop early. Returns the number of matchings emitted.
std::size_t enumerate_mwms(const MwmSolver& solver,
                           const std::function<bool(const Matching&)>& sink);

}  // namespace mcst
