#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "mcst/matching.hpp"
#include "mcst/tree.hpp"
#include "mcst/weights.hpp"

namespace mcst {

// Partial injective vertex mapping between two trees whose domain and image
// induce subtrees and whose edges are preserved both ways.
struct Isomorphism {
  std::vector<std::pair<int, int>> pairs;  // (g vertex, h vertex), ascending g
  Weight weight = 0.0;

  bool empty() const { return pairs.empty(); }
};

// Table of rooted-subproblem optima: entry (u, s, v) holds the best weight of
// a mapping that sends u to v and stays inside the subtree of g below u (g
// rooted at root_g) and the subtree of h rooted at v oriented away from s.
// Entries are addressed by (u, RootedSubtreeIndex id of (v, s)).
struct DPTable {
  Tree g, h;
  WeightModel model;
  WeightMatrices wm;
  RootedView gview;  // rooted at root_g, references this table's g
  RootedSubtreeIndex hindex;
  int root_g = 0;
  bool store_matchings = false;
  std::vector<Weight> values;  // g.order() x hindex.count()
  // Full-traceback mode only: the child matching behind each entry, as
  // (g child, h neighbor) vertex pairs.
  std::vector<std::vector<std::pair<int, int>>> matchings;

  Weight best = neg_inf();
  int best_u = -1;
  int best_v = -1;
  int best_s = -1;

  Weight value(int u, int rtid) const { return values[static_cast<size_t>(u) * hindex.count() + rtid]; }

  // Child-matching instance for the pair (u, v): rows are children of u in
  // gview, columns the neighbors of v except skip_neighbor (-1 keeps all).
  // col_vertices, when given, receives the h vertex behind each column.
  void build_instance(int u, int v, int skip_neighbor, BipartiteInstance& out,
                      std::vector<int>* col_vertices = nullptr) const;

  // The matching behind entry (u, s, v), recomputed unless stored.
  std::vector<std::pair<int, int>> entry_matching(int u, int s, int v) const;
};

struct SolveStats {
  long long pairs_solved = 0;       // (u,v) pairs with a matching family
  long long base_iterations = 0;    // augmentations in base solves
  long long family_iterations = 0;  // augmentations in deleted-column re-solves
  // Worst observed family_iterations - (min(deg u, deg v) + 1) over all pairs;
  // nonpositive means every family stayed within its budget.
  long long max_family_excess = -1;
  bool family_bound_ok = true;
};

struct McstResult {
  Weight weight = neg_inf();
  Isomorphism witness;
  std::shared_ptr<DPTable> table;
  SolveStats stats;
};

struct SolveOptions {
  bool store_matchings = false;
};

// Weight of a maximum common subtree isomorphism between g and h, plus a
// witness mapping and the filled table. The root of g is fixed at vertex 0;
// every rooted orientation of h is considered, which suffices for the
// unrooted optimum. Weight of neg_inf (with an empty witness) means no vertex
// pair is mappable at all.
McstResult solve(const Tree& g, const Tree& h, const WeightModel& model,
                 const SolveOptions& options = {});

// Rooted variant: the optimum over mappings that send r to s (and stay in the
// corresponding rooted subtrees). Returns neg_inf and an empty mapping when
// r and s cannot be mapped.
std::pair<Weight, Isomorphism> solve_rooted(const Tree& g, int r, const Tree& h, int s,
                                            const WeightModel& model);

// Baseline that maximizes the rooted optimum over every pair of roots, with
// memoization across root pairs. Independent of solve()'s fixed-root table
// fill and used as its cross-check.
Weight solve_all_roots(const Tree& g, const Tree& h, const WeightModel& model);

// Traceback of a witness from a filled table. Throws EmptyOptimum when the
// table maximum is neg_inf.
Isomorphism extract_isomorphism(const DPTable& table);

}  // namespace mcst
