#pragma once

#include <vector>

#include "mcst/solver.hpp"
#include "mcst/tree.hpp"
#include "mcst/weights.hpp"

namespace mcst {

// Square assignment instance; entry (i, j) is the weight of pairing left i
// with right j, neg_inf marks a missing edge.
struct AssignmentInstance {
  int n = 0;
  std::vector<Weight> weights;  // n x n, row-major

  AssignmentInstance() = default;
  explicit AssignmentInstance(int n_, Weight fill = neg_inf())
      : n(n_), weights(static_cast<size_t>(n_) * n_, fill) {}

  Weight& at(int i, int j) { return weights[static_cast<size_t>(i) * n + j]; }
  Weight at(int i, int j) const { return weights[static_cast<size_t>(i) * n + j]; }
};

// Assignment problem recast as a subtree problem on two stars: left vertices
// become leaves of one star, right vertices leaves of the other. Weights are
// first shifted to be strictly positive (shift = 1 + max(0, -min)), then every
// finite pair (u_i, v_j) scores the shifted weight plus n*N and the two
// centers score n*N, where N is the largest shifted weight. The bonus makes
// maximum mappings as large as possible, so the optimum maps all leaves
// whenever a perfect matching of finite entries exists.
struct ReducedAssignment {
  Tree g;  // star; vertex 0 is the center, leaf i+1 is left vertex i
  Tree h;  // star; vertex 0 is the center, leaf j+1 is right vertex j
  WeightModel model;
  int n = 0;
  Weight shift = 0.0;
  Weight big = 0.0;  // N, computed after shifting
};

ReducedAssignment assignment_to_mcst(const AssignmentInstance& inst);

struct RecoveredMatching {
  std::vector<std::pair<int, int>> pairs;  // (left, right) in instance indexing
  Weight weight = 0.0;                     // in the original (unshifted) weights
};

// Reads a perfect matching off a solved reduced instance and undoes the shift
// and bonus: W(matching) = W(mapping) - p*n*N - |M|*shift with p mapped
// vertices. Throws NoPerfectMatching when fewer than n+1 vertices are mapped.
RecoveredMatching recover_mwpm(const McstResult& result, const ReducedAssignment& reduced);

}  // namespace mcst
