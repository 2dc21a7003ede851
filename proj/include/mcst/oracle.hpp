#pragma once

#include <string>
#include <vector>

#include "mcst/matching.hpp"
#include "mcst/solver.hpp"

namespace mcst {
namespace oracle {

// Exhaustive references for small inputs. Inputs beyond the budget are
// rejected so that an accidental large call fails loudly instead of hanging.
struct OracleBudget {
  int max_left = 8;
  int max_right = 8;
  int max_tree_order = 8;
};

struct MwmOracleResult {
  Weight weight = 0.0;
  // Every matching attaining the maximum, as sorted (left, right) pair lists,
  // in lexicographic order.
  std::vector<std::vector<std::pair<int, int>>> optima;
};

// Maximum over all matchings (including the empty one) by full enumeration.
MwmOracleResult brute_force_mwm(const BipartiteInstance& inst, const OracleBudget& budget = {});

struct McstOracleResult {
  Weight weight = neg_inf();  // neg_inf when no vertex pair is mappable
  // Every optimal isomorphism in canonical form (sorted pair lists), ordered.
  std::vector<std::vector<std::pair<int, int>>> optima;
};

// Maximum over every injective mapping with nonempty connected domain and
// image and edges preserved both ways, by enumerating connected domains and
// all edge-preserving embeddings of each.
McstOracleResult brute_force_mcst(const Tree& g, const Tree& h, const WeightModel& model,
                                  const OracleBudget& budget = {});

struct ValidationResult {
  bool valid = true;
  std::string reason;
  Weight weight = 0.0;  // recomputed weight when valid
};

// Checks injectivity, connectivity of domain and image, bidirectional edge
// preservation on the mapped set, and recomputes the weight.
ValidationResult validate_isomorphism(const Tree& g, const Tree& h,
                                      const std::vector<std::pair<int, int>>& mapping,
                                      const WeightModel& model);

}  // namespace oracle
}  // namespace mcst
