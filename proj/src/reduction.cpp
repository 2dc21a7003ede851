#include "mcst/reduction.hpp"

#include <algorithm>
#include <string>

#include "mcst/errors.hpp"

namespace mcst {

namespace {

Tree star_with_labels(const std::string& center, const std::string& leaf_prefix, int leaves) {
  std::vector<std::string> labels{center};
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 0; i < leaves; ++i) {
    labels.push_back(leaf_prefix + std::to_string(i));
    edges.emplace_back(0, i + 1, "-");
  }
  return build_tree(std::move(labels), std::move(edges));
}

}  // namespace

ReducedAssignment assignment_to_mcst(const AssignmentInstance& inst) {
  if (inst.n < 1) fail(ErrorKind::EmptyInstance, "assignment instance needs n >= 1");

  ReducedAssignment red;
  red.n = inst.n;
  red.g = star_with_labels("cg", "u", inst.n);
  red.h = star_with_labels("ch", "v", inst.n);

  Weight min_finite = 0.0;
  bool any_finite = false;
  for (const Weight w : inst.weights) {
    if (is_neg_inf(w)) continue;
    min_finite = any_finite ? std::min(min_finite, w) : w;
    any_finite = true;
  }
  red.shift = 1.0 + std::max(0.0, any_finite ? -min_finite : 0.0);
  red.big = 0.0;
  for (const Weight w : inst.weights)
    if (!is_neg_inf(w)) red.big = std::max(red.big, w + red.shift);

  const Weight bonus = static_cast<Weight>(inst.n) * red.big;
  red.model = WeightModel::table();
  red.model.default_vertex = neg_inf();
  red.model.default_edge = 0.0;
  red.model.set_vertex("cg", "ch", bonus);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (!is_neg_inf(inst.at(i, j)))
        red.model.set_vertex("u" + std::to_string(i), "v" + std::to_string(j),
                             inst.at(i, j) + red.shift + bonus);
  return red;
}

RecoveredMatching recover_mwpm(const McstResult& result, const ReducedAssignment& reduced) {
  const long long p = static_cast<long long>(result.witness.pairs.size());
  if (p != reduced.n + 1)
    fail(ErrorKind::NoPerfectMatching,
         "mapped " + std::to_string(p) + " vertices, need " + std::to_string(reduced.n + 1) +
             "; the instance admits no perfect matching");

  RecoveredMatching rec;
  for (const auto& [gu, hv] : result.witness.pairs) {
    if (gu == 0 || hv == 0) continue;  // the mapped center pair
    rec.pairs.emplace_back(gu - 1, hv - 1);
  }
  const Weight bonus = static_cast<Weight>(reduced.n) * reduced.big;
  rec.weight = result.weight - static_cast<Weight>(p) * bonus -
               static_cast<Weight>(rec.pairs.size()) * reduced.shift;
  return rec;
}

}  // namespace mcst
