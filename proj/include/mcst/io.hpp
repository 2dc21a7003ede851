#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mcst/reduction.hpp"
#include "mcst/solver.hpp"
#include "mcst/tree.hpp"
#include "mcst/weights.hpp"

namespace mcst {

// Deterministic generator: splitmix64 stream with rejection sampling for
// bounded draws, so identical seeds give identical instances everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // Uniform in [0, bound); bound >= 1.
  uint64_t below(uint64_t bound);
  // Derives an independent substream.
  Rng fork(uint64_t salt) const;

 private:
  uint64_t state_;
};

// Weight parsing and printing. Finite integers print without decimals, other
// finite values with enough digits to round-trip; -inf is spelled "-inf".
std::string format_weight(Weight w);
Weight parse_weight(const std::string& token);  // rejects +inf and NaN

// Tree text format, one record per line, '#' starts a comment:
//   t <n>
//   v <id> <label>     (n lines, ids 0..n-1)
//   e <id> <id> <label> (n-1 lines)
Tree parse_tree(std::istream& in);
Tree parse_tree_text(const std::string& text);
Tree load_tree(const std::string& path);
std::string serialize_tree(const Tree& tree);

// Weight table format, one directive per line, '#' comments:
//   default_vertex <w> | default_edge <w>
//   v <labelA> <labelB> <w>
//   e <labelA> <labelB> <w>
// Pairs are unordered; later directives win.
WeightModel parse_weight_model(std::istream& in);
WeightModel parse_weight_model_text(const std::string& text);
WeightModel load_weight_model(const std::string& path);
std::string serialize_weight_model(const WeightModel& model);

// Assignment matrix format: first line "a <n>", then n rows of n values
// ("-inf" allowed).
AssignmentInstance parse_assignment(std::istream& in);
AssignmentInstance parse_assignment_text(const std::string& text);
AssignmentInstance load_assignment(const std::string& path);

// Mapping output: "weight <w>" then one "g -> h" line per pair, ascending g.
std::string serialize_isomorphism(const Isomorphism& iso);
Isomorphism parse_isomorphism_text(const std::string& text);

// Random tree: vertex i (i >= 1) attaches to a uniformly random earlier
// vertex. Labels are all "-".
Tree gen_random_tree(int n, Rng& rng);
// As above with vertex and edge labels drawn uniformly from "0".."count-1".
Tree gen_random_labeled_tree(int n, int label_count, Rng& rng);
// Star: vertex 0 is the center.
Tree gen_star(int n);

}  // namespace mcst
