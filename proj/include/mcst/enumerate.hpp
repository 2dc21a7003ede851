#pragma once

#include <functional>

#include "mcst/solver.hpp"

namespace mcst {

// Streams every maximum-weight isomorphism between two trees exactly once.
//
// One anchored expansion runs per maximum table entry D(u, v, v): it maps u to
// v and recursively expands along every maximum matching of every mapped
// child instance, so alternatives multiply across independent subtrees.
// Entries D(u, s, v) with s != v are skipped; the corresponding mappings are
// already produced by the (u, v, v) entry. Distinct anchors yield distinct
// mappings because the anchor is the mapped g vertex closest to g's root.
class EnumerationStream {
 public:
  EnumerationStream(const Tree& g, const Tree& h, const WeightModel& model);

  Weight optimum() const { return result_.weight; }

  // Emits isomorphisms in deterministic order (anchors ascending by (u, v),
  // matching alternatives in engine order) until the stream is exhausted, the
  // sink returns false, or `limit` outputs were produced (0 = no limit).
  // Returns the number of isomorphisms emitted. Throws NoSolution when the
  // optimum is -inf.
  std::size_t run(const std::function<bool(const Isomorphism&)>& sink, std::size_t limit = 0);

 private:
  McstResult result_;
};

// All distinct maximum isomorphisms, streamed into sink; returns the count.
std::size_t enumerate_all(const Tree& g, const Tree& h, const WeightModel& model,
                          const std::function<bool(const Isomorphism&)>& sink,
                          std::size_t limit = 0);

// The number T of distinct maximum isomorphisms, without keeping any.
std::size_t count_all(const Tree& g, const Tree& h, const WeightModel& model);

}  // namespace mcst
