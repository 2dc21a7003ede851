#include "mcst/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <tuple>

#include "mcst/errors.hpp"

namespace mcst {

namespace {

// Lazily enumerated maximum matchings of one child instance, fetched in
// engine order and cached, so each alternative is computed once per stream.
struct NodeAlternatives {
  MwmSolver solver;
  std::vector<int> col_vertices;
  std::vector<int> row_vertices;
  std::vector<std::vector<std::pair<int, int>>> fetched;  // (g child, h vertex)
  bool exhausted = false;

  // Returns the idx-th maximum matching, or nullptr when there are fewer.
  const std::vector<std::pair<int, int>>* get(std::size_t idx) {
    while (fetched.size() <= idx && !exhausted) {
      const std::size_t want = fetched.size();
      std::size_t seen = 0;
      bool captured = false;
      enumerate_mwms(solver, [&](const Matching& m) {
        if (seen++ < want) return true;
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(m.pairs.size());
        for (const auto& [i, j] : m.pairs) pairs.emplace_back(row_vertices[i], col_vertices[j]);
        fetched.push_back(std::move(pairs));
        captured = true;
        return false;
      });
      if (!captured) exhausted = true;
    }
    return idx < fetched.size() ? &fetched[idx] : nullptr;
  }
};

class Expander {
 public:
  Expander(const DPTable& table, const std::function<bool(const Isomorphism&)>& sink,
           std::size_t limit)
      : t_(table), sink_(sink), limit_(limit) {}

  std::size_t run() {
    const int m = t_.h.order();
    for (int u = 0; u < t_.g.order(); ++u) {
      for (int v = 0; v < m; ++v) {
        if (t_.value(u, v) != t_.best) continue;  // id(v, v) == v
        if (!expand_node(u, v, v, [this] { return emit(); })) return emitted_;
      }
    }
    return emitted_;
  }

 private:
  using Cont = std::function<bool()>;

  NodeAlternatives& node(int u, int v, int parent) {
    const auto key = std::make_tuple(u, v, parent);
    auto it = nodes_.find(key);
    if (it != nodes_.end()) return it->second;
    NodeAlternatives& alt = nodes_[key];
    BipartiteInstance inst;
    t_.build_instance(u, v, parent == v ? -1 : parent, inst, &alt.col_vertices);
    alt.row_vertices = t_.gview.children[u];
    alt.solver.reset(inst);
    alt.solver.solve();
    return alt;
  }

  bool expand_node(int u, int v, int parent, const Cont& then) {
    current_.emplace_back(u, v);
    NodeAlternatives& alt = node(u, v, parent);
    bool keep_going = true;
    for (std::size_t mi = 0; keep_going; ++mi) {
      const auto* matching = alt.get(mi);
      if (!matching) break;
      keep_going = expand_pairs(*matching, 0, v, then);
    }
    current_.pop_back();
    return keep_going;
  }

  bool expand_pairs(const std::vector<std::pair<int, int>>& matching, std::size_t idx, int v,
                    const Cont& then) {
    if (idx == matching.size()) return then();
    const auto& [cu, cv] = matching[idx];
    return expand_node(cu, cv, v,
                       [this, &matching, idx, v, &then] { return expand_pairs(matching, idx + 1, v, then); });
  }

  bool emit() {
    Isomorphism iso;
    iso.pairs = current_;
    std::sort(iso.pairs.begin(), iso.pairs.end());
    iso.weight = t_.best;
#ifndef NDEBUG
    if (static_cast<long long>(t_.g.order()) * t_.h.order() <= 400)
      assert(debug_seen_.insert(iso.pairs).second && "duplicate isomorphism emitted");
#endif
    ++emitted_;
    if (!sink_(iso)) return false;
    return limit_ == 0 || emitted_ < limit_;
  }

  const DPTable& t_;
  const std::function<bool(const Isomorphism&)>& sink_;
  std::size_t limit_;
  std::size_t emitted_ = 0;
  std::vector<std::pair<int, int>> current_;
  std::map<std::tuple<int, int, int>, NodeAlternatives> nodes_;
#ifndef NDEBUG
  std::set<std::vector<std::pair<int, int>>> debug_seen_;
#endif
};

}  // namespace

EnumerationStream::EnumerationStream(const Tree& g, const Tree& h, const WeightModel& model) {
  SolveOptions options;
  options.store_matchings = false;
  result_ = solve(g, h, model, options);
}

std::size_t EnumerationStream::run(const std::function<bool(const Isomorphism&)>& sink,
                                   std::size_t limit) {
  if (is_neg_inf(result_.weight))
    fail(ErrorKind::NoSolution, "no common subtree: every vertex pair is forbidden");
  Expander expander(*result_.table, sink, limit);
  return expander.run();
}

std::size_t enumerate_all(const Tree& g, const Tree& h, const WeightModel& model,
                          const std::function<bool(const Isomorphism&)>& sink, std::size_t limit) {
  EnumerationStream stream(g, h, model);
  return stream.run(sink, limit);
}

std::size_t count_all(const Tree& g, const Tree& h, const WeightModel& model) {
  EnumerationStream stream(g, h, model);
  return stream.run([](const Isomorphism&) { return true; });
}

}  // namespace mcst
