#include "mcst/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mcst/errors.hpp"

namespace mcst {

uint64_t Rng::next() {
  // splitmix64
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and portable.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Rng Rng::fork(uint64_t salt) const {
  Rng child(state_ ^ (0x632be59bd9b4e019ULL * (salt + 1)));
  child.next();
  return child;
}

std::string format_weight(Weight w) {
  if (is_neg_inf(w)) return "-inf";
  if (std::floor(w) == w && std::abs(w) < 9.007199254740992e15)
    return std::to_string(static_cast<long long>(w));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

Weight parse_weight(const std::string& token) {
  if (token == "-inf") return neg_inf();
  try {
    size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size() || !is_finite_weight(v))
      fail(ErrorKind::ParseError, "bad weight '" + token + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad weight '" + token + "'");
  }
}

namespace {

// Line reader that strips '#' comments and blank lines and tracks numbers for
// error messages.
struct LineScanner {
  std::istream& in;
  int line_no = 0;

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
  }
};

int parse_index(const LineScanner& sc, const std::string& tok) {
  try {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0) sc.error("bad vertex id '" + tok + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    sc.error("bad vertex id '" + tok + "'");
  }
}

}  // namespace

Tree parse_tree(std::istream& in) {
  LineScanner sc{in};
  std::vector<std::string> tok;
  if (!sc.next(tok) || tok.size() != 2 || tok[0] != "t") {
    if (sc.line_no == 0) fail(ErrorKind::ParseError, "empty tree file");
    sc.error("expected 't <n>'");
  }
  const int n = parse_index(sc, tok[1]);
  if (n < 1) sc.error("tree order must be at least 1");

  std::vector<std::string> labels(n);
  std::vector<char> have(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!sc.next(tok) || tok.size() != 3 || tok[0] != "v") sc.error("expected 'v <id> <label>'");
    const int id = parse_index(sc, tok[1]);
    if (id >= n) sc.error("vertex id out of range");
    if (have[id]) sc.error("duplicate vertex id " + std::to_string(id));
    have[id] = 1;
    labels[id] = tok[2];
  }
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 0; i < n - 1; ++i) {
    if (!sc.next(tok) || tok.size() != 4 || tok[0] != "e")
      sc.error("expected 'e <id> <id> <label>' (" + std::to_string(n - 1) + " edges required)");
    edges.emplace_back(parse_index(sc, tok[1]), parse_index(sc, tok[2]), tok[3]);
  }
  if (sc.next(tok)) sc.error("unexpected trailing content");
  return build_tree(std::move(labels), std::move(edges));
}

Tree parse_tree_text(const std::string& text) {
  std::istringstream in(text);
  return parse_tree(in);
}

Tree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open tree file '" + path + "'");
  return parse_tree(in);
}

std::string serialize_tree(const Tree& tree) {
  std::ostringstream out;
  out << "t " << tree.order() << "\n";
  for (int v = 0; v < tree.order(); ++v) out << "v " << v << " " << tree.vertex_labels[v] << "\n";
  for (const auto& e : tree.edges) out << "e " << e.a << " " << e.b << " " << e.label << "\n";
  return out.str();
}

WeightModel parse_weight_model(std::istream& in) {
  WeightModel model = WeightModel::table();
  LineScanner sc{in};
  std::vector<std::string> tok;
  while (sc.next(tok)) {
    if (tok[0] == "default_vertex" && tok.size() == 2) {
      model.default_vertex = parse_weight(tok[1]);
    } else if (tok[0] == "default_edge" && tok.size() == 2) {
      model.default_edge = parse_weight(tok[1]);
    } else if (tok[0] == "v" && tok.size() == 4) {
      model.set_vertex(tok[1], tok[2], parse_weight(tok[3]));
    } else if (tok[0] == "e" && tok.size() == 4) {
      model.set_edge(tok[1], tok[2], parse_weight(tok[3]));
    } else {
      sc.error("expected 'default_vertex', 'default_edge', 'v' or 'e' directive");
    }
  }
  return model;
}

WeightModel parse_weight_model_text(const std::string& text) {
  std::istringstream in(text);
  return parse_weight_model(in);
}

WeightModel load_weight_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open weight file '" + path + "'");
  return parse_weight_model(in);
}

std::string serialize_weight_model(const WeightModel& model) {
  std::ostringstream out;
  out << "default_vertex " << format_weight(model.default_vertex) << "\n";
  out << "default_edge " << format_weight(model.default_edge) << "\n";
  for (const auto& [key, w] : model.vertex_table)
    out << "v " << key.first << " " << key.second << " " << format_weight(w) << "\n";
  for (const auto& [key, w] : model.edge_table)
    out << "e " << key.first << " " << key.second << " " << format_weight(w) << "\n";
  return out.str();
}

AssignmentInstance parse_assignment(std::istream& in) {
  LineScanner sc{in};
  std::vector<std::string> tok;
  if (!sc.next(tok) || tok.size() != 2 || tok[0] != "a") {
    if (sc.line_no == 0) fail(ErrorKind::ParseError, "empty assignment file");
    sc.error("expected 'a <n>'");
  }
  const int n = parse_index(sc, tok[1]);
  if (n < 1) sc.error("assignment size must be at least 1");
  AssignmentInstance inst(n);
  for (int i = 0; i < n; ++i) {
    if (!sc.next(tok) || static_cast<int>(tok.size()) != n)
      sc.error("expected a row of " + std::to_string(n) + " values");
    for (int j = 0; j < n; ++j) inst.at(i, j) = parse_weight(tok[j]);
  }
  if (sc.next(tok)) sc.error("unexpected trailing content");
  return inst;
}

AssignmentInstance parse_assignment_text(const std::string& text) {
  std::istringstream in(text);
  return parse_assignment(in);
}

AssignmentInstance load_assignment(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open assignment file '" + path + "'");
  return parse_assignment(in);
}

std::string serialize_isomorphism(const Isomorphism& iso) {
  std::ostringstream out;
  out << "weight " << format_weight(iso.weight) << "\n";
  for (const auto& [gu, hv] : iso.pairs) out << gu << " -> " << hv << "\n";
  return out.str();
}

Isomorphism parse_isomorphism_text(const std::string& text) {
  std::istringstream in(text);
  LineScanner sc{in};
  std::vector<std::string> tok;
  Isomorphism iso;
  if (!sc.next(tok) || tok.size() != 2 || tok[0] != "weight") sc.error("expected 'weight <w>'");
  iso.weight = parse_weight(tok[1]);
  while (sc.next(tok)) {
    if (tok.size() != 3 || tok[1] != "->") sc.error("expected '<g> -> <h>'");
    iso.pairs.emplace_back(parse_index(sc, tok[0]), parse_index(sc, tok[2]));
  }
  return iso;
}

Tree gen_random_tree(int n, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(rng.below(i)), i);
  return build_plain_tree(n, edges);
}

Tree gen_random_labeled_tree(int n, int label_count, Rng& rng) {
  std::vector<std::string> labels(n);
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(rng.below(label_count));
  for (int i = 1; i < n; ++i) {
    const int parent = static_cast<int>(rng.below(i));
    edges.emplace_back(parent, i, std::to_string(rng.below(label_count)));
  }
  return build_tree(std::move(labels), std::move(edges));
}

Tree gen_star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return build_plain_tree(n, edges);
}

}  // namespace mcst
