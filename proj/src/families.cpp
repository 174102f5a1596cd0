#include "gtutte/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "gtutte/error.hpp"

namespace gtutte {

namespace {

void check_endpoints(std::size_t n, const std::vector<VertexPair>& pairs, const char* what) {
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::InvalidCarrier, std::string(what) + " endpoint out of range");
    }
  }
  if (pairs.size() > kMaxGroundSize) throw Error(ErrorKind::GroundSetTooLarge, "more than 64 edges");
}

// Grows the root's tree one edge at a time. Any edge of A that joins two
// already reached vertices, or is never reached, makes A infeasible.
bool grows_tree(const std::vector<VertexPair>& edges, std::size_t vertex_count, std::size_t root, ElementSubset a,
                bool directed) {
  thread_local std::vector<char> reached;
  reached.assign(vertex_count, 0);
  reached[root] = 1;
  ElementSubset pending = a;
  bool progress = true;
  while (pending && progress) {
    progress = false;
    for (ElementSubset rest = pending; rest; rest &= rest - 1) {
      const ElementSubset bit = rest & -rest;
      const auto [u, v] = edges[static_cast<std::size_t>(std::countr_zero(bit))];
      const bool ru = reached[u], rv = reached[v];
      if (ru && rv) return false;
      if (ru) {
        reached[v] = 1;
      } else if (rv && !directed) {
        reached[u] = 1;
      } else {
        continue;
      }
      pending &= ~bit;
      progress = true;
    }
  }
  return pending == 0;
}

std::vector<std::string> default_labels(const std::vector<std::string>& given, std::size_t n, const char* prefix) {
  if (!given.empty()) return given;
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
  return line.substr(start);
}

std::size_t parse_vertex(const std::string& token, std::size_t line_no) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(c); })) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad vertex '" + token + "'");
  }
  return std::stoul(token);
}

struct GraphLines {
  std::optional<std::size_t> root;
  std::optional<std::size_t> vertices;
  std::vector<VertexPair> pairs;
  bool has_edge = false;
  bool has_arc = false;
  std::size_t max_vertex = 0;
};

GraphLines parse_graph_lines(const std::vector<std::pair<std::size_t, std::string>>& lines) {
  GraphLines out;
  for (const auto& [line_no, text] : lines) {
    std::istringstream ls(text);
    std::string keyword, a, b, extra;
    ls >> keyword >> a;
    auto where = [&] { return "line " + std::to_string(line_no); };
    if (keyword == "root" || keyword == "vertices") {
      if (a.empty() || (ls >> extra)) throw Error(ErrorKind::ParseError, where() + ": expected one integer");
      const std::size_t v = parse_vertex(a, line_no);
      if (keyword == "root") {
        if (out.root) throw Error(ErrorKind::ParseError, where() + ": second root line");
        out.root = v;
        out.max_vertex = std::max(out.max_vertex, v);
      } else {
        out.vertices = v;
      }
    } else if (keyword == "edge" || keyword == "arc") {
      ls >> b;
      if (b.empty() || (ls >> extra)) throw Error(ErrorKind::ParseError, where() + ": expected two vertices");
      const std::size_t u = parse_vertex(a, line_no), v = parse_vertex(b, line_no);
      (keyword == "edge" ? out.has_edge : out.has_arc) = true;
      out.pairs.emplace_back(u, v);
      out.max_vertex = std::max({out.max_vertex, u, v});
    } else {
      throw Error(ErrorKind::ParseError, where() + ": unknown keyword '" + keyword + "'");
    }
  }
  if (out.has_edge && out.has_arc) throw Error(ErrorKind::ParseError, "file mixes edge and arc lines");
  return out;
}

std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (!line.empty()) out.emplace_back(line_no, line);
  }
  return out;
}

std::size_t vertex_total(const GraphLines& g) {
  const std::size_t implied = g.max_vertex + 1;
  if (g.vertices) {
    if (*g.vertices < implied) throw Error(ErrorKind::ParseError, "vertices line smaller than the largest id");
    return *g.vertices;
  }
  return implied;
}

}  // namespace

// ---------------------------------------------------------------------------
// Carriers

void RootedGraph::validate() const {
  if (root >= vertex_count) throw Error(ErrorKind::InvalidCarrier, "root out of range");
  check_endpoints(vertex_count, edges, "edge");
  if (!labels.empty() && labels.size() != edges.size()) throw Error(ErrorKind::InvalidCarrier, "label count");
}

void RootedDigraph::validate() const {
  if (root >= vertex_count) throw Error(ErrorKind::InvalidCarrier, "root out of range");
  check_endpoints(vertex_count, arcs, "arc");
  if (!labels.empty() && labels.size() != arcs.size()) throw Error(ErrorKind::InvalidCarrier, "label count");
}

void UnrootedGraph::validate() const { check_endpoints(vertex_count, edges, "edge"); }

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols, 0) {
  if (rows > 64) throw Error(ErrorKind::InvalidCarrier, "binary matrices are limited to 64 rows");
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ParseError, "matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw Error(ErrorKind::ParseError, "matrix entries must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_) throw Error(ErrorKind::ElementOutOfRange, "row index");
  const std::uint64_t bit = std::uint64_t{1} << r;
  columns_.at(c) = value ? (columns_[c] | bit) : (columns_[c] & ~bit);
}

void BinaryMatrix::append_column(std::uint64_t bits) {
  if (rows_ < 64 && (bits >> rows_)) throw Error(ErrorKind::DimensionMismatch, "column taller than the matrix");
  columns_.push_back(bits);
}

std::vector<std::string> BinaryMatrix::row_strings() const {
  std::vector<std::string> out(rows_, std::string(cols(), '0'));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (get(r, c)) out[r][c] = '1';
  return out;
}

std::size_t gf2_rank(std::vector<std::uint64_t> vectors) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::uint64_t pivot = vectors[i];
    if (!pivot) continue;
    ++rank;
    const std::uint64_t low = pivot & -pivot;
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (vectors[j] & low) vectors[j] ^= pivot;
    }
  }
  return rank;
}

std::size_t BinaryMatrix::rank() const { return gf2_rank(columns_); }

BinaryMatrix BinaryMatrix::with_row_added(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= rows_ || i == j) throw Error(ErrorKind::ElementOutOfRange, "row indices");
  BinaryMatrix out = *this;
  for (auto& col : out.columns_) {
    if ((col >> i) & 1u) col ^= std::uint64_t{1} << j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

Greedoid::Oracle branching_feasibility(const RootedGraph& g) {
  g.validate();
  return [edges = g.edges, n = g.vertex_count, root = g.root](ElementSubset a) {
    return grows_tree(edges, n, root, a, false);
  };
}

Greedoid::Oracle directed_branching_feasibility(const RootedDigraph& d) {
  d.validate();
  return [arcs = d.arcs, n = d.vertex_count, root = d.root](ElementSubset a) {
    return grows_tree(arcs, n, root, a, true);
  };
}

Greedoid::Oracle binary_feasibility(const BinaryMatrix& m) {
  std::vector<std::uint64_t> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return [cols = std::move(cols), rows = m.rows()](ElementSubset a) {
    const std::size_t k = subset_size(a);
    if (k == 0) return true;
    if (k > rows) return false;
    const std::uint64_t mask = full_subset(k);
    std::uint64_t basis[64];
    std::size_t used = 0;
    for (ElementSubset rest = a; rest; rest &= rest - 1) {
      std::uint64_t v = cols[static_cast<std::size_t>(std::countr_zero(rest))] & mask;
      for (std::size_t i = 0; i < used; ++i) {
        const std::uint64_t low = basis[i] & -basis[i];
        if (v & low) v ^= basis[i];
      }
      if (!v) return false;
      // Keep pivots distinct: clear the new pivot bit from earlier rows.
      const std::uint64_t low = v & -v;
      for (std::size_t i = 0; i < used; ++i) {
        if (basis[i] & low) basis[i] ^= v;
      }
      basis[used++] = v;
    }
    return true;
  };
}

Greedoid greedoid_of(const RootedGraph& g) {
  return Greedoid(g.edges.size(), branching_feasibility(g), default_labels(g.labels, g.edges.size(), "e"));
}

Greedoid greedoid_of(const RootedDigraph& d) {
  return Greedoid(d.arcs.size(), directed_branching_feasibility(d), default_labels(d.labels, d.arcs.size(), "a"));
}

Greedoid greedoid_of(const BinaryMatrix& m) {
  return Greedoid(m.cols(), binary_feasibility(m), default_labels({}, m.cols(), ""));
}

Greedoid greedoid_of(const Carrier& c) {
  return std::visit([](const auto& x) { return greedoid_of(x); }, c);
}

std::size_t element_count(const Carrier& c) {
  struct {
    std::size_t operator()(const RootedGraph& g) const { return g.edges.size(); }
    std::size_t operator()(const RootedDigraph& d) const { return d.arcs.size(); }
    std::size_t operator()(const BinaryMatrix& m) const { return m.cols(); }
  } visitor;
  return std::visit(visitor, c);
}

std::string family_name(const Carrier& c) {
  static const char* names[] = {"rooted graph", "rooted digraph", "binary matrix"};
  return names[c.index()];
}

// ---------------------------------------------------------------------------
// Standard families

RootedGraph rooted_path(std::size_t k) {
  RootedGraph g{k + 1, {}, 0, {}};
  for (std::size_t i = 0; i < k; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

RootedGraph rooted_star(std::size_t k) {
  RootedGraph g{k + 1, {}, 0, {}};
  for (std::size_t i = 1; i <= k; ++i) g.edges.emplace_back(0, i);
  return g;
}

RootedDigraph directed_path(std::size_t k) {
  RootedDigraph d{k + 1, {}, 0, {}};
  for (std::size_t i = 0; i < k; ++i) d.arcs.emplace_back(i, i + 1);
  return d;
}

RootedDigraph directed_star(std::size_t k) {
  RootedDigraph d{k + 1, {}, 0, {}};
  for (std::size_t i = 1; i <= k; ++i) d.arcs.emplace_back(0, i);
  return d;
}

BinaryMatrix identity_matrix(std::size_t k) {
  BinaryMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix example_matrix() { return BinaryMatrix::from_strings({"1001", "1010", "0111"}); }

Carrier standard_family(StandardKind kind, std::size_t k) {
  switch (kind) {
    case StandardKind::Path: return rooted_path(k);
    case StandardKind::Star: return rooted_star(k);
    case StandardKind::DirectedPath: return directed_path(k);
    case StandardKind::DirectedStar: return directed_star(k);
    case StandardKind::Identity: return identity_matrix(k);
  }
  throw Error(ErrorKind::InvalidCarrier, "unknown standard family");
}

// ---------------------------------------------------------------------------
// Row additions

bool row_add_isomorphism_check(const BinaryMatrix& m, std::size_t i, std::size_t j, const EnumerationLimits& limits) {
  if (!(i < j)) throw Error(ErrorKind::ElementOutOfRange, "row_add_isomorphism_check needs i < j");
  return enumerate_feasible(greedoid_of(m), limits) == enumerate_feasible(greedoid_of(m.with_row_added(i, j)), limits);
}

RowAddReport row_add_isomorphism_report(const BinaryMatrix& m, const EnumerationLimits& limits) {
  RowAddReport report;
  report.vacuous = m.rows() < 2;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j)
      if (!row_add_isomorphism_check(m, i, j, limits)) {
        report.isomorphic = false;
        report.failing_pairs.emplace_back(i, j);
      }
  return report;
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

std::vector<bool> reach(std::size_t n, const std::vector<VertexPair>& pairs, std::size_t start, bool directed) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : pairs) {
    adj[u].push_back(v);
    if (!directed) adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

}  // namespace

std::vector<bool> root_component(const RootedGraph& g) {
  g.validate();
  return reach(g.vertex_count, g.edges, g.root, false);
}

bool is_connected(const RootedGraph& g) { return all_true(root_component(g)); }

bool is_root_connected(const RootedDigraph& d) {
  d.validate();
  return all_true(reach(d.vertex_count, d.arcs, d.root, true));
}

bool is_connected(const UnrootedGraph& g) {
  g.validate();
  if (g.vertex_count == 0) return true;
  return all_true(reach(g.vertex_count, g.edges, 0, false));
}

UnrootedGraph underlying(const RootedGraph& g) { return UnrootedGraph{g.vertex_count, g.edges}; }

RootedGraph rooted_at(const UnrootedGraph& g, std::size_t root) {
  RootedGraph out{g.vertex_count, g.edges, root, {}};
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Text formats

Carrier parse_carrier(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty input");
  const std::string& first = lines.front().second;
  const bool is_matrix = std::all_of(first.begin(), first.end(), [](char c) { return c == '0' || c == '1'; });
  if (is_matrix) {
    std::vector<std::string> rows;
    for (const auto& [no, text] : lines) rows.push_back(text);
    return BinaryMatrix::from_strings(rows);
  }
  const GraphLines g = parse_graph_lines(lines);
  if (!g.root) throw Error(ErrorKind::ParseError, "missing root line");
  const std::size_t n = vertex_total(g);
  if (g.has_arc) {
    RootedDigraph d{n, g.pairs, *g.root, {}};
    d.validate();
    return d;
  }
  RootedGraph rg{n, g.pairs, *g.root, {}};
  rg.validate();
  return rg;
}

Carrier read_carrier_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return parse_carrier(in);
}

UnrootedGraph parse_unrooted(std::istream& in) {
  const GraphLines g = parse_graph_lines(content_lines(in));
  if (g.has_arc) throw Error(ErrorKind::ParseError, "unrooted graphs take edge lines only");
  UnrootedGraph out{g.pairs.empty() && !g.vertices && !g.root ? 0 : vertex_total(g), g.pairs};
  out.validate();
  return out;
}

std::string format_carrier(const Carrier& c) {
  std::ostringstream os;
  if (const auto* m = std::get_if<BinaryMatrix>(&c)) {
    for (const auto& row : m->row_strings()) os << row << "\n";
    return os.str();
  }
  auto emit = [&](std::size_t n, std::size_t root, const std::vector<VertexPair>& pairs, const char* kw) {
    os << "vertices " << n << "\nroot " << root << "\n";
    for (const auto& [u, v] : pairs) os << kw << " " << u << " " << v << "\n";
  };
  if (const auto* g = std::get_if<RootedGraph>(&c)) emit(g->vertex_count, g->root, g->edges, "edge");
  if (const auto* d = std::get_if<RootedDigraph>(&c)) emit(d->vertex_count, d->root, d->arcs, "arc");
  return os.str();
}

}  // namespace gtutte
