#include "gtutte/bases.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "gtutte/error.hpp"
#include "gtutte/matrix.hpp"

namespace gtutte {

namespace {

constexpr const char* kLetters = "wxyz";

std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return mod(t, p);
}

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorKind::GroundSetTooLarge, "coefficient growth exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

bool is_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
}

std::size_t leading(const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

}  // namespace

void SimpleGraph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<bool> touched(n, false);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorKind::NotSimple, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::NotSimple, "loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorKind::NotSimple, "parallel edges between " + std::to_string(u) + " and " + std::to_string(v));
    }
    touched[u] = touched[v] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!touched[v]) throw Error(ErrorKind::NotSimple, "isolated vertex " + std::to_string(v));
  }
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g{n, {}};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g{n, {}};
  for (std::size_t v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
  return g;
}

SimpleGraph path_graph(std::size_t edges) {
  SimpleGraph g{edges + 1, {}};
  for (std::size_t v = 0; v < edges; ++v) g.edges.emplace_back(v, v + 1);
  return g;
}

// ---------------------------------------------------------------- fields

FieldSpec FieldSpec::gfp(std::int64_t p) {
  bool prime = p > 2 && p % 2 == 1;
  for (std::int64_t d = 3; prime && d * d <= p; d += 2) prime = p % d != 0;
  if (!prime) throw Error(ErrorKind::DimensionMismatch, "GF(p) needs an odd prime, got " + std::to_string(p));
  return FieldSpec(Kind::GFp, p);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case Kind::GF2: return "GF2";
    case Kind::GFp: return "GF" + std::to_string(p_);
    case Kind::Rationals: return "Q";
  }
  return "?";
}

void FieldSpec::normalize(std::vector<std::int64_t>& v) const {
  const std::size_t lead = leading(v);
  if (lead == v.size()) return;
  if (kind_ == Kind::Rationals) {
    std::int64_t g = 0;
    for (auto e : v) g = std::gcd(g, e);
    if (v[lead] < 0) g = -g;
    for (auto& e : v) e /= g;
    return;
  }
  const std::int64_t inv = inverse_mod(v[lead], p_);
  for (auto& e : v) e = mod(static_cast<std::int64_t>(static_cast<__int128>(e) * inv % p_), p_);
}

void FieldSpec::eliminate(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& row, std::size_t col) const {
  if (v[col] == 0) return;
  if (kind_ == Kind::Rationals) {
    const __int128 a = row[col], b = v[col];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked(a * v[i] - b * row[i]);
    normalize(v);
    return;
  }
  const __int128 f = static_cast<__int128>(v[col]) * inverse_mod(row[col], p_) % p_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = mod(static_cast<std::int64_t>((v[i] - f * row[i]) % p_), p_);
  }
}

std::vector<std::int64_t> Echelon::reduce(std::vector<std::int64_t> v) const {
  if (field_.kind() != FieldSpec::Kind::Rationals) {
    for (auto& e : v) e = mod(e, field_.characteristic());
  }
  for (std::size_t t = 0; t < rows_.size(); ++t) field_.eliminate(v, rows_[t], pivots_[t]);
  return v;
}

bool Echelon::contains(const std::vector<std::int64_t>& v) const { return is_zero(reduce(v)); }

bool Echelon::add(const std::vector<std::int64_t>& v) {
  auto r = reduce(v);
  if (is_zero(r)) return false;
  field_.normalize(r);
  pivots_.push_back(leading(r));
  rows_.push_back(std::move(r));
  return true;
}

void Echelon::pop() {
  rows_.pop_back();
  pivots_.pop_back();
}

std::vector<std::vector<std::int64_t>> Echelon::canonical() const {
  auto m = rows_;
  std::size_t next = 0;
  for (std::size_t col = 0; col < dim_ && next < m.size(); ++col) {
    std::size_t r = next;
    while (r < m.size() && m[r][col] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[next]);
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o != next) field_.eliminate(m[o], m[next], col);
    }
    ++next;
  }
  for (auto& row : m) field_.normalize(row);
  return m;
}

// ---------------------------------------------------------------- A_k

std::vector<std::int64_t> AkMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = entries[r][c];
  return out;
}

AkMatrix build_Ak(const SimpleGraph& g, std::size_t k) {
  g.validate();
  if (k == 0) throw Error(ErrorKind::DimensionMismatch, "k must be at least 1");
  AkMatrix a;
  a.graph = g;
  a.k = k;
  const std::size_t n = g.n, m = g.edges.size();
  a.entries.assign(n + m + m * k, std::vector<std::int64_t>(n + m + 4 * m * k, 0));
  for (std::size_t v = 0; v < n; ++v) {
    a.row_labels.push_back("v" + std::to_string(v + 1));
    a.col_labels.push_back("v" + std::to_string(v + 1));
    a.entries[v][v] = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    a.row_labels.push_back("e" + std::to_string(i + 1));
    a.col_labels.push_back("e" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::string sub = std::to_string(i + 1) + "," + std::to_string(j + 1);
      a.row_labels.push_back("f" + sub);
      for (std::size_t l = 0; l < 4; ++l) a.col_labels.push_back(std::string(1, kLetters[l]) + sub);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto [lo, hi] = std::minmax(g.edges[i].first, g.edges[i].second);
    a.entries[lo][a.edge_col(i)] = 1;
    a.entries[hi][a.edge_col(i)] = 1;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < 4; ++l) {
        const std::size_t c = a.block_col(i, j, l);
        a.entries[a.f_row(i, j)][c] = 1;
        if (l & 1) a.entries[lo][c] = 1;
        if (l & 2) a.entries[hi][c] = 1;
      }
    }
  }
  return a;
}

MkRestriction restrict_Mk(const AkMatrix& a) {
  MkRestriction r;
  const std::size_t first = a.graph.n + a.graph.edges.size();
  for (std::size_t c = first; c < a.cols(); ++c) r.columns.push_back(c);
  r.rank_target = a.graph.n + a.graph.edges.size() * a.k;
  return r;
}

std::size_t matroid_rank(const AkMatrix& a, const std::vector<std::size_t>& columns, const FieldSpec& field) {
  Echelon e(field, a.rows());
  for (auto c : columns) e.add(a.column(c));
  return e.rank();
}

// ---------------------------------------------------------------- counting

namespace {

struct DirectSearch {
  std::vector<std::vector<std::int64_t>> vectors;
  std::size_t target;
  Echelon echelon;
  const std::function<void(std::uint64_t)>* visit = nullptr;
  Integer count = 0;

  void run(std::size_t idx, std::uint64_t chosen) {
    if (echelon.rank() == target) {
      ++count;
      if (visit) (*visit)(chosen);
      return;
    }
    if (echelon.rank() + (vectors.size() - idx) < target) return;
    if (echelon.add(vectors[idx])) {
      run(idx + 1, chosen | (std::uint64_t{1} << idx));
      echelon.pop();
    }
    run(idx + 1, chosen);
  }
};

Integer direct_search(const AkMatrix& a, const FieldSpec& field, const std::function<void(std::uint64_t)>* visit,
                      const BasisCountLimits& limits) {
  const auto mk = restrict_Mk(a);
  if (mk.columns.size() > std::min<std::size_t>(limits.max_direct_ground, 64)) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "M_k has " + std::to_string(mk.columns.size()) + " elements; direct enumeration allows " +
                    std::to_string(std::min<std::size_t>(limits.max_direct_ground, 64)));
  }
  DirectSearch s{{}, mk.rank_target, Echelon(field, a.rows()), visit, 0};
  for (auto c : mk.columns) s.vectors.push_back(a.column(c));
  s.run(0, 0);
  return s.count;
}

using Subspace = std::vector<std::vector<std::int64_t>>;

// Each edge block owns its f rows, so a basis is a choice S_i per block with
// S_i independent, its f part of full rank k, and the vertex-space pieces
// W_i = {v : v + (zero f part) in span S_i} forming a direct sum of F^V.
Integer blockwise_count(const AkMatrix& a, const FieldSpec& field, const BasisCountLimits& limits) {
  const std::size_t k = a.k, n = a.graph.n;
  if (4 * k > limits.max_block_columns) {
    throw Error(ErrorKind::GroundSetTooLarge, "edge blocks have " + std::to_string(4 * k) + " columns; limit is " +
                                                  std::to_string(limits.max_block_columns));
  }
  // Local coordinates (f_1..f_k, v_a, v_b); the pieces depend only on k.
  std::map<Subspace, Integer> local;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (4 * k)); ++s) {
    Echelon e(field, k + 2);
    bool independent = true;
    for (std::size_t t = 0; t < 4 * k && independent; ++t) {
      if (!((s >> t) & 1)) continue;
      std::vector<std::int64_t> v(k + 2, 0);
      v[t / 4] = 1;
      v[k] = t & 1;
      v[k + 1] = (t >> 1) & 1;
      independent = e.add(v);
    }
    if (!independent) continue;
    Subspace w;
    std::size_t f_rank = 0;
    for (const auto& row : e.canonical()) {
      if (leading(row) < k) {
        ++f_rank;
      } else {
        w.push_back({row[k], row[k + 1]});
      }
    }
    if (f_rank == k) local[w] += 1;
  }

  std::map<Subspace, Integer> states{{Subspace{}, Integer(1)}};
  for (auto [u, v] : a.graph.edges) {
    const auto [lo, hi] = std::minmax(u, v);
    std::map<Subspace, Integer> next;
    for (const auto& [state, ways] : states) {
      for (const auto& [w, count] : local) {
        Echelon e(field, n);
        for (const auto& row : state) e.add(row);
        bool direct = true;
        for (const auto& piece : w) {
          std::vector<std::int64_t> g(n, 0);
          g[lo] = piece[0];
          g[hi] = piece[1];
          direct = direct && e.add(g);
        }
        if (direct) next[e.canonical()] += ways * count;
      }
    }
    states = std::move(next);
  }
  Integer total = 0;
  for (const auto& [state, ways] : states) {
    if (state.size() == n) total += ways;
  }
  return total;
}

}  // namespace

Integer count_bases(const AkMatrix& a, const FieldSpec& field, BasisCountMethod method,
                    const BasisCountLimits& limits) {
  if (method == BasisCountMethod::Auto) {
    const auto mk = restrict_Mk(a);
    method = binomial(mk.columns.size(), mk.rank_target) <= 100000 ? BasisCountMethod::Direct
                                                                   : BasisCountMethod::Blockwise;
  }
  return method == BasisCountMethod::Direct ? direct_search(a, field, nullptr, limits)
                                            : blockwise_count(a, field, limits);
}

void for_each_basis(const AkMatrix& a, const FieldSpec& field, const std::function<void(std::uint64_t)>& visit,
                    const BasisCountLimits& limits) {
  direct_search(a, field, &visit, limits);
}

// ---------------------------------------------------------------- templates

std::size_t Template::bidirected() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const EdgeState& e) { return e.kind == EdgeState::Kind::Bidirected; }));
}

std::string Template::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ' ';
    switch (edges[i].kind) {
      case EdgeState::Kind::Absent: out += '.'; break;
      case EdgeState::Kind::Bidirected: out += "<>"; break;
      case EdgeState::Kind::TowardLower: out += "<" + edges[i].label; break;
      case EdgeState::Kind::TowardHigher: out += edges[i].label + ">"; break;
      case EdgeState::Kind::Undirected: out += "-" + edges[i].label; break;
    }
  }
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

// Edge sets among `candidates` that form one circuit.
bool every_circuit_good(const SimpleGraph& g, const Template& t, const std::vector<std::size_t>& candidates) {
  const std::size_t u = candidates.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << u); ++s) {
    std::vector<std::size_t> degree(g.n, 0);
    std::vector<std::size_t> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t wz = 0, edges = 0, vertices = 0;
    for (std::size_t b = 0; b < u; ++b) {
      if (!((s >> b) & 1)) continue;
      const auto [x, y] = g.edges[candidates[b]];
      ++degree[x];
      ++degree[y];
      parent[find_root(parent, x)] = find_root(parent, y);
      ++edges;
      if (t.edges[candidates[b]].label == "wz") ++wz;
    }
    bool cycle = true;
    std::size_t component = g.n;
    for (std::size_t v = 0; v < g.n && cycle; ++v) {
      if (degree[v] == 0) continue;
      ++vertices;
      cycle = degree[v] == 2;
      if (component == g.n) component = find_root(parent, v);
      cycle = cycle && find_root(parent, v) == component;
    }
    if (cycle && vertices == edges && wz % 2 == 0) return false;
  }
  return true;
}

}  // namespace

bool is_feasible_template(const SimpleGraph& g, const Template& t, bool characteristic_two) {
  if (t.edges.size() != g.edges.size()) throw Error(ErrorKind::DimensionMismatch, "template size differs from edges");
  std::vector<std::size_t> indegree(g.n, 0);
  std::vector<std::size_t> undirected;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [lo, hi] = std::minmax(g.edges[i].first, g.edges[i].second);
    switch (t.edges[i].kind) {
      case EdgeState::Kind::Absent: break;
      case EdgeState::Kind::Bidirected: ++indegree[lo]; ++indegree[hi]; break;
      case EdgeState::Kind::TowardLower: ++indegree[lo]; break;
      case EdgeState::Kind::TowardHigher: ++indegree[hi]; break;
      case EdgeState::Kind::Undirected: undirected.push_back(i); break;
    }
  }
  if (std::any_of(indegree.begin(), indegree.end(), [](std::size_t d) { return d > 1; })) return false;

  if (characteristic_two) {
    std::vector<std::size_t> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto i : undirected) {
      const auto x = find_root(parent, g.edges[i].first), y = find_root(parent, g.edges[i].second);
      if (x == y) return false;
      parent[x] = y;
    }
  } else if (!every_circuit_good(g, t, undirected)) {
    return false;
  }

  for (std::uint64_t o = 0; o < (std::uint64_t{1} << undirected.size()); ++o) {
    auto d = indegree;
    for (std::size_t b = 0; b < undirected.size(); ++b) {
      const auto& e = g.edges[undirected[b]];
      ++d[((o >> b) & 1) ? e.first : e.second];
    }
    if (std::all_of(d.begin(), d.end(), [](std::size_t v) { return v == 1; })) return true;
  }
  return false;
}

TemplateCensus enumerate_feasible_templates(const SimpleGraph& g, bool characteristic_two) {
  g.validate();
  const std::size_t m = g.edges.size();
  if (m > 6) throw Error(ErrorKind::GroundSetTooLarge, "template enumeration allows at most 6 edges");
  using K = EdgeState::Kind;
  const std::vector<EdgeState> states = {{K::Absent, ""},       {K::Bidirected, ""},   {K::TowardLower, "wx"},
                                         {K::TowardLower, "yz"}, {K::TowardHigher, "wy"}, {K::TowardHigher, "xz"},
                                         {K::Undirected, "wz"},  {K::Undirected, "xy"}};
  TemplateCensus census;
  census.t.assign(g.n / 2 + 1, 0);
  std::vector<std::size_t> digits(m, 0);
  while (true) {
    Template t;
    for (auto d : digits) t.edges.push_back(states[d]);
    if (is_feasible_template(g, t, characteristic_two)) {
      census.t[t.bidirected()] += 1;
      census.templates.push_back(std::move(t));
    }
    std::size_t p = 0;
    while (p < m && ++digits[p] == states.size()) digits[p++] = 0;
    if (p == m) break;
  }
  return census;
}

bool template_of_subset(const AkMatrix& a, std::uint64_t subset, const FieldSpec& field, Template& out) {
  const std::size_t k = a.k;
  out.edges.assign(a.graph.edges.size(), {});
  for (std::size_t i = 0; i < a.graph.edges.size(); ++i) {
    Echelon e(field, a.rows());
    std::size_t size = 0, star = k;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t in_block = 0;
      for (std::size_t l = 0; l < 4; ++l) {
        if (!((subset >> ((i * k + j) * 4 + l)) & 1)) continue;
        ++in_block;
        if (!e.add(a.column(a.block_col(i, j, l)))) return false;
      }
      if (in_block == 0) return false;
      if (in_block == 2) star = j;
      size += in_block;
    }
    if (size == k) continue;
    const auto [lo, hi] = std::minmax(a.graph.edges[i].first, a.graph.edges[i].second);
    const bool has_lo = e.contains(a.column(a.vertex_col(lo)));
    const bool has_hi = e.contains(a.column(a.vertex_col(hi)));
    const bool has_edge = e.contains(a.column(a.edge_col(i)));
    auto& state = out.edges[i];
    if (has_lo && has_hi && has_edge) {
      state.kind = EdgeState::Kind::Bidirected;
      continue;
    }
    if (size != k + 1 || star == k) return false;
    for (std::size_t l = 0; l < 4; ++l) {
      if ((subset >> ((i * k + star) * 4 + l)) & 1) state.label += kLetters[l];
    }
    state.kind = has_lo ? EdgeState::Kind::TowardLower
                 : has_hi ? EdgeState::Kind::TowardHigher
                          : EdgeState::Kind::Undirected;
  }
  return true;
}

Template template_of_basis(const AkMatrix& a, std::uint64_t basis, const FieldSpec& field) {
  const auto mk = restrict_Mk(a);
  std::vector<std::size_t> cols;
  for (std::size_t t = 0; t < mk.columns.size(); ++t) {
    if ((basis >> t) & 1) cols.push_back(mk.columns[t]);
  }
  if (cols.size() != mk.rank_target || matroid_rank(a, cols, field) != mk.rank_target) {
    throw Error(ErrorKind::NotABasis, "subset of size " + std::to_string(cols.size()) + " is not a basis of M_k");
  }
  Template t;
  if (!template_of_subset(a, basis, field, t)) {
    throw Error(ErrorKind::NotABasis, "basis violates the block conditions");
  }
  return t;
}

Rational predicted_bases_per_template(std::size_t n, std::size_t m, std::size_t k, std::size_t b,
                                      bool characteristic_two) {
  const Rational kk(static_cast<long>(k));
  const Rational c = characteristic_two ? Rational(4) / kk + 12 : Rational(3) / kk + 13;
  return power(Rational(4), static_cast<long>(k * m)) * power(kk / 4, static_cast<long>(n)) *
         power(c, static_cast<long>(b));
}

// ---------------------------------------------------------------- matchings

MatchingRecovery recover_perfect_matchings(const SimpleGraph& g, const FieldSpec& field, BasisCountMethod method,
                                           const BasisCountLimits& limits) {
  g.validate();
  if (g.n % 2 != 0) throw Error(ErrorKind::OddVertexCount, std::to_string(g.n) + " vertices");
  const std::size_t h = g.n / 2, m = g.edges.size();
  MatchingRecovery r;
  ExactMatrix system(h + 1, h + 1);
  std::vector<Rational> rhs;
  for (std::size_t k = 1; k <= h + 1; ++k) {
    const auto a = build_Ak(g, k);
    auto chosen = method;
    if (chosen == BasisCountMethod::Auto) {
      const auto mk = restrict_Mk(a);
      chosen = binomial(mk.columns.size(), mk.rank_target) <= 100000 ? BasisCountMethod::Direct
                                                                     : BasisCountMethod::Blockwise;
    }
    r.b.push_back(count_bases(a, field, chosen, limits));
    r.b_method.push_back(chosen == BasisCountMethod::Direct ? "direct" : "blockwise");
    rhs.emplace_back(r.b.back());
    for (std::size_t j = 0; j <= h; ++j) {
      system(k - 1, j) = predicted_bases_per_template(g.n, m, k, j, field.characteristic_two());
    }
  }
  r.t = bareiss_solve(system, rhs);
  r.recovered = r.t[h];
  r.direct = count_perfect_matchings(g);
  return r;
}

namespace {

Integer matchings_from(const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& used) {
  std::size_t v = 0;
  while (v < used.size() && used[v]) ++v;
  if (v == used.size()) return 1;
  Integer total = 0;
  used[v] = true;
  for (auto u : adj[v]) {
    if (used[u]) continue;
    used[u] = true;
    total += matchings_from(adj, used);
    used[u] = false;
  }
  used[v] = false;
  return total;
}

}  // namespace

Integer count_perfect_matchings(const SimpleGraph& g) {
  if (g.edges.size() > 24) throw Error(ErrorKind::GroundSetTooLarge, "matching enumeration allows at most 24 edges");
  if (g.n % 2 != 0) return 0;
  std::vector<std::vector<std::size_t>> adj(g.n);
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> used(g.n, false);
  return matchings_from(adj, used);
}

nlohmann::json to_json(const MatchingRecovery& r) {
  nlohmann::json j;
  j["b_k"] = nlohmann::json::array();
  for (std::size_t i = 0; i < r.b.size(); ++i) {
    j["b_k"].push_back({{"k", i + 1}, {"bases", r.b[i].get_str()}, {"method", r.b_method[i]}});
  }
  j["t_j"] = nlohmann::json::array();
  for (const auto& t : r.t) j["t_j"].push_back(t.get_str());
  j["recovered_perfect_matchings"] = r.recovered.get_str();
  j["direct_perfect_matchings"] = r.direct.get_str();
  j["match"] = r.matches();
  return j;
}

}  // namespace gtutte
