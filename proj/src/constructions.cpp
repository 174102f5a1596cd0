#include "gtutte/constructions.hpp"

#include <numeric>
#include <string>

#include "gtutte/error.hpp"

namespace gtutte {

namespace {

void require_k(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidCarrier, "k must be at least 1");
}

std::vector<std::string> thickened_labels(const std::vector<std::string>& labels, std::size_t k) {
  if (k == 1 || labels.empty()) return labels;
  std::vector<std::string> out;
  for (const auto& l : labels)
    for (std::size_t i = 1; i <= k; ++i) out.push_back(l + "." + std::to_string(i));
  return out;
}

std::vector<VertexPair> thickened_pairs(const std::vector<VertexPair>& pairs, std::size_t k) {
  std::vector<VertexPair> out;
  for (const auto& p : pairs) out.insert(out.end(), k, p);
  return out;
}

// Vertices reachable from `start` using the pairs selected by `a`.
std::vector<bool> reach_in(std::size_t n, const std::vector<VertexPair>& pairs, std::size_t start, ElementSubset a,
                           bool directed) {
  std::vector<bool> seen(n, false);
  seen[start] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t e : elements_of(a)) {
      const auto [u, v] = pairs[e];
      if (seen[u] && !seen[v]) seen[v] = grew = true;
      if (!directed && seen[v] && !seen[u]) seen[u] = grew = true;
    }
  }
  return seen;
}

AttachmentFunction reachability_function(Greedoid domain, std::vector<VertexPair> pairs, std::size_t n,
                                         std::size_t root, bool directed) {
  auto map = [pairs = std::move(pairs), n, root, directed](ElementSubset f) {
    const auto seen = reach_in(n, pairs, root, f, directed);
    ElementSubset out = 0;
    std::size_t index = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == root) continue;
      if (seen[v]) out |= singleton(index);
      ++index;
    }
    return out;
  };
  return AttachmentFunction{std::move(domain), std::move(map)};
}

// Appends a copy of H's pairs for every non-root vertex of the host, H's root glued to that vertex.
template <class Carrier>
Carrier attach_copies(const Carrier& host, const std::vector<VertexPair>& host_pairs, const Carrier& h,
                      const std::vector<VertexPair>& h_pairs, std::vector<VertexPair>& out_pairs) {
  Carrier out;
  out.root = host.root;
  out_pairs = host_pairs;
  std::size_t next = host.vertex_count;
  std::vector<std::string> labels = host.labels;
  const bool labelled = !host.labels.empty() || !h.labels.empty();
  if (labelled && labels.empty()) {
    for (std::size_t e = 0; e < host_pairs.size(); ++e) labels.push_back("g" + std::to_string(e + 1));
  }
  std::size_t block = 0;
  for (std::size_t v = 0; v < host.vertex_count; ++v) {
    if (v == host.root) continue;
    ++block;
    std::vector<std::size_t> image(h.vertex_count);
    for (std::size_t w = 0; w < h.vertex_count; ++w) image[w] = w == h.root ? v : next++;
    for (std::size_t e = 0; e < h_pairs.size(); ++e) {
      out_pairs.emplace_back(image[h_pairs[e].first], image[h_pairs[e].second]);
      if (labelled) {
        const std::string base = h.labels.empty() ? "h" + std::to_string(e + 1) : h.labels[e];
        labels.push_back(base + "@" + std::to_string(block));
      }
    }
  }
  out.vertex_count = next;
  out.labels = labels;
  return out;
}

// P(1, y) keeping the bivariate type.
BivariatePolynomial at_x_one(const BivariatePolynomial& p) {
  BivariatePolynomial out;
  for (const auto& [exps, c] : p.terms()) out.add_term(0, exps.second, c);
  return out;
}

BivariatePolynomial constant(const Rational& c) { return BivariatePolynomial(c); }

}  // namespace

// ---------------------------------------------------------------------------
// Thickening

RootedGraph thicken(const RootedGraph& g, std::size_t k) {
  require_k(k);
  g.validate();
  return RootedGraph{g.vertex_count, thickened_pairs(g.edges, k), g.root, thickened_labels(g.labels, k)};
}

RootedDigraph thicken(const RootedDigraph& d, std::size_t k) {
  require_k(k);
  d.validate();
  return RootedDigraph{d.vertex_count, thickened_pairs(d.arcs, k), d.root, thickened_labels(d.labels, k)};
}

BinaryMatrix thicken(const BinaryMatrix& m, std::size_t k) {
  require_k(k);
  BinaryMatrix out(m.rows(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t i = 0; i < k; ++i) out.append_column(m.column(c));
  return out;
}

Carrier thicken(const Carrier& c, std::size_t k) {
  return std::visit([k](const auto& carrier) -> Carrier { return thicken(carrier, k); }, c);
}

Greedoid thicken(const Greedoid& g, std::size_t k) {
  require_k(k);
  const std::size_t n = g.size();
  if (n * k > kMaxGroundSize) throw Error(ErrorKind::GroundSetTooLarge, "thickened ground set exceeds 64 elements");
  if (k == 1) return g;
  auto oracle = [g, n, k](ElementSubset a) {
    const ElementSubset block = full_subset(k);
    ElementSubset projected = 0;
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t copies = subset_size((a >> (e * k)) & block);
      if (copies > 1) return false;
      if (copies == 1) projected |= singleton(e);
    }
    return g.feasible_unchecked(projected);
  };
  return Greedoid(n * k, oracle, thickened_labels(g.labels(), k));
}

BivariatePolynomial predicted_thickening(const BivariatePolynomial& t, std::size_t rank, std::size_t k,
                                         ThickeningMode mode) {
  require_k(k);
  const auto x = BivariatePolynomial::x(), y = BivariatePolynomial::y();
  switch (mode) {
    case ThickeningMode::Generic: {
      BivariatePolynomial s;
      for (std::size_t i = 0; i < k; ++i) s += y.pow(i);
      const BivariatePolynomial xnum = x + s - constant(1);
      return homogenized_substitute(t, xnum, s, y.pow(k), static_cast<int>(rank));
    }
    case ThickeningMode::YMinusOne:
      if (k % 2 == 0) return (x - constant(1)).pow(rank);
      return fix_y(t, -1);
    case ThickeningMode::YOne: {
      const Rational kk(static_cast<long>(k));
      return homogenized_substitute(fix_y(t, 1), x + constant(kk - 1), constant(kk), constant(1),
                                    static_cast<int>(rank));
    }
  }
  throw Error(ErrorKind::InvalidCarrier, "unknown thickening mode");
}

// ---------------------------------------------------------------------------
// Attachment

AttachmentFunction trivial_attachment_function(const Greedoid& g) {
  return AttachmentFunction{g, [](ElementSubset f) { return full_subset(subset_size(f)); }};
}

AttachmentFunction branching_attachment_function(const RootedGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "attachment needs a connected rooted graph");
  return reachability_function(greedoid_of(g), g.edges, g.vertex_count, g.root, false);
}

AttachmentFunction branching_attachment_function(const RootedDigraph& d) {
  if (!is_root_connected(d)) throw Error(ErrorKind::NotRootConnected, "attachment needs a root-connected digraph");
  return reachability_function(greedoid_of(d), d.arcs, d.vertex_count, d.root, true);
}

void check_attachment_function(const AttachmentFunction& f, const EnumerationLimits& limits) {
  const Greedoid& g = f.domain;
  const auto feasible = enumerate_feasible(g, limits);
  const ElementSubset allowed = full_subset(g.rank());
  std::vector<ElementSubset> images, closures;
  for (ElementSubset s : feasible) {
    const ElementSubset image = f.map(s);
    if (subset_size(image) != subset_size(s) || (image & ~allowed)) {
      throw Error(ErrorKind::AttachmentInvariantViolation, "|f(F)| differs from |F| or f(F) leaves [rho]");
    }
    images.push_back(image);
    closures.push_back(g.closure(s));
  }
  for (std::size_t i = 0; i < feasible.size(); ++i)
    for (std::size_t j = 0; j < feasible.size(); ++j) {
      if ((feasible[i] & ~closures[j]) == 0 && (images[i] & ~images[j]) != 0) {
        throw Error(ErrorKind::AttachmentInvariantViolation, "F1 inside sigma(F2) but f(F1) not inside f(F2)");
      }
    }
}

Greedoid attach(const Greedoid& g1, const AttachmentFunction& f, const Greedoid& g2, const EnumerationLimits& limits) {
  const std::size_t n1 = g1.size(), n2 = g2.size(), rho1 = g1.rank();
  if (f.domain.size() != n1) throw Error(ErrorKind::AttachmentInvariantViolation, "f is defined on another greedoid");
  if (n1 + rho1 * n2 > kMaxGroundSize) throw Error(ErrorKind::GroundSetTooLarge, "attachment exceeds 64 elements");
  if (n1 <= limits.max_ground) check_attachment_function(f, limits);

  auto oracle = [g1, g2, map = f.map, n1, n2, rho1](ElementSubset a) {
    const ElementSubset base = a & full_subset(n1);
    if (!g1.feasible_unchecked(base)) return false;
    const ElementSubset reached = map(base);
    for (std::size_t i = 0; i < rho1; ++i) {
      const ElementSubset part = n2 == 0 ? 0 : (a >> (n1 + i * n2)) & full_subset(n2);
      if (!part) continue;
      if (!contains(reached, i) || !g2.feasible_unchecked(part)) return false;
    }
    return true;
  };
  std::vector<std::string> labels = g1.labels();
  for (std::size_t i = 1; i <= rho1; ++i)
    for (std::size_t e = 0; e < n2; ++e) labels.push_back(g2.label(e) + "@" + std::to_string(i));
  return Greedoid(n1 + rho1 * n2, oracle, labels);
}

RootedGraph attach_graphs(const RootedGraph& g, const RootedGraph& h) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "attachment needs a connected rooted graph");
  h.validate();
  std::vector<VertexPair> edges;
  RootedGraph out = attach_copies(g, g.edges, h, h.edges, edges);
  out.edges = std::move(edges);
  return out;
}

RootedDigraph attach_digraphs(const RootedDigraph& d, const RootedDigraph& h) {
  if (!is_root_connected(d)) throw Error(ErrorKind::NotRootConnected, "attachment needs a root-connected digraph");
  h.validate();
  std::vector<VertexPair> arcs;
  RootedDigraph out = attach_copies(d, d.arcs, h, h.arcs, arcs);
  out.arcs = std::move(arcs);
  return out;
}

BivariatePolynomial predicted_attachment(const BivariatePolynomial& t1, const BivariatePolynomial& t2,
                                         std::size_t rank1, std::size_t rank2, std::size_t elements2) {
  const auto x = BivariatePolynomial::x(), y = BivariatePolynomial::y();
  const BivariatePolynomial n = (x - constant(1)).pow(rank2 + 1) * y.pow(elements2);
  return homogenized_substitute(t1, n + t2, t2, y, static_cast<int>(rank1));
}

Rational predicted_attachment_at(const BivariatePolynomial& t1, const BivariatePolynomial& t2, std::size_t rank1,
                                 std::size_t rank2, std::size_t elements2, const Rational& a, const Rational& b) {
  const Rational d = t2.evaluate(a, b);
  if (d == 0) {
    throw Error(ErrorKind::DenominatorVanishes, "T2 vanishes at (" + to_string(a) + ", " + to_string(b) + ")");
  }
  const Rational inner = power(Rational(a - 1), static_cast<long>(rank2 + 1)) *
                         power(b, static_cast<long>(elements2)) / d + 1;
  return power(d, static_cast<long>(rank1)) * t1.evaluate(inner, b);
}

// ---------------------------------------------------------------------------
// Full rank attachment

Greedoid full_rank_attach(const Greedoid& g1, const Greedoid& g2) {
  const std::size_t n1 = g1.size(), n2 = g2.size(), rho1 = g1.rank();
  if (n1 + n2 > kMaxGroundSize) throw Error(ErrorKind::GroundSetTooLarge, "attachment exceeds 64 elements");
  auto oracle = [g1, g2, n1, n2, rho1](ElementSubset a) {
    const ElementSubset first = a & full_subset(n1);
    const ElementSubset second = n2 == 0 ? 0 : (a >> n1) & full_subset(n2);
    if (!g1.feasible_unchecked(first)) return false;
    if (!second) return true;
    return subset_size(first) == rho1 && g2.feasible_unchecked(second);
  };
  std::vector<std::string> labels = g1.labels();
  for (const auto& l : g2.labels()) labels.push_back(l + "'");
  return Greedoid(n1 + n2, oracle, labels);
}

BinaryMatrix block_diag(const BinaryMatrix& m1, const BinaryMatrix& m2) {
  if (m1.rank() != m1.rows()) throw Error(ErrorKind::M1NotFullRowRank, "the first block must have full row rank");
  BinaryMatrix out(m1.rows() + m2.rows(), 0);
  for (std::size_t c = 0; c < m1.cols(); ++c) out.append_column(m1.column(c));
  for (std::size_t c = 0; c < m2.cols(); ++c) out.append_column(m2.column(c) << m1.rows());
  return out;
}

BivariatePolynomial predicted_full_rank(const BivariatePolynomial& t1, const BivariatePolynomial& t2,
                                        std::size_t rank2, std::size_t elements2) {
  const BivariatePolynomial n =
      (BivariatePolynomial::x() - constant(1)).pow(rank2) * BivariatePolynomial::y().pow(elements2);
  return t1 * n + at_x_one(t1) * (t2 - n);
}

// ---------------------------------------------------------------------------
// Stretches

UnrootedGraph stretch_unrooted(const UnrootedGraph& g, std::size_t k) {
  require_k(k);
  g.validate();
  UnrootedGraph out{g.vertex_count, {}};
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      out.edges.emplace_back(u, v);
      continue;
    }
    std::size_t prev = u;
    for (std::size_t i = 1; i < k; ++i) {
      out.edges.emplace_back(prev, out.vertex_count);
      prev = out.vertex_count++;
    }
    out.edges.emplace_back(prev, v);
  }
  return out;
}

std::vector<std::vector<Integer>> count_subtrees_typed(const UnrootedGraph& g, const EnumerationLimits& limits) {
  g.validate();
  std::vector<VertexPair> edges;
  for (const auto& e : g.edges)
    if (e.first != e.second) edges.push_back(e);
  require_enumerable(edges.size(), limits, "count_subtrees");
  const std::size_t m = edges.size();
  std::vector<std::vector<Integer>> table(m + 1, std::vector<Integer>(m + 1, 0));

  auto classify = [&](const std::vector<bool>& in_tree, ElementSubset used) {
    std::size_t once = 0, twice = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (contains(used, e)) continue;
      const int touching = int(in_tree[edges[e].first]) + int(in_tree[edges[e].second]);
      if (touching == 1) ++once;
      if (touching == 2) ++twice;
    }
    table[once][twice] += 1;
  };

  std::vector<bool> in_tree(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    std::fill(in_tree.begin(), in_tree.end(), false);
    in_tree[v] = true;
    classify(in_tree, 0);
  }
  std::vector<std::size_t> parent(g.vertex_count);
  for (ElementSubset a = 1; a < (ElementSubset{1} << m); ++a) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(in_tree.begin(), in_tree.end(), false);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    std::size_t vertices = 0;
    for (std::size_t e : elements_of(a)) {
      const auto [u, v] = edges[e];
      for (std::size_t w : {u, v})
        if (!in_tree[w]) {
          in_tree[w] = true;
          ++vertices;
        }
      const auto ru = find(u), rv = find(v);
      if (ru == rv) {
        acyclic = false;
        break;
      }
      parent[ru] = rv;
    }
    if (acyclic && vertices == subset_size(a) + 1) classify(in_tree, a);
  }
  return table;
}

Integer count_subtrees(const UnrootedGraph& g, const EnumerationLimits& limits) {
  Integer total = 0;
  for (const auto& row : count_subtrees_typed(g, limits))
    for (const auto& c : row) total += c;
  return total;
}

Integer predicted_stretch_subtrees(const std::vector<std::vector<Integer>>& typed, std::size_t non_loop_edges,
                                   std::size_t k) {
  require_k(k);
  const Integer kk(static_cast<unsigned long>(k));
  const Integer pairs = binomial(k + 1, 2);
  Integer total = kk * (kk - 1) * static_cast<unsigned long>(non_loop_edges) / 2;
  for (std::size_t i = 0; i < typed.size(); ++i)
    for (std::size_t j = 0; j < typed[i].size(); ++j) total += typed[i][j] * power(kk, i) * power(pairs, j);
  return total;
}

RootedDigraph digon_stretch(const RootedDigraph& d, std::size_t k) {
  require_k(k);
  if (!is_root_connected(d)) throw Error(ErrorKind::NotRootConnected, "digon stretch needs a root-connected digraph");
  RootedDigraph out{d.vertex_count, {}, d.root, {}};
  for (std::size_t e = 0; e < d.arcs.size(); ++e) {
    const auto [u, v] = d.arcs[e];
    const std::string name = d.labels.empty() ? "a" + std::to_string(e + 1) : d.labels[e];
    // w[0] = u, w[k+1] = v
    std::vector<std::size_t> w{u};
    for (std::size_t i = 1; i <= k; ++i) w.push_back(out.vertex_count++);
    w.push_back(v);
    for (std::size_t i = 0; i <= k; ++i) {
      out.arcs.emplace_back(w[i], w[i + 1]);
      out.labels.push_back(name + ":p" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= k; ++i) {
      out.arcs.emplace_back(w[i + 1], w[i]);
      out.labels.push_back(name + ":q" + std::to_string(i));
    }
  }
  return out;
}

LaurentPolynomial predicted_digon_stretch(const LaurentPolynomial& t_x1, std::size_t arcs, std::size_t rank,
                                          std::size_t k) {
  require_k(k);
  const long nullity = static_cast<long>(arcs) - static_cast<long>(rank);
  if (t_x1.min_exponent() < 0 || t_x1.max_exponent() > nullity) {
    throw Error(ErrorKind::DimensionMismatch, "T(D;1,y) has degree above |E| - rho");
  }
  const Rational k1(static_cast<long>(k + 1));
  LaurentPolynomial shifted(Rational(static_cast<long>(k)));
  shifted += LaurentPolynomial::monomial(1);
  LaurentPolynomial out;
  for (const auto& [j, c] : t_x1.terms()) out += shifted.pow(j) * Rational(c * power(k1, nullity - j));
  return out.shifted(static_cast<int>(k * arcs));
}

RootedDigraph bidirect(const RootedGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "bidirection needs a connected rooted graph");
  RootedDigraph out{g.vertex_count, {}, g.root, {}};
  for (const auto& [u, v] : g.edges) {
    out.arcs.emplace_back(u, v);
    out.arcs.emplace_back(v, u);
  }
  return out;
}

}  // namespace gtutte
