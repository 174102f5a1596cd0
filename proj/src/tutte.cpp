#include "gtutte/tutte.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gtutte/error.hpp"
#include "gtutte/matrix.hpp"

namespace gtutte {

namespace {

using CountGrid = std::vector<std::vector<std::uint64_t>>;

// counts[i][j] = #{A : rho - rho(A) = i, |A| - rho(A) = j}
CountGrid shifted_counts(const Greedoid& g, const EnumerationLimits& limits) {
  const auto ranks = rank_table(g, limits);
  const std::size_t rho = g.rank();
  CountGrid counts(rho + 1, std::vector<std::uint64_t>(g.size() + 1, 0));
  for (ElementSubset a = 0; a < ranks.size(); ++a) {
    ++counts[rho - ranks[a]][subset_size(a) - ranks[a]];
  }
  return counts;
}

std::vector<std::vector<Integer>> to_integers(const CountGrid& grid) {
  std::vector<std::vector<Integer>> out;
  for (const auto& row : grid) {
    out.emplace_back();
    for (auto c : row) out.back().emplace_back(static_cast<unsigned long>(c));
  }
  return out;
}

// (v - 1)^n in one variable as coefficients by power of v.
std::vector<Integer> shifted_power(std::size_t n) {
  std::vector<Integer> out(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    out[p] = binomial(n, p);
    if ((n - p) % 2) out[p] = -out[p];
  }
  return out;
}

BivariatePolynomial y_repunit(std::size_t m) {
  BivariatePolynomial p;
  for (std::size_t i = 0; i < m; ++i) p.add_term(0, static_cast<int>(i), 1);
  return p;
}

Rational repunit(std::size_t m, const Rational& b) {
  Rational sum = 0, p = 1;
  for (std::size_t i = 0; i < m; ++i, p *= b) sum += p;
  return sum;
}

// Classed enumeration keyed by (i, j, how many chosen classes of each distinct multiplicity).
struct ClassedCounts {
  std::vector<std::size_t> distinct;
  std::map<std::vector<std::uint8_t>, std::uint64_t> counts;
};

ClassedCounts classed_counts(const ClassedGreedoid& g, const EnumerationLimits& limits) {
  const Greedoid& reps = g.representatives;
  if (g.multiplicity.size() != reps.size()) throw Error(ErrorKind::DimensionMismatch, "one multiplicity per class");
  ClassedCounts out;
  out.distinct = g.multiplicity;
  std::sort(out.distinct.begin(), out.distinct.end());
  out.distinct.erase(std::unique(out.distinct.begin(), out.distinct.end()), out.distinct.end());
  std::vector<ElementSubset> masks(out.distinct.size(), 0);
  for (std::size_t e = 0; e < reps.size(); ++e) {
    const auto t = std::lower_bound(out.distinct.begin(), out.distinct.end(), g.multiplicity[e]) - out.distinct.begin();
    masks[t] |= singleton(e);
  }
  const auto ranks = rank_table(reps, limits);
  const std::size_t rho = reps.rank();
  std::vector<std::uint8_t> key(2 + masks.size());
  for (ElementSubset a = 0; a < ranks.size(); ++a) {
    key[0] = static_cast<std::uint8_t>(rho - ranks[a]);
    key[1] = static_cast<std::uint8_t>(subset_size(a) - ranks[a]);
    for (std::size_t t = 0; t < masks.size(); ++t) key[2 + t] = static_cast<std::uint8_t>(subset_size(a & masks[t]));
    ++out.counts[key];
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

BivariatePolynomial expand_shifted(const std::vector<std::vector<Integer>>& counts) {
  BivariatePolynomial out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto xi = shifted_power(i);
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      if (counts[i][j] == 0) continue;
      const auto yj = shifted_power(j);
      for (std::size_t p = 0; p <= i; ++p)
        for (std::size_t q = 0; q <= j; ++q)
          out.add_term(static_cast<int>(p), static_cast<int>(q), Rational(counts[i][j] * xi[p] * yj[q]));
    }
  }
  return out;
}

BivariatePolynomial tutte_polynomial(const Greedoid& g, const EnumerationLimits& limits) {
  require_enumerable(g.size(), limits, "tutte_polynomial");
  return expand_shifted(to_integers(shifted_counts(g, limits)));
}

Rational tutte_eval(const Greedoid& g, const Rational& a, const Rational& b, const EnumerationLimits& limits) {
  require_enumerable(g.size(), limits, "tutte_eval");
  const auto counts = shifted_counts(g, limits);
  Rational sum = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      if (counts[i][j]) {
        sum += Rational(Integer(static_cast<unsigned long>(counts[i][j]))) * power(Rational(a - 1), static_cast<long>(i)) *
               power(Rational(b - 1), static_cast<long>(j));
      }
    }
  return sum;
}

// ---------------------------------------------------------------------------
// Classed evaluation

std::size_t ClassedGreedoid::element_count() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), std::size_t{0});
}

ClassedGreedoid compress(const Carrier& c) {
  ClassedGreedoid out;
  auto group = [&](const auto& keys) {
    std::vector<std::size_t> rep_of_class;
    std::map<typename std::decay_t<decltype(keys)>::value_type, std::size_t> index;
    for (std::size_t e = 0; e < keys.size(); ++e) {
      auto [it, inserted] = index.try_emplace(keys[e], rep_of_class.size());
      if (inserted) {
        rep_of_class.push_back(e);
        out.multiplicity.push_back(1);
      } else {
        ++out.multiplicity[it->second];
      }
    }
    return rep_of_class;
  };
  if (const auto* g = std::get_if<RootedGraph>(&c)) {
    std::vector<VertexPair> keys;
    for (auto [u, v] : g->edges) keys.emplace_back(std::min(u, v), std::max(u, v));
    RootedGraph reduced{g->vertex_count, {}, g->root, {}};
    for (std::size_t e : group(keys)) reduced.edges.push_back(g->edges[e]);
    out.representatives = greedoid_of(reduced);
  } else if (const auto* d = std::get_if<RootedDigraph>(&c)) {
    RootedDigraph reduced{d->vertex_count, {}, d->root, {}};
    for (std::size_t e : group(d->arcs)) reduced.arcs.push_back(d->arcs[e]);
    out.representatives = greedoid_of(reduced);
  } else {
    const auto& m = std::get<BinaryMatrix>(c);
    std::vector<std::uint64_t> keys;
    for (std::size_t col = 0; col < m.cols(); ++col) keys.push_back(m.column(col));
    BinaryMatrix reduced(m.rows(), 0);
    for (std::size_t e : group(keys)) reduced.append_column(m.column(e));
    out.representatives = greedoid_of(reduced);
  }
  return out;
}

BivariatePolynomial tutte_polynomial(const ClassedGreedoid& g, const EnumerationLimits& limits) {
  require_enumerable(g.representatives.size(), limits, "tutte_polynomial");
  const auto cc = classed_counts(g, limits);
  std::vector<BivariatePolynomial> units;
  for (std::size_t m : cc.distinct) units.push_back(y_repunit(m));
  BivariatePolynomial out;
  for (const auto& [key, count] : cc.counts) {
    std::vector<std::vector<Integer>> single(key[0] + 1, std::vector<Integer>(key[1] + 1, 0));
    single[key[0]][key[1]] = Integer(static_cast<unsigned long>(count));
    BivariatePolynomial term = expand_shifted(single);
    for (std::size_t t = 0; t < units.size(); ++t) term = term * units[t].pow(key[2 + t]);
    out += term;
  }
  return out;
}

Rational tutte_eval(const ClassedGreedoid& g, const Rational& a, const Rational& b, const EnumerationLimits& limits) {
  require_enumerable(g.representatives.size(), limits, "tutte_eval");
  const auto cc = classed_counts(g, limits);
  std::vector<Rational> units;
  for (std::size_t m : cc.distinct) units.push_back(repunit(m, b));
  Rational sum = 0;
  for (const auto& [key, count] : cc.counts) {
    Rational term = Rational(Integer(static_cast<unsigned long>(count))) * power(Rational(a - 1), key[0]) *
                    power(Rational(b - 1), key[1]);
    for (std::size_t t = 0; t < units.size(); ++t) term *= power(units[t], key[2 + t]);
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Curves and special points

CurveSpec CurveSpec::h_alpha(const Rational& alpha) {
  if (alpha == 0) throw Error(ErrorKind::ForbiddenPoint, "H_alpha needs alpha != 0");
  return {Kind::HAlpha, alpha};
}

LaurentPolynomial restrict_polynomial(const BivariatePolynomial& t, const CurveSpec& curve) {
  const LaurentPolynomial one(Rational(1)), z = LaurentPolynomial::monomial(1);
  switch (curve.kind) {
    case CurveSpec::Kind::HAlpha:
      if (curve.parameter == 0) throw Error(ErrorKind::ForbiddenPoint, "H_alpha needs alpha != 0");
      return substitute(t, one + LaurentPolynomial::monomial(-1, curve.parameter), one + z);
    case CurveSpec::Kind::H0x: return substitute(t, one, z);
    case CurveSpec::Kind::H0y: return substitute(t, z, one);
    case CurveSpec::Kind::LineY: return substitute(t, one + z, LaurentPolynomial(curve.parameter));
  }
  throw Error(ErrorKind::InvalidCarrier, "unknown curve");
}

LaurentPolynomial tutte_restrict(const Greedoid& g, const CurveSpec& curve, const EnumerationLimits& limits) {
  return restrict_polynomial(tutte_polynomial(g, limits), curve);
}

Rational h1_closed_form(std::size_t element_count, std::size_t rank, const Rational& a, const Rational& b) {
  if ((a - 1) * (b - 1) != 1) {
    throw Error(ErrorKind::NotOnH1, "(" + to_string(a) + ", " + to_string(b) + ") is not on (x-1)(y-1) = 1");
  }
  return power(Rational(a - 1), static_cast<long>(rank) - static_cast<long>(element_count)) *
         power(a, static_cast<long>(element_count));
}

LaurentPolynomial characteristic_from_tutte(const BivariatePolynomial& t, std::size_t rank) {
  LaurentPolynomial one_minus_lambda(Rational(1));
  one_minus_lambda -= LaurentPolynomial::monomial(1);
  auto p = substitute(t, one_minus_lambda, LaurentPolynomial());
  if (rank % 2) p *= -1;
  return p;
}

LaurentPolynomial characteristic_polynomial(const Greedoid& g, const EnumerationLimits& limits) {
  return characteristic_from_tutte(tutte_polynomial(g, limits), g.rank());
}

Integer spanning_tree_count(const RootedGraph& g) {
  const auto in_component = root_component(g);
  std::vector<std::size_t> index(g.vertex_count, 0);
  std::size_t m = 0;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (in_component[v] && v != g.root) index[v] = m++;
  }
  ExactMatrix lap(m, m);
  for (const auto& [u, v] : g.edges) {
    if (u == v || !in_component[u]) continue;
    if (u != g.root) lap(index[u], index[u]) += 1;
    if (v != g.root) lap(index[v], index[v]) += 1;
    if (u != g.root && v != g.root) {
      lap(index[u], index[v]) -= 1;
      lap(index[v], index[u]) -= 1;
    }
  }
  return det_exact(lap).get_num();
}

Integer arborescence_count(const RootedDigraph& d) {
  d.validate();
  std::vector<bool> reachable(d.vertex_count, false);
  {
    std::vector<std::vector<std::size_t>> out(d.vertex_count);
    for (const auto& [u, v] : d.arcs) out[u].push_back(v);
    std::vector<std::size_t> stack{d.root};
    reachable[d.root] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : out[u])
        if (!reachable[v]) {
          reachable[v] = true;
          stack.push_back(v);
        }
    }
  }
  std::vector<std::size_t> index(d.vertex_count, 0);
  std::size_t m = 0;
  for (std::size_t v = 0; v < d.vertex_count; ++v) {
    if (reachable[v] && v != d.root) index[v] = m++;
  }
  ExactMatrix lap(m, m);
  for (const auto& [u, v] : d.arcs) {
    if (u == v || !reachable[u] || v == d.root) continue;
    lap(index[v], index[v]) += 1;
    if (u != d.root) lap(index[u], index[v]) -= 1;
  }
  return det_exact(lap).get_num();
}

bool has_directed_cycle(const RootedDigraph& d) {
  d.validate();
  std::vector<std::size_t> indeg(d.vertex_count, 0);
  std::vector<std::vector<std::size_t>> out(d.vertex_count);
  for (const auto& [u, v] : d.arcs) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < d.vertex_count; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto u = ready.back();
    ready.pop_back();
    ++removed;
    for (auto v : out[u])
      if (--indeg[v] == 0) ready.push_back(v);
  }
  return removed < d.vertex_count;
}

std::size_t sink_count(const RootedDigraph& d) {
  std::vector<std::size_t> indeg(d.vertex_count, 0), outdeg(d.vertex_count, 0);
  for (const auto& [u, v] : d.arcs) {
    ++outdeg[u];
    ++indeg[v];
  }
  std::size_t s = 0;
  for (std::size_t v = 0; v < d.vertex_count; ++v)
    if (outdeg[v] == 0 && indeg[v] > 0) ++s;
  return s;
}

Rational digraph_sinks_fastpath(const RootedDigraph& d, const Rational& a) {
  if (!is_root_connected(d)) throw Error(ErrorKind::NotRootConnected, "every vertex must be reachable from the root");
  if (has_directed_cycle(d)) return 0;
  return power(a, static_cast<long>(sink_count(d)));
}

// ---------------------------------------------------------------------------
// Unrooted comparison evaluator

namespace {

std::vector<std::uint8_t> whitney_ranks(const UnrootedGraph& g, const EnumerationLimits& limits) {
  g.validate();
  require_enumerable(g.edges.size(), limits, "unrooted_tutte");
  const ElementSubset count = ElementSubset{1} << g.edges.size();
  std::vector<std::uint8_t> ranks(count);
  std::vector<std::size_t> parent(g.vertex_count);
  for (ElementSubset a = 0; a < count; ++a) {
    std::iota(parent.begin(), parent.end(), 0);
    std::uint8_t r = 0;
    for (std::size_t e : elements_of(a)) {
      const auto ru = find_root(parent, g.edges[e].first), rv = find_root(parent, g.edges[e].second);
      if (ru != rv) {
        parent[ru] = rv;
        ++r;
      }
    }
    ranks[a] = r;
  }
  return ranks;
}

}  // namespace

BivariatePolynomial unrooted_tutte(const UnrootedGraph& g, const EnumerationLimits& limits) {
  const auto ranks = whitney_ranks(g, limits);
  const std::size_t full = ranks.back();
  std::vector<std::vector<Integer>> counts(full + 1, std::vector<Integer>(g.edges.size() + 1, 0));
  for (ElementSubset a = 0; a < ranks.size(); ++a) counts[full - ranks[a]][subset_size(a) - ranks[a]] += 1;
  return expand_shifted(counts);
}

LaurentPolynomial unrooted_tutte_x1(const UnrootedGraph& g, const EnumerationLimits& limits) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "unrooted_tutte_x1 needs a connected graph");
  return restrict_polynomial(unrooted_tutte(g, limits), CurveSpec::h0x());
}

}  // namespace gtutte
