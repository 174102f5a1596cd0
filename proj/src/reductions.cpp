#include "gtutte/reductions.hpp"

#include <algorithm>

#include "gtutte/constructions.hpp"
#include "gtutte/error.hpp"
#include "gtutte/matrix.hpp"

namespace gtutte {

namespace {

void require_distinct(std::vector<Rational> nodes, const std::string& what) {
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw Error(ErrorKind::ForbiddenPoint, what + ": interpolation nodes coincide");
  }
}

Rational repunit(const Rational& b, std::size_t k) {
  Rational s = 0, p = 1;
  for (std::size_t i = 0; i < k; ++i, p *= b) s += p;
  return s;
}

std::string point_text(const Rational& a, const Rational& b) {
  return "(" + to_string(a) + ", " + to_string(b) + ")";
}

std::size_t rank_of_input(const OracleInput& input) {
  if (const auto* g = std::get_if<Greedoid>(&input)) return g->rank();
  return greedoid_of(std::get<Carrier>(input)).rank();
}

nlohmann::json rational_json(const Rational& r) { return to_string(r); }

}  // namespace

// ---------------------------------------------------------------------------
// Oracle

PointOracle::PointOracle(Rational a, Rational b, Evaluator evaluator)
    : a_(std::move(a)), b_(std::move(b)), evaluator_(std::move(evaluator)) {}

PointOracle PointOracle::brute_force(Rational a, Rational b, EnumerationLimits limits) {
  auto eval = [a, b, limits](const OracleInput& input) -> Rational {
    if (const auto* g = std::get_if<Greedoid>(&input)) return tutte_eval(*g, a, b, limits);
    return tutte_eval(compress(std::get<Carrier>(input)), a, b, limits);
  };
  return PointOracle(a, b, eval);
}

Rational PointOracle::operator()(const OracleInput& input) const {
  ++calls_;
  return evaluator_(input);
}

// ---------------------------------------------------------------------------
// Thickening interpolation

CurveSpec curve_through(const Rational& a, const Rational& b) {
  if (a == 1 && b == 1) throw Error(ErrorKind::ForbiddenPoint, "(1, 1) lies on every curve");
  if (b == 1) return CurveSpec::h0y();
  if (a == 1) return CurveSpec::h0x();
  return CurveSpec::h_alpha((a - 1) * (b - 1));
}

InterpolationResult interpolate_curve(const PointOracle& oracle, const Carrier& c) {
  const Rational& a = oracle.a();
  const Rational& b = oracle.b();
  if (b == -1 || b == 0) throw Error(ErrorKind::ForbiddenPoint, "b must avoid -1 and 0, got " + point_text(a, b));
  InterpolationResult out;
  out.curve = curve_through(a, b);
  const Greedoid g = greedoid_of(c);
  const std::size_t rho = g.rank(), n = g.size();
  const std::size_t before = oracle.calls();

  std::vector<Rational> values;
  out.k_first = 1;
  if (out.curve.kind == CurveSpec::Kind::H0y) {
    // T(G^k; a, 1) = k^rho T(G; (a + k - 1)/k, 1)
    out.mode = "H0y";
    out.k_last = rho + 1;
    for (std::size_t k = 1; k <= out.k_last; ++k) {
      const Rational kk(static_cast<long>(k));
      out.nodes.push_back((a + kk - 1) / kk);
    }
    require_distinct(out.nodes, "H0y");
    for (std::size_t k = 1; k <= out.k_last; ++k) {
      values.push_back(oracle(thicken(c, k)) / power(Rational(static_cast<long>(k)), static_cast<long>(rho)));
    }
    out.coefficients = vandermonde_solve(out.nodes, values, 0);
  } else {
    // T(G^k; a, b) = S^rho T(G; x_k, b^k) with (x_k - 1)(b^k - 1) = (a - 1)(b - 1)
    const bool on_x1 = out.curve.kind == CurveSpec::Kind::H0x;
    out.mode = on_x1 ? "H0x" : "H_alpha";
    out.k_last = n + rho + 1;
    for (std::size_t k = 1; k <= out.k_last; ++k) {
      const Rational bk = power(b, static_cast<long>(k));
      out.nodes.push_back(on_x1 ? bk : bk - 1);
    }
    require_distinct(out.nodes, out.mode);
    for (std::size_t k = 1; k <= out.k_last; ++k) {
      values.push_back(oracle(thicken(c, k)) / power(repunit(b, k), static_cast<long>(rho)));
    }
    out.coefficients = vandermonde_solve(out.nodes, values, -static_cast<int>(rho));
  }
  out.oracle_calls = oracle.calls() - before;
  return out;
}

// ---------------------------------------------------------------------------
// Star attachments

OracleInput star_attachment(const Carrier& c, std::size_t k) {
  if (const auto* g = std::get_if<RootedGraph>(&c)) return Carrier(attach_graphs(*g, rooted_star(k)));
  if (const auto* d = std::get_if<RootedDigraph>(&c)) return Carrier(attach_digraphs(*d, directed_star(k)));
  const Greedoid g = greedoid_of(c);
  return attach(g, trivial_attachment_function(g), greedoid_of(rooted_star(k)));
}

OracleInput path2_attachment(const OracleInput& h) {
  if (const auto* c = std::get_if<Carrier>(&h)) {
    if (const auto* g = std::get_if<RootedGraph>(c)) return Carrier(attach_graphs(*g, rooted_path(2)));
    if (const auto* d = std::get_if<RootedDigraph>(c)) return Carrier(attach_digraphs(*d, directed_path(2)));
  }
  const Greedoid g = std::holds_alternative<Greedoid>(h) ? std::get<Greedoid>(h) : greedoid_of(std::get<Carrier>(h));
  return attach(g, trivial_attachment_function(g), greedoid_of(identity_matrix(2)));
}

InterpolationResult interpolate_line(const PointOracle& oracle, const Carrier& c) {
  const Rational& a = oracle.a();
  const Rational& b = oracle.b();
  if (a == 0 || a == 1) throw Error(ErrorKind::ForbiddenPoint, "star attachments need a not in {0, 1}");
  const std::size_t rho = greedoid_of(c).rank();
  InterpolationResult out;
  out.mode = "line";
  out.curve = CurveSpec::line_y(b);
  out.k_first = 0;
  out.k_last = rho;
  // T(G ~ S_k; a, b) = a^(k rho) T(G; 1 + b^k (a-1)^(k+1) / a^k, b)
  for (std::size_t k = 0; k <= rho; ++k) {
    out.nodes.push_back(power(b, static_cast<long>(k)) * power(Rational(a - 1), static_cast<long>(k + 1)) /
                        power(a, static_cast<long>(k)));
  }
  require_distinct(out.nodes, "line y = " + to_string(b) + " at a = " + to_string(a));
  const std::size_t before = oracle.calls();
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= rho; ++k) {
    values.push_back(oracle(star_attachment(c, k)) / power(a, static_cast<long>(k * rho)));
  }
  out.coefficients = vandermonde_solve(out.nodes, values, 0);
  out.oracle_calls = oracle.calls() - before;
  return out;
}

InterpolationResult interpolate_line_y_minus1(const PointOracle& oracle, const Carrier& c) {
  const Rational& a = oracle.a();
  if (oracle.b() != -1) throw Error(ErrorKind::ForbiddenPoint, "the oracle point must lie on y = -1");
  if (a == 1 || a == ratio(1, 2)) {
    throw Error(ErrorKind::ForbiddenPoint, "a = " + to_string(a) + " gives coinciding nodes on y = -1");
  }
  if (a != 0) return interpolate_line(oracle, c);

  // Answer queries at (2, -1) through the (0, -1) oracle.
  PointOracle shifted(2, -1, [&oracle](const OracleInput& h) -> Rational {
    const long rho = static_cast<long>(rank_of_input(h));
    return power(Rational(-1), rho) * oracle(path2_attachment(h));
  });
  const std::size_t before = oracle.calls();
  InterpolationResult out = interpolate_line(shifted, c);
  out.oracle_calls = oracle.calls() - before;
  return out;
}

Rational recover_point_1_0(const PointOracle& oracle, const Carrier& c) {
  if (oracle.b() != 0) throw Error(ErrorKind::ForbiddenPoint, "the oracle point must lie on y = 0");
  if (oracle.a() == 0) throw Error(ErrorKind::ForbiddenPoint, "a = 0 loses T(G; 1, 0)");
  const std::size_t rho = greedoid_of(c).rank();
  return oracle(star_attachment(c, 1)) / power(oracle.a(), static_cast<long>(rho));
}

// ---------------------------------------------------------------------------
// Counting identities

SubtreeReport subtree_count_via_rooted(const UnrootedGraph& g, const EnumerationLimits& limits) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "subtree counting needs a connected graph");
  SubtreeReport out;
  const std::size_t rho = g.vertex_count - 1;
  std::vector<Rational> sums(rho + 1, 0);
  for (std::size_t r = 0; r < g.vertex_count; ++r) {
    // On y = 1 only feasible sets survive: T = sum over rooted subtrees F of z^(rho - |F|).
    const auto line = tutte_restrict(greedoid_of(rooted_at(g, r)), CurveSpec::line_y(1), limits);
    std::vector<Integer> a(rho + 1);
    for (std::size_t i = 0; i <= rho; ++i) {
      a[i] = line.coefficient(static_cast<int>(rho - i)).get_num();
      sums[i] += a[i];
    }
    out.per_root.push_back(a);
  }
  out.total = 0;
  for (std::size_t i = 0; i <= rho; ++i) {
    const Rational ai = sums[i] / static_cast<long>(i + 1);
    out.by_size.push_back(ai.get_num());
    out.total += ai.get_num();
  }
  return out;
}

ReliabilityReport reliability_identity(const RootedDigraph& d, const Rational& p, const EnumerationLimits& limits) {
  if (p <= 0 || p >= 1) throw Error(ErrorKind::POutOfRange, "p must lie strictly between 0 and 1");
  if (!is_root_connected(d)) throw Error(ErrorKind::NotRootConnected, "reliability needs a root-connected digraph");
  const std::size_t m = d.arcs.size();
  require_enumerable(m, limits, "reliability_identity");
  ReliabilityReport out;
  out.direct = 0;
  for (ElementSubset kept = 0; kept < (ElementSubset{1} << m); ++kept) {
    RootedDigraph sub{d.vertex_count, {}, d.root, {}};
    for (std::size_t e : elements_of(kept)) sub.arcs.push_back(d.arcs[e]);
    if (!is_root_connected(sub)) continue;
    const long survive = static_cast<long>(subset_size(kept));
    out.direct += power(Rational(1 - p), survive) * power(p, static_cast<long>(m) - survive);
  }
  const Greedoid g = greedoid_of(d);
  const long rho = static_cast<long>(g.rank());
  out.reconstruction = power(p, static_cast<long>(m) - rho) * power(Rational(1 - p), rho) *
                       tutte_eval(g, 1, 1 / p, limits);
  return out;
}

bool digon_reduction_check(const RootedDigraph& d, const EnumerationLimits& limits) {
  const Greedoid g = greedoid_of(d);
  const Rational lhs = tutte_eval(greedoid_of(digon_stretch(d, 2)), 1, -1, limits);
  const Rational rhs = power(Rational(3), static_cast<long>(g.size() - g.rank())) * tutte_eval(g, 1, ratio(1, 3), limits);
  return lhs == rhs;
}

std::vector<BinaryIdentityRow> binary_identities_check(const BinaryMatrix& m, const std::vector<Rational>& a_values,
                                                       const EnumerationLimits& limits) {
  if (m.rank() != m.rows()) throw Error(ErrorKind::RowsDependent, "the matrix rows must be independent");
  const Greedoid g = greedoid_of(m);
  const Greedoid attached = greedoid_of(block_diag(m, identity_matrix(1)));
  const Rational t10 = tutte_eval(g, 1, 0, limits), t1m1 = tutte_eval(g, 1, -1, limits);
  std::vector<BinaryIdentityRow> rows;
  for (const auto& a : a_values) {
    BinaryIdentityRow r;
    r.a = a;
    r.attach_y0 = tutte_eval(attached, a, 0, limits);
    r.predicted_y0 = a * t10;
    r.lhs_ym1 = (2 * a - 1) * t1m1;
    r.rhs_ym1 = tutte_eval(attached, a, -1, limits) + (a - 1) * tutte_eval(g, a, -1, limits);
    rows.push_back(r);
  }
  return rows;
}

PointTransfer digraph_y2_transfer(const RootedDigraph& d, const Rational& a, const EnumerationLimits& limits) {
  const Greedoid g = greedoid_of(d);
  const Rational t2 = tutte_eval(greedoid_of(directed_path(2)), a, 2, limits);
  if (t2 == 0) throw Error(ErrorKind::DenominatorVanishes, "T(P_2; a, 2) = 0");
  PointTransfer out;
  out.attached = tutte_eval(greedoid_of(attach_digraphs(d, directed_path(2))), a, 2, limits);
  out.factor = power(t2, static_cast<long>(g.rank()));
  out.image_x = power(Rational(a - 1), 3) * 4 / t2 + 1;
  out.image = tutte_eval(g, out.image_x, 2, limits);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

nlohmann::json to_json(const InterpolationResult& r) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& z : r.nodes) nodes.push_back(rational_json(z));
  return {{"mode", r.mode},
          {"k_range", {r.k_first, r.k_last}},
          {"oracle_calls", r.oracle_calls},
          {"nodes", nodes},
          {"coefficients", to_json(r.coefficients)}};
}

nlohmann::json to_json(const SubtreeReport& r) {
  nlohmann::json per_root = nlohmann::json::array();
  for (const auto& row : r.per_root) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : row) j.push_back(v.get_str());
    per_root.push_back(j);
  }
  nlohmann::json by_size = nlohmann::json::array();
  for (const auto& v : r.by_size) by_size.push_back(v.get_str());
  return {{"per_root", per_root}, {"by_size", by_size}, {"total", r.total.get_str()}};
}

nlohmann::json to_json(const ReliabilityReport& r) {
  return {{"direct", rational_json(r.direct)}, {"reconstruction", rational_json(r.reconstruction)}, {"match", r.holds()}};
}

nlohmann::json to_json(const BinaryIdentityRow& r) {
  return {{"a", rational_json(r.a)},
          {"attach_y0", rational_json(r.attach_y0)},
          {"predicted_y0", rational_json(r.predicted_y0)},
          {"lhs_ym1", rational_json(r.lhs_ym1)},
          {"rhs_ym1", rational_json(r.rhs_ym1)},
          {"match", r.holds()}};
}

nlohmann::json to_json(const PointTransfer& r) {
  return {{"attached", rational_json(r.attached)},
          {"factor", rational_json(r.factor)},
          {"image_x", rational_json(r.image_x)},
          {"image", rational_json(r.image)},
          {"match", r.holds()}};
}

}  // namespace gtutte
