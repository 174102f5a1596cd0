#include <doctest.h>

#include "fixtures.hpp"
#include "gtutte/constructions.hpp"
#include "gtutte/error.hpp"
#include "gtutte/reductions.hpp"
#include "gtutte/tutte.hpp"

using namespace gtutte;

namespace {

std::vector<Carrier> reduction_carriers() {
  std::vector<Carrier> out;
  out.emplace_back(rooted_path(2));
  out.emplace_back(rooted_star(2));
  out.emplace_back(RootedGraph{3, {{0, 1}, {1, 2}, {2, 0}}, 0, {}});
  out.emplace_back(RootedGraph{3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}, 0, {}});
  out.emplace_back(directed_path(2));
  out.emplace_back(RootedDigraph{3, {{0, 1}, {1, 2}, {2, 1}}, 0, {}});
  out.emplace_back(RootedDigraph{3, {{0, 1}, {0, 2}, {2, 1}, {1, 1}}, 0, {}});
  out.emplace_back(identity_matrix(2));
  out.emplace_back(example_matrix());
  out.emplace_back(BinaryMatrix::from_strings({"1100", "0110"}));
  return out;
}

}  // namespace

TEST_CASE("interpolation along thickening curves") {
  const auto p2 = Carrier(rooted_path(2));
  const auto oracle = PointOracle::brute_force(3, 2);
  const auto r = interpolate_curve(oracle, p2);
  CHECK(r.mode == "H_alpha");
  CHECK(r.coefficients == tutte_restrict(greedoid_of(p2), CurveSpec::h_alpha(2)));
  CHECK(r.oracle_calls == 2 + 2 + 1);

  const auto s2 = Carrier(rooted_star(2));
  const auto y1 = interpolate_curve(PointOracle::brute_force(3, 1), s2);
  CHECK(y1.mode == "H0y");
  CHECK(y1.coefficients == LaurentPolynomial::monomial(2));
  CHECK(y1.oracle_calls == 3);

  CHECK_THROWS_AS(interpolate_curve(PointOracle::brute_force(1, 1), p2), Error);
  CHECK_THROWS_AS(interpolate_curve(PointOracle::brute_force(2, -1), p2), Error);
  CHECK_THROWS_AS(interpolate_curve(PointOracle::brute_force(2, 0), p2), Error);

  for (const auto& c : reduction_carriers()) {
    CAPTURE(format_carrier(c));
    const Greedoid g = greedoid_of(c);
    for (auto [a, b] : {std::pair{Rational(3), Rational(2)}, {Rational(3), Rational(1)}, {Rational(1), Rational(3)},
                        {ratio(-1, 2), ratio(2, 3)}}) {
      const auto oracle = PointOracle::brute_force(a, b);
      const auto res = interpolate_curve(oracle, c);
      CHECK(res.coefficients == tutte_restrict(g, res.curve));
      CHECK(res.oracle_calls == oracle.calls());
      CHECK(res.oracle_calls == (b == 1 ? g.rank() + 1 : g.size() + g.rank() + 1));
    }
  }
}

TEST_CASE("a counterfeit oracle is detected by the round trip") {
  const Carrier p2 = rooted_path(2);
  PointOracle liar(3, 2, [](const OracleInput&) { return Rational(7); });
  const auto r = interpolate_curve(liar, p2);
  CHECK(r.coefficients != tutte_restrict(greedoid_of(p2), r.curve));
}

TEST_CASE("interpolation along y = -1") {
  const Carrier p2 = rooted_path(2), s2 = rooted_star(2);
  const auto oracle = PointOracle::brute_force(3, -1);
  CHECK(interpolate_line_y_minus1(oracle, p2).coefficients ==
        tutte_restrict(greedoid_of(p2), CurveSpec::line_y(-1)));
  CHECK(interpolate_line_y_minus1(oracle, s2).coefficients == tutte_restrict(greedoid_of(s2), CurveSpec::line_y(-1)));
  CHECK_THROWS_AS(interpolate_line_y_minus1(PointOracle::brute_force(ratio(1, 2), -1), p2), Error);
  CHECK_THROWS_AS(interpolate_line_y_minus1(PointOracle::brute_force(1, -1), p2), Error);

  for (const auto& c : reduction_carriers()) {
    CAPTURE(format_carrier(c));
    const Greedoid g = greedoid_of(c);
    const auto expected = tutte_restrict(g, CurveSpec::line_y(-1));
    for (Rational a : {Rational(3), ratio(-2, 3)}) {
      const auto o = PointOracle::brute_force(a, -1);
      const auto r = interpolate_line_y_minus1(o, c);
      CHECK(r.coefficients == expected);
      CHECK(r.oracle_calls == g.rank() + 1);
    }
  }
}

TEST_CASE("a = 0 on y = -1 goes through the path attachment") {
  std::vector<Carrier> small = {rooted_path(1), rooted_path(2), rooted_star(2), directed_path(2),
                                RootedDigraph{2, {{0, 1}, {1, 1}}, 0, {}}, identity_matrix(2)};
  for (const auto& c : small) {
    CAPTURE(format_carrier(c));
    const auto o = PointOracle::brute_force(0, -1);
    const auto r = interpolate_line_y_minus1(o, c);
    CHECK(r.coefficients == tutte_restrict(greedoid_of(c), CurveSpec::line_y(-1)));
  }
  // the identity itself
  for (const auto& g : fixtures::small_graphs()) {
    if (!is_connected(g) || g.edges.size() > 4) continue;
    const Greedoid gg = greedoid_of(g);
    CHECK(tutte_eval(greedoid_of(attach_graphs(g, rooted_path(2))), 0, -1) ==
          power(Rational(-1), static_cast<long>(gg.rank())) * tutte_eval(gg, 2, -1));
  }
}

TEST_CASE("other lines through star attachments") {
  for (const auto& c : reduction_carriers()) {
    const Greedoid g = greedoid_of(c);
    const auto o = PointOracle::brute_force(3, 2);
    CHECK(interpolate_line(o, c).coefficients == tutte_restrict(g, CurveSpec::line_y(2)));
  }
  const Carrier d = directed_path(2);
  CHECK_THROWS_AS(interpolate_line(PointOracle::brute_force(2, 2), d), Error);
  CHECK_THROWS_AS(interpolate_line(PointOracle::brute_force(ratio(2, 3), 2), d), Error);
  CHECK_THROWS_AS(interpolate_line(PointOracle::brute_force(0, 2), d), Error);
}

TEST_CASE("recovering T(G; 1, 0)") {
  const auto o = PointOracle::brute_force(2, 0);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(recover_point_1_0(o, RootedGraph{3, {{0, 1}, {1, 2}, {2, 0}}, r, {}}) == 2);
  }
  CHECK(recover_point_1_0(o, rooted_path(3)) == 1);
  CHECK(tutte_eval(greedoid_of(RootedGraph{3, {{0, 1}, {1, 2}}, 0, {}}), 1, 0) == 1);
  CHECK(tutte_eval(greedoid_of(RootedGraph{4, {{0, 1}, {2, 3}}, 0, {}}), 1, 0) == 0);
  CHECK_THROWS_AS(recover_point_1_0(PointOracle::brute_force(0, 0), rooted_path(1)), Error);
  for (const auto& c : reduction_carriers()) {
    CHECK(recover_point_1_0(PointOracle::brute_force(ratio(-3, 2), 0), c) == tutte_eval(greedoid_of(c), 1, 0));
  }
}

TEST_CASE("subtree counts from rooted restrictions") {
  const auto tri = subtree_count_via_rooted(UnrootedGraph{3, {{0, 1}, {1, 2}, {2, 0}}});
  CHECK(tri.per_root[0] == std::vector<Integer>{1, 2, 3});
  CHECK(tri.by_size == std::vector<Integer>{3, 3, 3});
  CHECK(tri.total == 9);
  CHECK(subtree_count_via_rooted(UnrootedGraph{2, {{0, 1}}}).total == 3);
  CHECK(subtree_count_via_rooted(UnrootedGraph{1, {}}).total == 1);
  CHECK_THROWS_AS(subtree_count_via_rooted(UnrootedGraph{2, {}}), Error);
  for (const auto& g : fixtures::small_graphs()) {
    if (!is_connected(g)) continue;
    CHECK(subtree_count_via_rooted(underlying(g)).total == count_subtrees(underlying(g)));
  }
}

TEST_CASE("reliability identity") {
  const auto single = reliability_identity(RootedDigraph{2, {{0, 1}}, 0, {}}, ratio(1, 3));
  CHECK(single.direct == ratio(2, 3));
  CHECK(single.holds());
  const auto path = reliability_identity(directed_path(2), ratio(1, 2));
  CHECK(path.direct == ratio(1, 4));
  CHECK(path.holds());
  const auto parallel = reliability_identity(RootedDigraph{2, {{0, 1}, {0, 1}}, 0, {}}, ratio(1, 2));
  CHECK(parallel.direct == ratio(3, 4));
  CHECK(parallel.holds());
  CHECK_THROWS_AS(reliability_identity(directed_path(2), 1), Error);
  CHECK_THROWS_AS(reliability_identity(directed_path(2), 0), Error);
  for (const auto& d : fixtures::small_digraphs()) {
    if (!is_root_connected(d)) continue;
    for (Rational p : {ratio(1, 3), ratio(1, 2), ratio(2, 3)}) CHECK(reliability_identity(d, p).holds());
  }
}

TEST_CASE("digon reduction") {
  CHECK(digon_reduction_check(RootedDigraph{2, {{0, 1}}, 0, {}}));
  CHECK(digon_reduction_check(directed_path(2)));
  CHECK(digon_reduction_check(RootedDigraph{2, {{0, 1}, {0, 1}}, 0, {}}));
}

TEST_CASE("binary identities") {
  for (const auto& row : binary_identities_check(identity_matrix(2), {3})) CHECK(row.holds());
  for (const auto& row : binary_identities_check(example_matrix(), {2, ratio(1, 2), -3, ratio(5, 7), 0})) {
    CHECK(row.holds());
  }
  const auto half = binary_identities_check(identity_matrix(2), {ratio(1, 2)});
  CHECK(half[0].lhs_ym1 == 0);
  CHECK(half[0].holds());
  CHECK_THROWS_AS(binary_identities_check(BinaryMatrix::from_strings({"11", "11"}), {2}), Error);
}

TEST_CASE("digraph y = 2 transfers through the directed 2-path") {
  for (const auto& d : fixtures::small_digraphs()) {
    if (!is_root_connected(d)) continue;
    const auto zero = digraph_y2_transfer(d, 0);
    CHECK(zero.image_x == -1);
    CHECK(zero.factor == power(Rational(2), static_cast<long>(greedoid_of(d).rank())));
    CHECK(zero.holds());
    const auto two_thirds = digraph_y2_transfer(d, ratio(2, 3));
    CHECK(two_thirds.image_x == ratio(5, 6));
    CHECK(two_thirds.factor == power(ratio(8, 9), static_cast<long>(greedoid_of(d).rank())));
    CHECK(two_thirds.holds());
  }
  // T(P_2; 2/3, 2) is 8/9, so the landing point is 5/6 rather than 25/27.
  CHECK(tutte_eval(greedoid_of(directed_path(2)), ratio(2, 3), 2) == ratio(8, 9));
}

TEST_CASE("reports serialize") {
  const auto r = interpolate_curve(PointOracle::brute_force(3, 2), Carrier(rooted_path(1)));
  const auto j = to_json(r);
  CHECK(j["mode"] == "H_alpha");
  CHECK(j["oracle_calls"] == 3);
  CHECK(laurent_from_json(j["coefficients"]) == r.coefficients);
}
