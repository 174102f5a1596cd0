#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gtutte/constructions.hpp"
#include "gtutte/error.hpp"
#include "gtutte/tutte.hpp"

using namespace gtutte;

namespace {

const BivariatePolynomial kX = BivariatePolynomial::x();
const BivariatePolynomial kY = BivariatePolynomial::y();
const BivariatePolynomial kOne(Rational(1));

BivariatePolynomial path_polynomial() { return tutte_polynomial(greedoid_of(rooted_path(2))); }

BivariatePolynomial tutte_of(const Carrier& c) { return tutte_polynomial(greedoid_of(c)); }

// Rank-law check of an attachment against its parts.
bool rank_law_holds(const Greedoid& g1, const AttachmentFunction& f, const Greedoid& g2, const Greedoid& att) {
  const std::size_t n1 = g1.size(), n2 = g2.size();
  const auto ranks = rank_table(att);
  for (ElementSubset a = 0; a < ranks.size(); ++a) {
    const ElementSubset base = a & full_subset(n1);
    const ElementSubset reached = f(base);
    std::size_t expected = g1.rank_of(base);
    for (std::size_t i = 0; i < g1.rank(); ++i) {
      if (contains(reached, i)) expected += g2.rank_of((a >> (n1 + i * n2)) & full_subset(n2));
    }
    if (expected != ranks[a]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("thickening examples") {
  const auto s1 = thicken(rooted_star(1), 2);
  CHECK(s1.edges.size() == 2);
  CHECK(tutte_of(s1) == kX + kY);
  CHECK(predicted_thickening(kX, 1, 2, ThickeningMode::Generic) == kX + kY);

  for (const auto& c : fixtures::all_carriers()) {
    CHECK(enumerate_feasible(greedoid_of(thicken(c, 1))) == enumerate_feasible(greedoid_of(c)));
  }
  const auto m2 = thicken(example_matrix(), 2);
  CHECK(m2.cols() == 8);
  const auto t = tutte_of(example_matrix());
  CHECK(tutte_of(m2) == predicted_thickening(t, 3, 2, ThickeningMode::Generic));
  CHECK(tutte_eval(greedoid_of(m2), 1, 1) == 3 * 8);
}

TEST_CASE("thickening identity on every fixture") {
  for (const auto& c : fixtures::all_carriers()) {
    const Greedoid g = greedoid_of(c);
    if (g.size() > 7) continue;
    const auto t = tutte_polynomial(g);
    CAPTURE(format_carrier(c));
    for (std::size_t k = 1; k <= 3; ++k) {
      CAPTURE(k);
      const auto thick = tutte_polynomial(compress(thicken(c, k)));
      CHECK(thick == predicted_thickening(t, g.rank(), k, ThickeningMode::Generic));
      CHECK(fix_y(thick, -1) == predicted_thickening(t, g.rank(), k, ThickeningMode::YMinusOne));
      CHECK(fix_y(thick, 1) == predicted_thickening(t, g.rank(), k, ThickeningMode::YOne));
    }
  }
}

TEST_CASE("generic thickening matches carrier thickening and groups copies") {
  for (const auto& c : fixtures::all_carriers()) {
    const Greedoid g = greedoid_of(c);
    if (g.size() > 5) continue;
    for (std::size_t k = 2; k <= 3; ++k) {
      const Greedoid generic = thicken(g, k);
      const Greedoid concrete = greedoid_of(thicken(c, k));
      REQUIRE(generic.size() == concrete.size());
      CHECK(enumerate_feasible(generic) == enumerate_feasible(concrete));
      const auto pc = parallel_classes(generic);
      std::vector<std::size_t> class_of(generic.size());
      for (std::size_t i = 0; i < pc.classes.size(); ++i)
        for (auto e : pc.classes[i]) class_of[e] = i;
      for (std::size_t e = 0; e < g.size(); ++e)
        for (std::size_t i = 1; i < k; ++i) CHECK(class_of[e * k] == class_of[e * k + i]);
    }
  }
  CHECK_THROWS_AS(thicken(greedoid_of(rooted_star(33)), 2), Error);
}

TEST_CASE("attachment functions") {
  const auto p2 = rooted_path(2);
  const auto f = branching_attachment_function(p2);
  CHECK(f.map(0) == 0);
  CHECK(f.map(0b01) == 0b01);  // middle vertex is non-root vertex 1
  CHECK(f.map(0b11) == 0b11);
  const auto trivial = trivial_attachment_function(greedoid_of(p2));
  CHECK(trivial.map(0b11) == 0b11);
  CHECK(trivial.map(0) == 0);

  for (const auto& g : fixtures::small_graphs()) {
    if (!is_connected(g)) continue;
    CHECK_NOTHROW(check_attachment_function(branching_attachment_function(g)));
    CHECK_NOTHROW(check_attachment_function(trivial_attachment_function(greedoid_of(g))));
  }
  for (const auto& d : fixtures::small_digraphs()) {
    if (!is_root_connected(d)) continue;
    CHECK_NOTHROW(check_attachment_function(branching_attachment_function(d)));
  }
  CHECK_THROWS_AS(branching_attachment_function(RootedGraph{3, {{0, 1}}, 0, {}}), Error);

  AttachmentFunction wrong_size{greedoid_of(p2), [](ElementSubset) { return ElementSubset{1}; }};
  CHECK_THROWS_AS(check_attachment_function(wrong_size), Error);
  CHECK_THROWS_AS(attach(greedoid_of(p2), wrong_size, greedoid_of(rooted_star(1))), Error);
}

TEST_CASE("attachment examples") {
  const auto s1 = rooted_star(1);
  CHECK(tutte_of(attach_graphs(s1, s1)) == path_polynomial());
  CHECK(predicted_attachment(kX, kX, 1, 1, 1) == (kX - kOne).pow(2) * kY + kX);
  CHECK_THROWS_AS(predicted_attachment_at(kX, kX, 1, 1, 1, 0, 3), Error);

  const auto p2 = rooted_path(2);
  const auto empty = RootedGraph{1, {}, 0, {}};
  CHECK(attach_graphs(p2, empty).edges == p2.edges);

  const auto att = attach_graphs(p2, s1);
  CHECK(att.edges.size() == 4);
  const auto t = tutte_of(att);
  CHECK(t == predicted_attachment(tutte_of(p2), kX, 2, 1, 1));
  CHECK(t.evaluate(1, 1) == tutte_eval(greedoid_of(att), 1, 1));
}

TEST_CASE("attachment identity and independence from f") {
  const std::vector<RootedGraph> parts = {rooted_path(1), rooted_path(2), rooted_star(1), rooted_star(2)};
  const std::vector<std::pair<Rational, Rational>> points = {
      {2, 3}, {ratio(1, 2), ratio(-2, 3)}, {-1, 2}, {3, ratio(1, 3)}, {ratio(5, 4), 0}, {ratio(-2, 5), ratio(7, 2)}};
  for (const auto& g : parts)
    for (const auto& h : parts) {
      const Greedoid g1 = greedoid_of(g), g2 = greedoid_of(h);
      const auto t1 = tutte_polynomial(g1), t2 = tutte_polynomial(g2);
      const auto graph_form = tutte_of(attach_graphs(g, h));
      const auto f = branching_attachment_function(g);
      const Greedoid branching = attach(g1, f, g2);
      const Greedoid trivial = attach(g1, trivial_attachment_function(g1), g2);
      CHECK(enumerate_feasible(branching) == enumerate_feasible(greedoid_of(attach_graphs(g, h))));
      CHECK(tutte_polynomial(trivial) == graph_form);
      CHECK(graph_form == predicted_attachment(t1, t2, g1.rank(), g2.rank(), g2.size()));
      for (auto [a, b] : points) {
        if (t2.evaluate(a, b) == 0) continue;
        CHECK(graph_form.evaluate(a, b) == predicted_attachment_at(t1, t2, g1.rank(), g2.rank(), g2.size(), a, b));
      }
      CHECK(rank_law_holds(g1, f, g2, branching));
    }
}

TEST_CASE("digraph and binary attachments") {
  const auto dp = directed_path(2), ds = directed_star(2);
  const auto att = attach_digraphs(dp, ds);
  const Greedoid g1 = greedoid_of(dp), g2 = greedoid_of(ds);
  CHECK(tutte_of(att) == predicted_attachment(tutte_polynomial(g1), tutte_polynomial(g2), 2, 2, 2));
  CHECK(enumerate_feasible(attach(g1, branching_attachment_function(dp), g2)) == enumerate_feasible(greedoid_of(att)));

  const Greedoid ex = greedoid_of(example_matrix()), i2 = greedoid_of(identity_matrix(2));
  const Greedoid generic = attach(ex, trivial_attachment_function(ex), i2);
  CHECK(verify_feasible_family(generic.size(), enumerate_feasible(generic)).ok());
  CHECK(tutte_polynomial(generic) == predicted_attachment(tutte_polynomial(ex), tutte_polynomial(i2), 3, 2, 2));
}

TEST_CASE("full rank attachment") {
  const auto i1 = identity_matrix(1);
  CHECK(tutte_of(block_diag(i1, i1)) == path_polynomial());
  CHECK(predicted_full_rank(kX, kX, 1, 1) == path_polynomial());
  CHECK(predicted_full_rank(kX, kOne, 0, 0) == kX);
  CHECK_THROWS_AS(block_diag(BinaryMatrix::from_strings({"10", "10"}), i1), Error);

  const Greedoid ex = greedoid_of(example_matrix());
  const Greedoid none;
  CHECK(enumerate_feasible(full_rank_attach(ex, none)) == enumerate_feasible(ex));

  const std::vector<BinaryMatrix> parts = {identity_matrix(1), identity_matrix(2), example_matrix()};
  for (const auto& m1 : parts)
    for (const auto& m2 : parts) {
      const Greedoid g1 = greedoid_of(m1), g2 = greedoid_of(m2);
      const auto block = tutte_of(block_diag(m1, m2));
      CHECK(enumerate_feasible(full_rank_attach(g1, g2)) == enumerate_feasible(greedoid_of(block_diag(m1, m2))));
      CHECK(block == predicted_full_rank(tutte_polynomial(g1), tutte_polynomial(g2), g2.rank(), g2.size()));
    }
  for (std::size_t k = 1; k <= 4; ++k) CHECK(tutte_of(identity_matrix(k)) == tutte_of(rooted_path(k)));
}

TEST_CASE("stretch subtree counts") {
  const UnrootedGraph k2{2, {{0, 1}}};
  const auto typed = count_subtrees_typed(k2);
  CHECK(typed[0][0] == 1);
  CHECK(typed[1][0] == 2);
  CHECK(count_subtrees(stretch_unrooted(k2, 2)) == 6);
  const UnrootedGraph triangle{3, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK(count_subtrees(triangle) == 9);

  for (const auto& g : {k2, UnrootedGraph{3, {{0, 1}, {1, 2}}}, triangle}) {
    const auto t = count_subtrees_typed(g);
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(count_subtrees(stretch_unrooted(g, k)) == predicted_stretch_subtrees(t, g.edges.size(), k));
    }
    CHECK(predicted_stretch_subtrees(t, g.edges.size(), 1) == count_subtrees(g));
  }
}

TEST_CASE("digon stretch") {
  const RootedDigraph arc{2, {{0, 1}}, 0, {}};
  const auto d1 = digon_stretch(arc, 1);
  CHECK(d1.arcs.size() == 3);
  CHECK(d1.labels == std::vector<std::string>{"a1:p0", "a1:p1", "a1:q1"});
  CHECK(tutte_restrict(greedoid_of(d1), CurveSpec::h0x()) == LaurentPolynomial::monomial(1));
  CHECK(digon_stretch(directed_path(2), 3).arcs.size() == 2 * 7);
  CHECK_THROWS_AS(digon_stretch(RootedDigraph{2, {}, 0, {}}, 1), Error);

  for (const auto& d : fixtures::root_connected_digraphs(2, 3)) {
    const Greedoid g = greedoid_of(d);
    const auto tx1 = tutte_restrict(g, CurveSpec::h0x());
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto stretched = tutte_restrict(greedoid_of(digon_stretch(d, k)), CurveSpec::h0x());
      CHECK(stretched == predicted_digon_stretch(tx1, d.arcs.size(), g.rank(), k));
    }
    const Rational lhs = tutte_eval(greedoid_of(digon_stretch(d, 2)), 1, -1);
    CHECK(lhs == power(Rational(3), static_cast<long>(d.arcs.size() - g.rank())) * tutte_eval(g, 1, ratio(1, 3)));
  }
}

TEST_CASE("bidirection keeps y = 1") {
  const auto restrict_y1 = [](const Greedoid& g) { return tutte_restrict(g, CurveSpec::h0y()); };
  const auto dp = bidirect(rooted_path(2));
  CHECK(dp.arcs.size() == 4);
  CHECK(restrict_y1(greedoid_of(dp)).to_string("x") == "1 - x + x^2");
  CHECK(restrict_y1(greedoid_of(bidirect(rooted_star(3)))) == LaurentPolynomial::monomial(3));
  CHECK(bidirect(RootedGraph{1, {}, 0, {}}).arcs.empty());
  CHECK_THROWS_AS(bidirect(RootedGraph{2, {}, 0, {}}), Error);

  for (const auto& g : fixtures::connected_rooted_graphs(3, 4)) {
    CHECK(restrict_y1(greedoid_of(bidirect(g))) == restrict_y1(greedoid_of(g)));
  }
}
