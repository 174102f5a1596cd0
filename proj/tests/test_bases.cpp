#include <doctest.h>

#include <bit>
#include <map>

#include "gtutte/bases.hpp"
#include "gtutte/error.hpp"

using namespace gtutte;

namespace {

std::vector<FieldSpec> all_fields() { return {FieldSpec::gf2(), FieldSpec::gfp(3), FieldSpec::rationals()}; }

std::uint64_t element(const AkMatrix& a, std::size_t i, std::size_t j, std::size_t letter) {
  return std::uint64_t{1} << ((i * a.k + j) * 4 + letter);
}

bool is_basis(const AkMatrix& a, std::uint64_t s, const FieldSpec& f) {
  const auto mk = restrict_Mk(a);
  if (static_cast<std::size_t>(std::popcount(s)) != mk.rank_target) return false;
  std::vector<std::size_t> cols;
  for (std::size_t t = 0; t < mk.columns.size(); ++t) {
    if ((s >> t) & 1) cols.push_back(mk.columns[t]);
  }
  return matroid_rank(a, cols, f) == mk.rank_target;
}

}  // namespace

TEST_CASE("A_k layout") {
  const auto a = build_Ak(complete_graph(2), 1);
  CHECK(a.rows() == 2 + 1 + 1);
  CHECK(a.cols() == 2 + 1 + 4);
  const std::vector<std::vector<std::int64_t>> expected = {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (std::size_t l = 0; l < 4; ++l) {
    const auto col = a.column(a.block_col(0, 0, l));
    CHECK(std::vector<std::int64_t>{col[0], col[1], col[a.f_row(0, 0)]} == expected[l]);
    CHECK(col[2] == 0);  // the edge row is empty
  }
  CHECK(a.column(a.edge_col(0)) == std::vector<std::int64_t>{1, 1, 0, 0});
  CHECK(a.col_labels[a.block_col(0, 0, 2)] == "y1,1");

  const auto tri = build_Ak(cycle_graph(3), 1);
  CHECK(tri.rows() == 9);
  CHECK(tri.cols() == 18);
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto p = build_Ak(path_graph(3), k);
    CHECK(p.rows() == 4 + 3 + 3 * k);
    CHECK(p.cols() == 4 + 3 + 12 * k);
  }
  // the displayed block uses the lower endpoint as v_a whatever the edge orientation
  const auto flipped = build_Ak(SimpleGraph{2, {{1, 0}}}, 1);
  CHECK(flipped.entries == a.entries);

  CHECK_THROWS_AS(build_Ak(SimpleGraph{2, {{0, 0}, {0, 1}}}, 1), Error);
  CHECK_THROWS_AS(build_Ak(SimpleGraph{2, {{0, 1}, {1, 0}}}, 1), Error);
  CHECK_THROWS_AS(build_Ak(SimpleGraph{3, {{0, 1}}}, 1), Error);
  CHECK_THROWS_AS(build_Ak(complete_graph(2), 0), Error);
}

TEST_CASE("M_k and its rank") {
  const auto k2 = restrict_Mk(build_Ak(complete_graph(2), 1));
  CHECK(k2.columns.size() == 4);
  CHECK(k2.rank_target == 3);
  const auto tri = build_Ak(cycle_graph(3), 1);
  const auto mk = restrict_Mk(tri);
  CHECK(mk.columns.size() == 12);
  CHECK(mk.rank_target == 6);
  for (const auto& f : all_fields()) {
    CHECK(matroid_rank(tri, mk.columns, f) == 6);
    std::vector<std::size_t> all(tri.cols());
    for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
    CHECK(matroid_rank(tri, all, f) == 6);
  }
  // {e, x, y} is a circuit only in characteristic two
  const auto a = build_Ak(complete_graph(2), 1);
  const std::vector<std::size_t> exy = {a.edge_col(0), a.block_col(0, 0, 1), a.block_col(0, 0, 2)};
  CHECK(matroid_rank(a, exy, FieldSpec::gf2()) == 2);
  CHECK(matroid_rank(a, exy, FieldSpec::gfp(3)) == 3);
  CHECK(matroid_rank(a, exy, FieldSpec::rationals()) == 3);
}

TEST_CASE("fields") {
  CHECK_THROWS_AS(FieldSpec::gfp(9), Error);
  CHECK_THROWS_AS(FieldSpec::gfp(2), Error);
  CHECK(FieldSpec::gfp(7).name() == "GF7");
  Echelon e(FieldSpec::rationals(), 3);
  CHECK(e.add({2, 4, 6}));
  CHECK(e.add({0, 3, 1}));
  CHECK_FALSE(e.add({2, 7, 7}));
  CHECK(e.contains({4, 5, 11}));
  CHECK(e.canonical() == std::vector<std::vector<std::int64_t>>{{3, 0, 7}, {0, 3, 1}});
  e.pop();
  CHECK(e.rank() == 1);
  CHECK_FALSE(e.contains({0, 3, 1}));

  Echelon g(FieldSpec::gfp(5), 2);
  CHECK(g.add({2, 3}));
  CHECK_FALSE(g.add({4, 6}));
  CHECK(g.canonical() == std::vector<std::vector<std::int64_t>>{{1, 4}});
}

TEST_CASE("basis counts") {
  const auto k1 = build_Ak(complete_graph(2), 1), k2 = build_Ak(complete_graph(2), 2);
  CHECK(count_bases(k1, FieldSpec::gf2(), BasisCountMethod::Direct) == 4);
  CHECK(count_bases(k1, FieldSpec::rationals(), BasisCountMethod::Direct) == 4);
  CHECK(count_bases(k2, FieldSpec::gf2(), BasisCountMethod::Direct) == 56);
  CHECK(predicted_bases_per_template(2, 1, 1, 1, true) == 4);
  CHECK(predicted_bases_per_template(2, 1, 2, 1, true) == 56);
  CHECK(predicted_bases_per_template(2, 1, 1, 1, false) == 4);

  // the two counters agree
  std::vector<std::pair<SimpleGraph, std::size_t>> cases = {
      {complete_graph(2), 1}, {complete_graph(2), 2}, {complete_graph(2), 3}, {path_graph(2), 1},
      {path_graph(2), 2},     {cycle_graph(3), 1},    {cycle_graph(4), 1},    {path_graph(3), 1},
      {SimpleGraph{4, {{0, 1}, {2, 3}}}, 1}};
  for (const auto& [g, k] : cases) {
    const auto a = build_Ak(g, k);
    for (const auto& f : all_fields()) {
      CAPTURE(f.name());
      CAPTURE(k);
      CHECK(count_bases(a, f, BasisCountMethod::Direct) == count_bases(a, f, BasisCountMethod::Blockwise));
    }
  }
  CHECK_THROWS_AS(count_bases(k2, FieldSpec::gf2(), BasisCountMethod::Direct, {4, 16}), Error);
  CHECK_THROWS_AS(count_bases(build_Ak(complete_graph(2), 5), FieldSpec::gf2(), BasisCountMethod::Blockwise), Error);
}

TEST_CASE("feasible templates") {
  const auto k2 = enumerate_feasible_templates(complete_graph(2), true);
  CHECK(k2.t == std::vector<Integer>{0, 1});
  REQUIRE(k2.templates.size() == 1);
  CHECK(k2.templates[0].edges[0].kind == EdgeState::Kind::Bidirected);
  CHECK(enumerate_feasible_templates(complete_graph(2), false).t == std::vector<Integer>{0, 1});

  for (bool two : {true, false}) {
    CHECK(enumerate_feasible_templates(cycle_graph(4), two).t[2] == 2);
    CHECK(enumerate_feasible_templates(path_graph(3), two).t[2] == 1);
    CHECK(enumerate_feasible_templates(cycle_graph(3), two).t[1] == 24);  // 3 matchings, 2 edges, 4 states each
    for (const auto& g : {cycle_graph(4), path_graph(3), cycle_graph(3), complete_graph(4)}) {
      for (const auto& t : enumerate_feasible_templates(g, two).templates) {
        std::size_t present = 0;
        for (const auto& e : t.edges) present += e.kind != EdgeState::Kind::Absent;
        CHECK(2 * t.bidirected() + (present - t.bidirected()) == g.n);
      }
    }
  }
  // an all-undirected triangle is a cycle: bad in characteristic two, good only with an odd wz count
  using K = EdgeState::Kind;
  const Template odd{{{K::Undirected, "wz"}, {K::Undirected, "xy"}, {K::Undirected, "xy"}}};
  const Template even{{{K::Undirected, "wz"}, {K::Undirected, "wz"}, {K::Undirected, "xy"}}};
  CHECK(is_feasible_template(cycle_graph(3), odd, false));
  CHECK_FALSE(is_feasible_template(cycle_graph(3), even, false));
  CHECK_FALSE(is_feasible_template(cycle_graph(3), odd, true));
  CHECK_THROWS_AS(enumerate_feasible_templates(cycle_graph(7), true), Error);
}

TEST_CASE("templates of bases") {
  const auto a = build_Ak(complete_graph(2), 1);
  const auto f = FieldSpec::gf2();
  const auto xyz = element(a, 0, 0, 1) | element(a, 0, 0, 2) | element(a, 0, 0, 3);
  CHECK(template_of_basis(a, xyz, f).edges[0].kind == EdgeState::Kind::Bidirected);
  const auto wxy = element(a, 0, 0, 0) | element(a, 0, 0, 1) | element(a, 0, 0, 2);
  CHECK(template_of_basis(a, wxy, f).edges[0].kind == EdgeState::Kind::Bidirected);
  CHECK_THROWS_AS(template_of_basis(a, element(a, 0, 0, 0) | element(a, 0, 0, 1), f), Error);

  // the closure table on a single block with one extra element
  const auto p = build_Ak(path_graph(2), 1);
  std::map<std::string, std::pair<EdgeState::Kind, EdgeState::Kind>> table = {
      {"wx", {EdgeState::Kind::TowardLower, EdgeState::Kind::TowardLower}},
      {"yz", {EdgeState::Kind::TowardLower, EdgeState::Kind::TowardLower}},
      {"wy", {EdgeState::Kind::TowardHigher, EdgeState::Kind::TowardHigher}},
      {"xz", {EdgeState::Kind::TowardHigher, EdgeState::Kind::TowardHigher}},
      {"wz", {EdgeState::Kind::Undirected, EdgeState::Kind::Undirected}},
      {"xy", {EdgeState::Kind::Undirected, EdgeState::Kind::Undirected}}};
  for (const auto& [label, kinds] : table) {
    const std::size_t l0 = std::string("wxyz").find(label[0]), l1 = std::string("wxyz").find(label[1]);
    const auto s = element(p, 0, 0, l0) | element(p, 0, 0, l1) | element(p, 1, 0, 0);
    for (const auto& field : all_fields()) {
      Template t;
      REQUIRE(template_of_subset(p, s, field, t));
      CHECK(t.edges[0].kind == (field.characteristic_two() ? kinds.first : kinds.second));
      CHECK(t.edges[0].label == label);
      CHECK(t.edges[1].kind == EdgeState::Kind::Absent);
    }
  }
}

TEST_CASE("partition of bases by template") {
  std::vector<std::pair<SimpleGraph, std::size_t>> cases = {
      {complete_graph(2), 1}, {complete_graph(2), 2}, {path_graph(2), 1}, {path_graph(2), 2}, {cycle_graph(4), 1}};
  for (const auto& [g, k] : cases) {
    const auto a = build_Ak(g, k);
    for (const auto& f : all_fields()) {
      CAPTURE(f.name());
      CAPTURE(k);
      const auto census = enumerate_feasible_templates(g, f.characteristic_two());
      Rational predicted = 0;
      for (std::size_t b = 0; b < census.t.size(); ++b) {
        predicted += Rational(census.t[b]) * predicted_bases_per_template(g.n, g.edges.size(), k, b,
                                                                          f.characteristic_two());
      }
      CHECK(predicted == Rational(count_bases(a, f, BasisCountMethod::Direct)));

      std::map<Template, Integer> fibres;
      for_each_basis(a, f, [&](std::uint64_t b) { fibres[template_of_basis(a, b, f)] += 1; });
      CHECK(fibres.size() == census.templates.size());
      for (const auto& [t, count] : fibres) {
        CHECK(is_feasible_template(g, t, f.characteristic_two()));
        CHECK(Rational(count) ==
              predicted_bases_per_template(g.n, g.edges.size(), k, t.bidirected(), f.characteristic_two()));
      }
    }
  }
}

TEST_CASE("basis characterization on every subset") {
  std::vector<std::pair<SimpleGraph, std::size_t>> cases = {
      {complete_graph(2), 1}, {complete_graph(2), 2}, {complete_graph(2), 3}, {path_graph(2), 1}, {cycle_graph(3), 1}};
  for (const auto& [g, k] : cases) {
    const auto a = build_Ak(g, k);
    const std::size_t ground = 4 * g.edges.size() * k;
    REQUIRE(ground <= 14);
    for (const auto& f : all_fields()) {
      std::size_t bases = 0;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << ground); ++s) {
        Template t;
        const bool conditions = template_of_subset(a, s, f, t) && is_feasible_template(g, t, f.characteristic_two());
        const bool basis = is_basis(a, s, f);
        bases += basis;
        if (conditions != basis) {
          CAPTURE(f.name());
          CAPTURE(s);
          CHECK(conditions == basis);
        }
      }
      CHECK(Integer(bases) == count_bases(a, f, BasisCountMethod::Direct));
    }
  }
}

TEST_CASE("circuits of wz and xy pairs") {
  for (std::size_t len : {3, 4}) {
    const auto g = cycle_graph(len);
    for (std::size_t k : {1, 2}) {
      const auto a = build_Ak(g, k);
      for (const auto& f : {FieldSpec::gfp(3), FieldSpec::rationals()}) {
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << len); ++pattern) {
          std::vector<std::size_t> z;
          std::size_t wz = 0;
          for (std::size_t i = 0; i < len; ++i) {
            const std::size_t j = (i + pattern) % k;
            if ((pattern >> i) & 1) {
              ++wz;
              z.push_back(a.block_col(i, j, 0));
              z.push_back(a.block_col(i, j, 3));
            } else {
              z.push_back(a.block_col(i, j, 1));
              z.push_back(a.block_col(i, j, 2));
            }
          }
          const std::size_t r = matroid_rank(a, z, f);
          if (wz % 2 == 1) {
            CHECK(r == 2 * len);
            for (std::size_t v = 0; v < len; ++v) {
              auto with = z;
              with.push_back(a.vertex_col(v));
              CHECK(matroid_rank(a, with, f) == r);
            }
          } else {
            CHECK(r == 2 * len - 1);
            for (std::size_t drop = 0; drop < z.size(); ++drop) {
              auto less = z;
              less.erase(less.begin() + static_cast<std::ptrdiff_t>(drop));
              CHECK(matroid_rank(a, less, f) == less.size());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("perfect matchings from basis counts") {
  CHECK(count_perfect_matchings(complete_graph(2)) == 1);
  CHECK(count_perfect_matchings(cycle_graph(4)) == 2);
  CHECK(count_perfect_matchings(cycle_graph(3)) == 0);
  CHECK(count_perfect_matchings(complete_graph(4)) == 3);
  CHECK(count_perfect_matchings(cycle_graph(6)) == 2);

  const auto k2 = recover_perfect_matchings(complete_graph(2), FieldSpec::gf2());
  CHECK(k2.b == std::vector<Integer>{4, 56});
  CHECK(k2.t == std::vector<Rational>{0, 1});
  CHECK(k2.matches());

  for (const auto& f : all_fields()) {
    CAPTURE(f.name());
    for (const auto& [g, pm] : {std::pair{complete_graph(2), 1}, {path_graph(3), 1}, {cycle_graph(4), 2}}) {
      const auto r = recover_perfect_matchings(g, f);
      CHECK(r.recovered == pm);
      CHECK(r.direct == pm);
      CHECK(r.matches());
      const auto census = enumerate_feasible_templates(g, f.characteristic_two());
      for (std::size_t j = 0; j < census.t.size(); ++j) CHECK(r.t[j] == Rational(census.t[j]));
    }
  }
  CHECK_THROWS_AS(recover_perfect_matchings(cycle_graph(3), FieldSpec::gf2()), Error);
  const auto j = to_json(k2);
  CHECK(j["match"] == true);
  CHECK(j["b_k"][1]["bases"] == "56");
}
