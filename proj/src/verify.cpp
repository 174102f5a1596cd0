#include "gtutte/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gtutte/bases.hpp"
#include "gtutte/constructions.hpp"
#include "gtutte/error.hpp"
#include "gtutte/reductions.hpp"
#include "gtutte/tutte.hpp"

namespace gtutte {

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.witness = describe();
    }
  }

 private:
  SuiteResult& r_;
};

BivariatePolynomial X() { return BivariatePolynomial::x(); }
BivariatePolynomial Y() { return BivariatePolynomial::y(); }
BivariatePolynomial one() { return BivariatePolynomial(Rational(1)); }

BivariatePolynomial tutte_of(const Carrier& c, std::size_t max_ground = 20) {
  return tutte_polynomial(greedoid_of(c), {max_ground});
}

std::string point_text(const Rational& a, const Rational& b) {
  return "(" + a.get_str() + ", " + b.get_str() + ")";
}

const std::vector<std::pair<Rational, Rational>>& six_points() {
  static const std::vector<std::pair<Rational, Rational>> pts = {
      {2, 3}, {ratio(1, 2), ratio(-2, 3)}, {-1, 2}, {3, ratio(1, 3)}, {ratio(5, 4), 0}, {ratio(-2, 5), ratio(7, 2)}};
  return pts;
}

ElementSubset one_based(std::initializer_list<std::size_t> cols) {
  ElementSubset a = 0;
  for (auto c : cols) a |= singleton(c - 1);
  return a;
}

// Smallest relabelling of the non-root vertices, as a sorted pair list.
std::vector<VertexPair> canonical_pairs(std::size_t n, const std::vector<VertexPair>& pairs, bool directed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<VertexPair> best;
  bool first = true;
  do {
    std::vector<VertexPair> mapped;
    for (auto [u, v] : pairs) {
      auto a = perm[u], b = perm[v];
      if (!directed && a > b) std::swap(a, b);
      mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = std::move(mapped);
    first = false;
  } while (n > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

// All multisets of `size` items drawn from 0..kinds-1, in lexicographic order.
void for_each_multiset(std::size_t kinds, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(size, 0);
  while (true) {
    f(pick);
    std::size_t p = size;
    while (p > 0 && pick[p - 1] == kinds - 1) --p;
    if (p == 0) return;
    ++pick[p - 1];
    for (std::size_t q = p; q < size; ++q) pick[q] = pick[p - 1];
  }
}

// ---------------------------------------------------------------- suites

void closed_forms(Tally& t) {
  for (std::size_t k = 1; k <= 6; ++k) {
    BivariatePolynomial path(Rational(1));
    for (std::size_t i = 1; i <= k; ++i) path += (X() - one()).pow(static_cast<unsigned>(i)) * Y().pow(static_cast<unsigned>(i - 1));
    t.check(tutte_of(rooted_path(k)) == path, [&] { return "T(P_" + std::to_string(k) + ")"; });
    t.check(tutte_of(rooted_star(k)) == X().pow(static_cast<unsigned>(k)), [&] { return "T(S_" + std::to_string(k) + ")"; });
  }
  const auto p2 = tutte_of(rooted_path(2)).to_string();
  t.check(p2 == "x^2*y - 2*x*y + x + y", [&] { return "T(P_2) printed as " + p2; });
}

void example_matrix_suite(Tally& t) {
  const Greedoid g = greedoid_of(example_matrix());
  std::vector<ElementSubset> listed = {0,
                                       one_based({1}),
                                       one_based({4}),
                                       one_based({1, 3}),
                                       one_based({1, 4}),
                                       one_based({3, 4}),
                                       one_based({1, 2, 3}),
                                       one_based({1, 2, 4}),
                                       one_based({2, 3, 4})};
  std::sort(listed.begin(), listed.end());
  t.check(enumerate_feasible(g) == listed, [] { return "feasible family differs from the nine listed sets"; });
  for (auto [a, b, expected] : {std::tuple{1, 1, 3}, {2, 1, 9}, {2, 2, 16}}) {
    const Rational got = tutte_eval(g, a, b);
    t.check(got == expected, [&] { return "T" + point_text(a, b) + " = " + got.get_str(); });
  }
}

void thickening_suite(Tally& t) {
  for (const auto& c : identity_carriers()) {
    const Greedoid g = greedoid_of(c);
    const auto tp = tutte_polynomial(g);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto where = [&] { return family_name(c) + " " + format_carrier(c) + " k=" + std::to_string(k); };
      const auto thick = tutte_of(thicken(c, k), 24);
      const auto generic = predicted_thickening(tp, g.rank(), k, ThickeningMode::Generic);
      for (const auto& [a, b] : six_points()) {
        t.check(thick.evaluate(a, b) == generic.evaluate(a, b), [&] { return where() + " at " + point_text(a, b); });
      }
      t.check(fix_y(thick, -1) == predicted_thickening(tp, g.rank(), k, ThickeningMode::YMinusOne),
              [&] { return where() + " on y = -1"; });
      t.check(fix_y(thick, 1) == predicted_thickening(tp, g.rank(), k, ThickeningMode::YOne),
              [&] { return where() + " on y = 1"; });
    }
  }
}

const std::vector<RootedGraph>& attachment_parts() {
  static const std::vector<RootedGraph> parts = {rooted_path(1), rooted_path(2), rooted_star(1), rooted_star(2)};
  return parts;
}

void attachment_suite(Tally& t) {
  const std::vector<std::string> names = {"P_1", "P_2", "S_1", "S_2"};
  const auto& parts = attachment_parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto where = [&] { return names[i] + " ~ " + names[j]; };
      const Greedoid g1 = greedoid_of(parts[i]), g2 = greedoid_of(parts[j]);
      const auto t1 = tutte_polynomial(g1), t2 = tutte_polynomial(g2);
      const auto graph_form = tutte_of(attach_graphs(parts[i], parts[j]));
      t.check(graph_form == predicted_attachment(t1, t2, g1.rank(), g2.rank(), g2.size()), where);
      for (const auto& [a, b] : six_points()) {
        if (t2.evaluate(a, b) == 0) continue;
        t.check(graph_form.evaluate(a, b) ==
                    predicted_attachment_at(t1, t2, g1.rank(), g2.rank(), g2.size(), a, b),
                [&] { return where() + " at " + point_text(a, b); });
      }
      const Greedoid trivial = attach(g1, trivial_attachment_function(g1), g2);
      t.check(tutte_polynomial(trivial) == graph_form, [&] { return where() + " with the trivial function"; });
      const Greedoid branching = attach(g1, branching_attachment_function(parts[i]), g2);
      t.check(enumerate_feasible(branching) == enumerate_feasible(greedoid_of(attach_graphs(parts[i], parts[j]))),
              [&] { return where() + " generic form with the branching function"; });
    }
  }
}

void full_rank_suite(Tally& t) {
  const std::vector<BinaryMatrix> parts = {identity_matrix(1), identity_matrix(2), example_matrix()};
  const std::vector<std::string> names = {"I_1", "I_2", "Ex"};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Greedoid g1 = greedoid_of(parts[i]), g2 = greedoid_of(parts[j]);
      const auto block = tutte_of(block_diag(parts[i], parts[j]));
      t.check(block == predicted_full_rank(tutte_polynomial(g1), tutte_polynomial(g2), g2.rank(), g2.size()),
              [&] { return "diag(" + names[i] + ", " + names[j] + ")"; });
      t.check(enumerate_feasible(full_rank_attach(g1, g2)) == enumerate_feasible(greedoid_of(block_diag(parts[i], parts[j]))),
              [&] { return "generic full rank attachment of " + names[i] + ", " + names[j]; });
    }
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    t.check(tutte_of(identity_matrix(k)) == tutte_of(rooted_path(k)), [&] { return "I_" + std::to_string(k); });
  }
}

void stretch_suite(Tally& t) {
  const UnrootedGraph k2{2, {{0, 1}}}, p2{3, {{0, 1}, {1, 2}}}, triangle{3, {{0, 1}, {1, 2}, {2, 0}}};
  const std::vector<std::pair<std::string, UnrootedGraph>> graphs = {{"K_2", k2}, {"P_2", p2}, {"triangle", triangle}};
  for (const auto& [name, g] : graphs) {
    const auto typed = count_subtrees_typed(g);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto direct = count_subtrees(stretch_unrooted(g, k));
      t.check(direct == predicted_stretch_subtrees(typed, g.edges.size(), k),
              [&] { return name + " k=" + std::to_string(k) + ": " + direct.get_str(); });
    }
  }
  const auto total = count_subtrees(triangle);
  t.check(total == 9, [&] { return "triangle has " + total.get_str() + " subtrees"; });
}

void digon_suite(Tally& t) {
  for (const auto& d : rooted_digraph_catalogue(3)) {
    const auto where = [&] { return format_carrier(d); };
    const Greedoid g = greedoid_of(d);
    const auto tx1 = tutte_restrict(g, CurveSpec::h0x());
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto stretched = tutte_restrict(greedoid_of(digon_stretch(d, k)), CurveSpec::h0x());
      t.check(stretched == predicted_digon_stretch(tx1, d.arcs.size(), g.rank(), k),
              [&] { return where() + " k=" + std::to_string(k); });
    }
    const Rational lhs = tutte_eval(greedoid_of(digon_stretch(d, 2)), 1, -1);
    const Rational rhs = power(Rational(3), static_cast<long>(d.arcs.size() - g.rank())) * tutte_eval(g, 1, ratio(1, 3));
    t.check(lhs == rhs, [&] { return where() + " T(D_2; 1, -1) = " + lhs.get_str() + " vs " + rhs.get_str(); });
  }
}

void reduction_suite(Tally& t) {
  for (const auto& c : reduction_catalogue()) {
    const Greedoid g = greedoid_of(c);
    const auto where = [&](const std::string& what) { return family_name(c) + " " + format_carrier(c) + " " + what; };
    for (auto [a, b] : {std::pair{Rational(3), Rational(2)}, {Rational(3), Rational(1)}, {Rational(1), Rational(3)}}) {
      const auto oracle = PointOracle::brute_force(a, b);
      const auto r = interpolate_curve(oracle, c);
      const std::size_t calls = b == 1 ? g.rank() + 1 : g.size() + g.rank() + 1;
      t.check(r.coefficients == tutte_restrict(g, r.curve), [&] { return where(r.mode + " at " + point_text(a, b)); });
      t.check(r.oracle_calls == calls && oracle.calls() == calls,
              [&] { return where("used " + std::to_string(r.oracle_calls) + " calls at " + point_text(a, b)); });
    }
    const auto oracle = PointOracle::brute_force(3, -1);
    const auto r = interpolate_line_y_minus1(oracle, c);
    t.check(r.coefficients == tutte_restrict(g, CurveSpec::line_y(-1)), [&] { return where("on y = -1"); });
    t.check(r.oracle_calls == g.rank() + 1, [&] { return where("y = -1 call count"); });
  }
}

void easy_points_suite(Tally& t) {
  const std::vector<RootedDigraph> acyclic = {directed_path(2), directed_star(2), directed_path(3),
                                              RootedDigraph{3, {{0, 1}, {0, 2}, {1, 2}}, 0, {}},
                                              RootedDigraph{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, {}}};
  const std::vector<RootedDigraph> cyclic = {RootedDigraph{3, {{0, 1}, {1, 2}, {2, 1}}, 0, {}},
                                             RootedDigraph{2, {{0, 1}, {1, 1}}, 0, {}},
                                             RootedDigraph{3, {{0, 1}, {1, 2}, {2, 0}}, 0, {}}};
  for (const auto& d : acyclic) {
    for (Rational a : {Rational(2), ratio(-1, 3), Rational(0), ratio(5, 2)}) {
      t.check(!has_directed_cycle(d) && digraph_sinks_fastpath(d, a) == tutte_eval(greedoid_of(d), a, 0),
              [&] { return "sinks at a = " + a.get_str() + " on " + format_carrier(d); });
    }
  }
  for (const auto& d : cyclic) {
    t.check(has_directed_cycle(d) && digraph_sinks_fastpath(d, 3) == 0 && tutte_eval(greedoid_of(d), 3, 0) == 0,
            [&] { return "cyclic " + format_carrier(d); });
  }
  for (const auto& d : rooted_digraph_catalogue(3)) {
    t.check(Rational(arborescence_count(d)) == tutte_eval(greedoid_of(d), 1, 1),
            [&] { return "arborescences of " + format_carrier(d); });
    for (Rational p : {ratio(1, 3), ratio(1, 2), ratio(2, 3)}) {
      t.check(reliability_identity(d, p).holds(), [&] { return "reliability at " + p.get_str() + " on " + format_carrier(d); });
    }
  }
  for (const auto& g : rooted_graph_catalogue(4)) {
    t.check(Rational(spanning_tree_count(g)) == tutte_eval(greedoid_of(g), 1, 1),
            [&] { return "spanning trees of " + format_carrier(g); });
  }
}

void bidirection_suite(Tally& t) {
  for (const auto& g : rooted_graph_catalogue(5)) {
    const auto lhs = tutte_restrict(greedoid_of(bidirect(g)), CurveSpec::h0y());
    const auto rhs = tutte_restrict(greedoid_of(g), CurveSpec::h0y());
    t.check(lhs == rhs, [&] { return format_carrier(g); });
  }
}

void matchings_suite(Tally& t) {
  const auto k2 = complete_graph(2);
  const auto b1 = count_bases(build_Ak(k2, 1), FieldSpec::gf2(), BasisCountMethod::Direct);
  const auto b2 = count_bases(build_Ak(k2, 2), FieldSpec::gf2(), BasisCountMethod::Direct);
  t.check(b1 == 4, [&] { return "K_2 b_1 = " + b1.get_str(); });
  t.check(b2 == 56, [&] { return "K_2 b_2 = " + b2.get_str(); });

  const std::vector<FieldSpec> fields = {FieldSpec::gf2(), FieldSpec::gfp(3), FieldSpec::rationals()};
  const std::vector<std::tuple<std::string, SimpleGraph, std::size_t>> partition_cases = {
      {"K_2", k2, 1}, {"K_2", k2, 2}, {"3-edge path", path_graph(3), 1}, {"3-edge path", path_graph(3), 2},
      {"C_4", cycle_graph(4), 1}};
  for (const auto& f : fields) {
    for (const auto& [name, g, k] : partition_cases) {
      const auto census = enumerate_feasible_templates(g, f.characteristic_two());
      Rational predicted = 0;
      for (std::size_t b = 0; b < census.t.size(); ++b) {
        predicted += Rational(census.t[b]) * predicted_bases_per_template(g.n, g.edges.size(), k, b, f.characteristic_two());
      }
      const auto direct = count_bases(build_Ak(g, k), f, BasisCountMethod::Direct);
      t.check(predicted == Rational(direct), [&, name = name, k = k] {
        return name + " k=" + std::to_string(k) + " over " + f.name() + ": " + direct.get_str() + " bases, formula " +
               predicted.get_str();
      });
    }
    for (const auto& [name, g, pm] : {std::tuple{std::string("K_2"), k2, 1}, {"3-edge path", path_graph(3), 1},
                                      {"C_4", cycle_graph(4), 2}}) {
      const auto r = recover_perfect_matchings(g, f);
      t.check(r.matches() && r.direct == pm,
              [&] { return name + " over " + f.name() + ": recovered " + r.recovered.get_str(); });
    }
  }
}

// Every concrete greedoid the other suites build, up to 16 elements.
std::vector<std::pair<std::string, Greedoid>> axiom_instances() {
  std::vector<std::pair<std::string, Greedoid>> out;
  const auto add = [&](const std::string& name, Greedoid g) {
    if (g.size() <= 16) out.emplace_back(name, std::move(g));
  };
  for (std::size_t k = 1; k <= 6; ++k) {
    add("P_" + std::to_string(k), greedoid_of(rooted_path(k)));
    add("S_" + std::to_string(k), greedoid_of(rooted_star(k)));
    add("I_" + std::to_string(k), greedoid_of(identity_matrix(k)));
  }
  add("example matrix", greedoid_of(example_matrix()));
  for (const auto& c : identity_carriers()) {
    for (std::size_t k = 1; k <= 3; ++k) add(format_carrier(c) + " thickened " + std::to_string(k), greedoid_of(thicken(c, k)));
  }
  for (const auto& g : attachment_parts()) {
    for (const auto& h : attachment_parts()) {
      const Greedoid g1 = greedoid_of(g), g2 = greedoid_of(h);
      add("graph attachment", greedoid_of(attach_graphs(g, h)));
      add("trivial attachment", attach(g1, trivial_attachment_function(g1), g2));
    }
  }
  const std::vector<BinaryMatrix> mats = {identity_matrix(1), identity_matrix(2), example_matrix()};
  for (const auto& m1 : mats) {
    for (const auto& m2 : mats) {
      add("block diagonal", greedoid_of(block_diag(m1, m2)));
      add("full rank attachment", full_rank_attach(greedoid_of(m1), greedoid_of(m2)));
    }
  }
  for (const auto& d : rooted_digraph_catalogue(3)) {
    add(format_carrier(d), greedoid_of(d));
    for (std::size_t k = 1; k <= 2; ++k) add("digon stretch of " + format_carrier(d), greedoid_of(digon_stretch(d, k)));
  }
  for (const auto& g : rooted_graph_catalogue(5)) {
    add(format_carrier(g), greedoid_of(g));
    add("bidirection of " + format_carrier(g), greedoid_of(bidirect(g)));
  }
  for (const auto& c : reduction_catalogue()) add(format_carrier(c), greedoid_of(c));
  return out;
}

void axiom_suite(Tally& t) {
  const EnumerationLimits limits{16};
  for (const auto& [name, g] : axiom_instances()) {
    const auto family = enumerate_feasible(g, limits);
    const auto fam = verify_feasible_family(g.size(), family, 1);
    t.check(fam.ok(), [&, &name = name] { return name + ": " + fam.violations.front().describe(); });
    const auto ranks = rank_table(g, limits);
    const auto rk = verify_rank_table(g.size(), ranks, 1);
    t.check(rk.ok(), [&, &name = name] { return name + ": " + rk.violations.front().describe(); });
    if (g.size() > 12) continue;
    bool agree = true;
    for (ElementSubset a = 0; a <= g.ground() && agree; ++a) {
      std::size_t brute = 0;
      for (auto f : family) {
        if ((f & ~a) == 0) brute = std::max(brute, subset_size(f));
      }
      agree = brute == g.rank_of(a) && brute == ranks[a];
    }
    t.check(agree, [&, &name = name] { return name + ": greedy rank differs from brute force"; });
  }
}

struct SuiteSpec {
  std::string name, title;
  void (*run)(Tally&);
};

const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> all = {
      {"closed-forms", "closed forms for paths and stars", closed_forms},
      {"example-matrix", "example binary matrix family and values", example_matrix_suite},
      {"thickening", "k-thickening identity", thickening_suite},
      {"attachment", "attachment identity and independence from f", attachment_suite},
      {"full-rank", "full rank attachment identity", full_rank_suite},
      {"stretch", "stretch subtree formula", stretch_suite},
      {"digon", "digon stretch identity", digon_suite},
      {"reductions", "interpolation round trips", reduction_suite},
      {"easy-points", "digraph easy points", easy_points_suite},
      {"bidirection", "bidirection keeps y = 1", bidirection_suite},
      {"matchings", "basis counts, templates and matchings", matchings_suite},
      {"axioms", "greedoid axioms and greedy rank", axiom_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name) {
  const auto it = std::find_if(suites().begin(), suites().end(), [&](const SuiteSpec& s) { return s.name == name; });
  if (it == suites().end()) throw Error(ErrorKind::ParseError, "unknown suite '" + name + "'");
  SuiteResult r;
  r.name = it->name;
  r.title = it->title;
  Tally tally(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(tally);
  } catch (const std::exception& e) {
    r.passed = false;
    r.witness = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  // carrier files span several lines; keep the witness on one
  for (std::size_t p = 0; (p = r.witness.find('\n', p)) != std::string::npos;) r.witness.replace(p, 1, "; ");
  return r;
}

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j{{"suite", r.name}, {"title", r.title}, {"passed", r.passed}, {"cases", r.cases}};
  if (!r.passed) j["witness"] = r.witness;
  return j;
}

// ---------------------------------------------------------------- catalogues

std::vector<Carrier> identity_carriers() {
  return {rooted_path(2),
          rooted_star(2),
          RootedGraph{3, {{0, 1}, {1, 2}, {2, 0}}, 0, {}},
          RootedGraph{3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}, 0, {}},
          directed_path(2),
          RootedDigraph{3, {{0, 1}, {1, 2}, {2, 1}}, 0, {}},
          RootedDigraph{3, {{0, 1}, {0, 2}, {2, 1}, {1, 1}}, 0, {}},
          identity_matrix(2),
          example_matrix(),
          BinaryMatrix::from_strings({"1100", "0110"})};
}

std::vector<Carrier> reduction_catalogue() {
  return {rooted_path(2),
          rooted_star(2),
          RootedGraph{3, {{0, 1}, {1, 2}, {2, 0}}, 0, {}},
          RootedGraph{3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}, 0, {}},
          RootedGraph{4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, 0, {}},
          directed_path(2),
          directed_star(2),
          RootedDigraph{3, {{0, 1}, {1, 2}, {2, 1}}, 0, {}},
          RootedDigraph{3, {{0, 1}, {0, 2}, {2, 1}, {1, 1}}, 0, {}},
          RootedDigraph{3, {{0, 1}, {1, 2}, {2, 0}}, 0, {}},
          identity_matrix(1),
          identity_matrix(2),
          example_matrix(),
          BinaryMatrix::from_strings({"1100", "0110"}),
          BinaryMatrix::from_strings({"101", "011"})};
}

std::vector<RootedDigraph> rooted_digraph_catalogue(std::size_t max_arcs) {
  std::vector<RootedDigraph> out;
  std::set<std::pair<std::size_t, std::vector<VertexPair>>> seen;
  for (std::size_t n = 1; n <= max_arcs + 1; ++n) {
    std::vector<VertexPair> kinds;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) kinds.emplace_back(u, v);
    }
    for (std::size_t m = 1; m <= max_arcs; ++m) {
      for_each_multiset(kinds.size(), m, [&](const std::vector<std::size_t>& pick) {
        RootedDigraph d{n, {}, 0, {}};
        for (auto p : pick) d.arcs.push_back(kinds[p]);
        if (!is_root_connected(d)) return;
        if (seen.emplace(n, canonical_pairs(n, d.arcs, true)).second) out.push_back(std::move(d));
      });
    }
  }
  return out;
}

std::vector<RootedGraph> rooted_graph_catalogue(std::size_t max_edges) {
  std::vector<RootedGraph> out;
  std::set<std::pair<std::size_t, std::vector<VertexPair>>> seen;
  for (std::size_t n = 2; n <= max_edges + 1; ++n) {
    std::vector<VertexPair> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << pairs.size()); ++s) {
      const auto m = static_cast<std::size_t>(std::popcount(s));
      if (m > max_edges || m + 1 < n) continue;
      RootedGraph g{n, {}, 0, {}};
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if ((s >> b) & 1) g.edges.push_back(pairs[b]);
      }
      if (!is_connected(g)) continue;
      if (seen.emplace(n, canonical_pairs(n, g.edges, false)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace gtutte
