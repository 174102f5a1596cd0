// greedoid-tutte: command-line front end.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 parse error,
// 3 precondition violated, 4 size bound exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gtutte/bases.hpp"
#include "gtutte/constructions.hpp"
#include "gtutte/error.hpp"
#include "gtutte/families.hpp"
#include "gtutte/reductions.hpp"
#include "gtutte/tutte.hpp"
#include "gtutte/verify.hpp"

using namespace gtutte;
using nlohmann::json;

namespace {

struct Options {
  std::string input, second, output = "-";
  std::string a = "1", b = "1", param = "1", curve, family, op, mode, field = "gf2", suite = "all";
  std::size_t k = 1, max_ground = 20;
  bool has_k = false;
};

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorKind::ParseError, std::string("--") + what + " expects p/q, got '" + text + "'");
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + o.output);
  out << text;
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

json rational_json(const Rational& r) { return r.get_str(); }

CurveSpec curve_arg(const Options& o) {
  if (o.curve == "h-alpha") return CurveSpec::h_alpha(rational_arg(o.param, "param"));
  if (o.curve == "h0x") return CurveSpec::h0x();
  if (o.curve == "h0y") return CurveSpec::h0y();
  if (o.curve == "line") return CurveSpec::line_y(rational_arg(o.param, "param"));
  throw Error(ErrorKind::ParseError, "unknown curve '" + o.curve + "'");
}

std::string curve_name(const CurveSpec& c) {
  switch (c.kind) {
    case CurveSpec::Kind::HAlpha: return "H_alpha(" + c.parameter.get_str() + ")";
    case CurveSpec::Kind::H0x: return "x = 1";
    case CurveSpec::Kind::H0y: return "y = 1";
    case CurveSpec::Kind::LineY: return "y = " + c.parameter.get_str();
  }
  return "?";
}

SimpleGraph simple_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  const auto g = parse_unrooted(in);
  return SimpleGraph{g.vertex_count, g.edges};
}

FieldSpec field_arg(const std::string& name) {
  if (name == "gf2") return FieldSpec::gf2();
  if (name == "q" || name == "rationals") return FieldSpec::rationals();
  if (name.rfind("gf", 0) == 0) {
    try {
      return FieldSpec::gfp(std::stoll(name.substr(2)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::ParseError, "unknown field '" + name + "' (gf2, gf<p>, q)");
}

// ---------------------------------------------------------------- commands

void cmd_tutte(const Options& o) {
  const auto c = read_carrier_file(o.input);
  const Greedoid g = greedoid_of(c);
  const auto t = tutte_polynomial(g, {o.max_ground});
  emit_json(o, {{"family", family_name(c)},
                {"elements", g.size()},
                {"rank", g.rank()},
                {"polynomial", to_json(t)},
                {"text", t.to_string()}});
}

void cmd_eval(const Options& o) {
  const Greedoid g = greedoid_of(read_carrier_file(o.input));
  emit(o, tutte_eval(g, rational_arg(o.a, "a"), rational_arg(o.b, "b"), {o.max_ground}).get_str() + "\n");
}

void cmd_restrict(const Options& o) {
  const Greedoid g = greedoid_of(read_carrier_file(o.input));
  const auto curve = curve_arg(o);
  const auto r = tutte_restrict(g, curve, {o.max_ground});
  const char* var = curve.kind == CurveSpec::Kind::H0y ? "x" : curve.kind == CurveSpec::Kind::H0x ? "y" : "z";
  emit_json(o, {{"curve", curve_name(curve)}, {"variable", var}, {"restriction", to_json(r)}, {"text", r.to_string(var)}});
}

void cmd_construct(const Options& o) {
  if (o.op == "standard") {
    static const std::map<std::string, StandardKind> kinds = {{"path", StandardKind::Path},
                                                              {"star", StandardKind::Star},
                                                              {"dpath", StandardKind::DirectedPath},
                                                              {"dstar", StandardKind::DirectedStar},
                                                              {"identity", StandardKind::Identity}};
    const auto it = kinds.find(o.family);
    if (it == kinds.end()) throw Error(ErrorKind::ParseError, "unknown family '" + o.family + "'");
    emit(o, format_carrier(standard_family(it->second, o.k)));
    return;
  }
  if (o.input.empty()) throw Error(ErrorKind::ParseError, o.op + " needs an input file");
  const auto c = read_carrier_file(o.input);
  if (o.op == "thicken") {
    emit(o, format_carrier(thicken(c, o.k)));
  } else if (o.op == "attach" || o.op == "block-diag") {
    if (o.second.empty()) throw Error(ErrorKind::ParseError, o.op + " needs two input files");
    const auto h = read_carrier_file(o.second);
    if (o.op == "block-diag") {
      const auto* m1 = std::get_if<BinaryMatrix>(&c);
      const auto* m2 = std::get_if<BinaryMatrix>(&h);
      if (!m1 || !m2) throw Error(ErrorKind::InvalidCarrier, "block-diag takes two binary matrices");
      emit(o, format_carrier(block_diag(*m1, *m2)));
    } else if (const auto* g1 = std::get_if<RootedGraph>(&c); g1 && std::holds_alternative<RootedGraph>(h)) {
      emit(o, format_carrier(attach_graphs(*g1, std::get<RootedGraph>(h))));
    } else if (const auto* d1 = std::get_if<RootedDigraph>(&c); d1 && std::holds_alternative<RootedDigraph>(h)) {
      emit(o, format_carrier(attach_digraphs(*d1, std::get<RootedDigraph>(h))));
    } else {
      throw Error(ErrorKind::InvalidCarrier, "attach takes two rooted graphs or two rooted digraphs");
    }
  } else if (o.op == "digon") {
    const auto* d = std::get_if<RootedDigraph>(&c);
    if (!d) throw Error(ErrorKind::InvalidCarrier, "digon takes a rooted digraph");
    emit(o, format_carrier(digon_stretch(*d, o.k)));
  } else if (o.op == "bidirect") {
    const auto* g = std::get_if<RootedGraph>(&c);
    if (!g) throw Error(ErrorKind::InvalidCarrier, "bidirect takes a rooted graph");
    emit(o, format_carrier(bidirect(*g)));
  } else {
    throw Error(ErrorKind::ParseError, "unknown construction '" + o.op + "'");
  }
}

void cmd_reduce(const Options& o) {
  const auto c = read_carrier_file(o.input);
  const Greedoid g = greedoid_of(c);
  const Rational a = rational_arg(o.a, "a"), b = rational_arg(o.b, "b");
  const json point = {{"a", rational_json(a)}, {"b", rational_json(b)}};
  if (o.mode == "point10") {
    const auto oracle = PointOracle::brute_force(a, b);
    const Rational got = recover_point_1_0(oracle, c);
    const Rational direct = tutte_eval(g, 1, 0);
    emit_json(o, {{"mode", "point10"},
                  {"oracle_point", point},
                  {"oracle_calls", oracle.calls()},
                  {"recovered", rational_json(got)},
                  {"direct", rational_json(direct)},
                  {"match", got == direct}});
    return;
  }
  const auto oracle = PointOracle::brute_force(a, b);
  InterpolationResult r;
  if (o.mode == "curve") {
    r = interpolate_curve(oracle, c);
  } else if (o.mode == "line") {
    r = interpolate_line(oracle, c);
  } else if (o.mode == "yminus1") {
    r = interpolate_line_y_minus1(oracle, c);
  } else {
    throw Error(ErrorKind::ParseError, "unknown reduction '" + o.mode + "'");
  }
  const auto direct = tutte_restrict(g, r.curve, {o.max_ground});
  auto j = to_json(r);
  j["oracle_point"] = point;
  j["curve"] = curve_name(r.curve);
  j["k_range"] = {r.k_first, r.k_last};
  j["recovered"] = j["coefficients"];
  j.erase("coefficients");
  j["direct"] = to_json(direct);
  j["match"] = r.coefficients == direct;
  emit_json(o, j);
}

void cmd_matchings(const Options& o) {
  const auto g = simple_graph_file(o.input);
  const auto field = field_arg(o.field);
  json j = {{"field", field.name()}, {"vertices", g.n}, {"edges", g.edges.size()}};
  if (o.has_k) {
    const auto a = build_Ak(g, o.k);
    const auto mk = restrict_Mk(a);
    j["k"] = o.k;
    j["ground_size"] = mk.columns.size();
    j["rank"] = mk.rank_target;
    j["bases"] = count_bases(a, field).get_str();
  }
  const auto census = enumerate_feasible_templates(g, field.characteristic_two());
  j["feasible_templates"] = json::array();
  for (const auto& t : census.t) j["feasible_templates"].push_back(t.get_str());
  if (g.n % 2 == 0) {
    j["recovery"] = to_json(recover_perfect_matchings(g, field));
  } else {
    j["direct_perfect_matchings"] = "0";
  }
  emit_json(o, j);
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names = {o.suite};
  }
  json report = json::array();
  bool ok = true;
  for (const auto& n : names) {
    const auto r = run_suite(n);
    ok = ok && r.passed;
    report.push_back(to_json(r));
  }
  emit_json(o, {{"suites", report}, {"passed", ok}});
  return ok ? 0 : 1;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return 2;
    case ErrorKind::GroundSetTooLarge: return 4;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte polynomials of greedoids: computation, constructions and reductions"};
  app.require_subcommand(1);
  Options o;

  const auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "output path, - for stdout"); };
  const auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--max-ground", o.max_ground, "largest ground set to enumerate")->capture_default_str();
  };

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a carrier file as JSON");
  tutte->add_option("input", o.input, "graph, digraph or matrix file")->required();
  add_output(tutte);
  add_limit(tutte);

  auto* eval = app.add_subcommand("eval", "T(a, b) as an exact rational");
  eval->add_option("input", o.input)->required();
  eval->add_option("--a", o.a, "x value, p/q")->required();
  eval->add_option("--b", o.b, "y value, p/q")->required();
  add_output(eval);
  add_limit(eval);

  auto* restrict = app.add_subcommand("restrict", "restriction of T to a curve as Laurent JSON");
  restrict->add_option("input", o.input)->required();
  restrict->add_option("--curve", o.curve, "h-alpha, h0x, h0y or line")->required();
  restrict->add_option("--param", o.param, "alpha for h-alpha, c for the line y = c");
  add_output(restrict);
  add_limit(restrict);

  auto* construct = app.add_subcommand("construct", "build a carrier file");
  construct->add_option("op", o.op, "standard, thicken, attach, block-diag, digon or bidirect")->required();
  construct->add_option("input", o.input);
  construct->add_option("second", o.second);
  construct->add_option("--family", o.family, "path, star, dpath, dstar or identity (standard)");
  construct->add_option("-k,--k", o.k, "size or multiplicity")->capture_default_str();
  add_output(construct);

  auto* reduce = app.add_subcommand("reduce", "recover a restriction from a point oracle");
  reduce->add_option("mode", o.mode, "curve, line, yminus1 or point10")->required();
  reduce->add_option("input", o.input)->required();
  reduce->add_option("--a", o.a, "oracle x value, p/q")->required();
  reduce->add_option("--b", o.b, "oracle y value, p/q")->required();
  add_output(reduce);
  add_limit(reduce);

  auto* matchings = app.add_subcommand("matchings", "basis counts of A_k and perfect matchings of a simple graph");
  matchings->alias("vertigan");
  matchings->add_option("input", o.input, "graph file with edge lines")->required();
  matchings->add_option("--field", o.field, "gf2, gf<p> or q")->capture_default_str();
  matchings->add_option("-k,--k", o.k, "also count the bases of M_k for this k");
  add_output(matchings);

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("suite", o.suite, "suite name or all")->capture_default_str();
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.has_k = matchings->count("--k") > 0;

  try {
    if (*tutte) cmd_tutte(o);
    if (*eval) cmd_eval(o);
    if (*restrict) cmd_restrict(o);
    if (*construct) cmd_construct(o);
    if (*reduce) cmd_reduce(o);
    if (*matchings) cmd_matchings(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
