#pragma once

#include <cstddef>
#include <vector>

#include "gtutte/families.hpp"
#include "gtutte/greedoid.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/rational.hpp"

namespace gtutte {

/// T(Gamma) = sum over A of (x-1)^(rho - rho(A)) (y-1)^(|A| - rho(A)).
BivariatePolynomial tutte_polynomial(const Greedoid& g, const EnumerationLimits& limits = {});
Rational tutte_eval(const Greedoid& g, const Rational& a, const Rational& b, const EnumerationLimits& limits = {});

/// A greedoid on class representatives where representative i stands for
/// multiplicity[i] mutually parallel elements. Summing over representative
/// subsets S, each class in S contributes 1 + y + ... + y^(m-1).
struct ClassedGreedoid {
  Greedoid representatives;
  std::vector<std::size_t> multiplicity;

  std::size_t element_count() const;
};

/// Groups parallel edges (same endpoints), parallel arcs (same tail and head)
/// or identical columns into classes.
ClassedGreedoid compress(const Carrier& c);

BivariatePolynomial tutte_polynomial(const ClassedGreedoid& g, const EnumerationLimits& limits = {});
Rational tutte_eval(const ClassedGreedoid& g, const Rational& a, const Rational& b,
                    const EnumerationLimits& limits = {});

struct CurveSpec {
  enum class Kind { HAlpha, H0x, H0y, LineY };
  Kind kind = Kind::HAlpha;
  Rational parameter = 1;  // alpha for HAlpha, c for LineY

  static CurveSpec h_alpha(const Rational& alpha);
  static CurveSpec h0x() { return {Kind::H0x, 0}; }
  static CurveSpec h0y() { return {Kind::H0y, 0}; }
  static CurveSpec line_y(const Rational& c) { return {Kind::LineY, c}; }
};

/// HAlpha: x = 1 + alpha/z, y = 1 + z. H0x: polynomial in y at x = 1.
/// H0y: polynomial in x at y = 1. LineY: polynomial in z = x - 1 at y = c.
LaurentPolynomial restrict_polynomial(const BivariatePolynomial& t, const CurveSpec& curve);
LaurentPolynomial tutte_restrict(const Greedoid& g, const CurveSpec& curve, const EnumerationLimits& limits = {});

/// (a-1)^(rho - |E|) a^|E| for (a-1)(b-1) = 1. Throws NotOnH1.
Rational h1_closed_form(std::size_t element_count, std::size_t rank, const Rational& a, const Rational& b);

/// p(lambda) = (-1)^rho T(1 - lambda, 0), as a polynomial in lambda.
LaurentPolynomial characteristic_polynomial(const Greedoid& g, const EnumerationLimits& limits = {});
LaurentPolynomial characteristic_from_tutte(const BivariatePolynomial& t, std::size_t rank);

/// Spanning trees of the root component via a reduced Laplacian determinant.
Integer spanning_tree_count(const RootedGraph& g);
/// Spanning arborescences of the vertices reachable from the root, via the
/// in-degree Laplacian with the root row and column removed.
Integer arborescence_count(const RootedDigraph& d);

/// T(D; a, 0): a^s for acyclic D with s sinks, 0 when D has a directed cycle.
/// Throws NotRootConnected.
Rational digraph_sinks_fastpath(const RootedDigraph& d, const Rational& a);
bool has_directed_cycle(const RootedDigraph& d);
std::size_t sink_count(const RootedDigraph& d);

/// Classical Tutte polynomial with Whitney rank r(A) = |V| - k(G|A).
BivariatePolynomial unrooted_tutte(const UnrootedGraph& g, const EnumerationLimits& limits = {});
/// The same restricted to x = 1, as a polynomial in y. Throws NotConnected.
LaurentPolynomial unrooted_tutte_x1(const UnrootedGraph& g, const EnumerationLimits& limits = {});

/// Expands sum of counts[i][j] (x-1)^i (y-1)^j.
BivariatePolynomial expand_shifted(const std::vector<std::vector<Integer>>& counts);

}  // namespace gtutte
