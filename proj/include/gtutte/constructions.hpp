#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gtutte/families.hpp"
#include "gtutte/greedoid.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/rational.hpp"

namespace gtutte {

// ---------------------------------------------------------------------------
// k-thickening. Copy i (0-based) of element e gets id e*k + i.

RootedGraph thicken(const RootedGraph& g, std::size_t k);
RootedDigraph thicken(const RootedDigraph& d, std::size_t k);
BinaryMatrix thicken(const BinaryMatrix& m, std::size_t k);
Carrier thicken(const Carrier& c, std::size_t k);
/// rho'(A') = rho(mu(A')), where mu forgets the copy index.
Greedoid thicken(const Greedoid& g, std::size_t k);

enum class ThickeningMode {
  Generic,    // S^rho T((x + y + ... + y^(k-1)) / S, y^k), S = 1 + y + ... + y^(k-1)
  YMinusOne,  // value on y = -1 as a polynomial in x
  YOne,       // value on y = 1 as a polynomial in x: k^rho T((x + k - 1) / k, 1)
};

BivariatePolynomial predicted_thickening(const BivariatePolynomial& t, std::size_t rank, std::size_t k,
                                         ThickeningMode mode);

// ---------------------------------------------------------------------------
// Attachment

/// Sends each feasible set F of `domain` to a |F|-subset of {0, ..., rho - 1}.
struct AttachmentFunction {
  Greedoid domain;
  std::function<ElementSubset(ElementSubset)> map;

  /// f on an arbitrary subset, through its greedy maximal feasible subset.
  ElementSubset operator()(ElementSubset a) const { return map(domain.maximal_feasible_subset(a)); }
};

/// f(F) = {0, ..., |F| - 1}.
AttachmentFunction trivial_attachment_function(const Greedoid& g);
/// Bit i of f(F) is set when the i-th non-root vertex (in vertex order) lies in
/// the root component of G|F. Throws NotConnected / NotRootConnected.
AttachmentFunction branching_attachment_function(const RootedGraph& g);
AttachmentFunction branching_attachment_function(const RootedDigraph& d);

/// Checks |f(F)| = |F| and F1 within sigma(F2) implies f(F1) within f(F2).
/// Throws AttachmentInvariantViolation.
void check_attachment_function(const AttachmentFunction& f, const EnumerationLimits& limits = {});

/// Gamma1 ~f Gamma2 on E0 + E1 + ... + E_rho1. Element e of block i (1-based)
/// has id |E0| + (i-1)|E2| + e. f is checked first when Gamma1 is enumerable.
Greedoid attach(const Greedoid& g1, const AttachmentFunction& f, const Greedoid& g2,
                const EnumerationLimits& limits = {});

/// A copy of H rooted at each non-root vertex of G, blocks in vertex order.
/// Throws NotConnected / NotRootConnected.
RootedGraph attach_graphs(const RootedGraph& g, const RootedGraph& h);
RootedDigraph attach_digraphs(const RootedDigraph& d, const RootedDigraph& h);

/// T2^rho1 T1((x-1)^(rho2+1) y^e2 / T2 + 1, y), cleared of denominators.
BivariatePolynomial predicted_attachment(const BivariatePolynomial& t1, const BivariatePolynomial& t2,
                                         std::size_t rank1, std::size_t rank2, std::size_t elements2);
/// The same formula evaluated directly. Throws DenominatorVanishes when T2(a, b) = 0.
Rational predicted_attachment_at(const BivariatePolynomial& t1, const BivariatePolynomial& t2, std::size_t rank1,
                                 std::size_t rank2, std::size_t elements2, const Rational& a, const Rational& b);

// ---------------------------------------------------------------------------
// Full rank attachment

/// F feasible iff F in F1, or F meets E1 in a basis of Gamma1 and E2 in a feasible set of Gamma2.
Greedoid full_rank_attach(const Greedoid& g1, const Greedoid& g2);
/// [[M1, 0], [0, M2]]. Throws M1NotFullRowRank.
BinaryMatrix block_diag(const BinaryMatrix& m1, const BinaryMatrix& m2);
/// T1 (x-1)^rho2 y^e2 + T1(1, y) (T2 - (x-1)^rho2 y^e2).
BivariatePolynomial predicted_full_rank(const BivariatePolynomial& t1, const BivariatePolynomial& t2,
                                        std::size_t rank2, std::size_t elements2);

// ---------------------------------------------------------------------------
// Stretches

/// Every non-loop edge becomes a path of k edges.
UnrootedGraph stretch_unrooted(const UnrootedGraph& g, std::size_t k);
/// Subtrees (single vertices included) by enumeration over non-loop edge sets.
Integer count_subtrees(const UnrootedGraph& g, const EnumerationLimits& limits = {});
/// t[i][j]: subtrees with i outside edges touching them once and j touching them twice.
std::vector<std::vector<Integer>> count_subtrees_typed(const UnrootedGraph& g, const EnumerationLimits& limits = {});
/// sum t[i][j] k^i C(k+1, 2)^j + k(k-1)m/2, m = number of non-loop edges.
Integer predicted_stretch_subtrees(const std::vector<std::vector<Integer>>& typed, std::size_t non_loop_edges,
                                   std::size_t k);

/// Each arc uv becomes a tailed k-digon: p0 = w0w1, then p_i = w_i w_(i+1) and
/// q_i = w_(i+1) w_i for 1 <= i <= k. Labels are "<arc>:p<i>" / "<arc>:q<i>".
/// Throws NotRootConnected.
RootedDigraph digon_stretch(const RootedDigraph& d, std::size_t k);
/// (k+1)^(|E|-rho) y^(k|E|) T(D; 1, (k+y)/(k+1)) from T(D; 1, y).
LaurentPolynomial predicted_digon_stretch(const LaurentPolynomial& t_x1, std::size_t arcs, std::size_t rank,
                                          std::size_t k);

/// Each edge uv becomes arcs uv and vu. Throws NotConnected.
RootedDigraph bidirect(const RootedGraph& g);

}  // namespace gtutte
