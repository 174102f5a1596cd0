#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gtutte/families.hpp"
#include "gtutte/greedoid.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/rational.hpp"
#include "gtutte/tutte.hpp"

namespace gtutte {

/// What an oracle is asked about: a concrete carrier, or a greedoid built
/// generically (binary star attachments have no matrix form).
using OracleInput = std::variant<Carrier, Greedoid>;

/// T(.; a, b) at one fixed point, with a call counter.
class PointOracle {
 public:
  using Evaluator = std::function<Rational(const OracleInput&)>;

  PointOracle(Rational a, Rational b, Evaluator evaluator);
  /// Exact enumeration; carriers go through parallel-class compression.
  static PointOracle brute_force(Rational a, Rational b, EnumerationLimits limits = {});

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::size_t calls() const { return calls_; }
  void reset_calls() { calls_ = 0; }

  Rational operator()(const OracleInput& input) const;

 private:
  Rational a_, b_;
  Evaluator evaluator_;
  mutable std::size_t calls_ = 0;
};

struct InterpolationResult {
  std::string mode;  // "H_alpha", "H0x", "H0y", "line"
  CurveSpec curve;   // the restriction that `coefficients` represents
  std::size_t k_first = 0, k_last = 0;
  std::size_t oracle_calls = 0;
  std::vector<Rational> nodes;
  LaurentPolynomial coefficients;
};

/// The curve through (a, b) recovered by interpolate_curve.
CurveSpec curve_through(const Rational& a, const Rational& b);

/// Recovers the restriction of T to the curve through the oracle point from
/// thickenings k = 1..|E|+rho+1 (k = 1..rho+1 when b = 1).
/// Throws ForbiddenPoint for b in {-1, 0} or (a, b) = (1, 1).
InterpolationResult interpolate_curve(const PointOracle& oracle, const Carrier& c);

/// G ~ S_k (directed star for digraphs; generic attachment with the trivial
/// function for matrices). Throws NotConnected / NotRootConnected.
OracleInput star_attachment(const Carrier& c, std::size_t k);
/// G ~ P_2 in the family of the input.
OracleInput path2_attachment(const OracleInput& h);

/// Recovers T(G; 1 + z, b) from G ~ S_k, k = 0..rho, at oracle point (a, b).
/// Throws ForbiddenPoint when a in {0, 1} or the nodes c^k (a-1)^(k+1) / a^k collide.
InterpolationResult interpolate_line(const PointOracle& oracle, const Carrier& c);

/// The y = -1 line. a = 0 is answered through T(H ~ P_2; 0, -1) = (-1)^rho(H) T(H; 2, -1).
/// Throws ForbiddenPoint for a in {1/2, 1} or b != -1.
InterpolationResult interpolate_line_y_minus1(const PointOracle& oracle, const Carrier& c);

/// T(G; 1, 0) = oracle(G ~ S_1) / a^rho. Throws ForbiddenPoint for a = 0 or b != 0.
Rational recover_point_1_0(const PointOracle& oracle, const Carrier& c);

struct SubtreeReport {
  std::vector<std::vector<Integer>> per_root;  // a_i(G_j): rooted subtrees with i edges
  std::vector<Integer> by_size;                // a_i(G)
  Integer total;
};

/// Subtree counts from the y = 1 restrictions of every rooting. Throws NotConnected.
SubtreeReport subtree_count_via_rooted(const UnrootedGraph& g, const EnumerationLimits& limits = {});

struct ReliabilityReport {
  Rational direct;          // enumeration over surviving arc sets
  Rational reconstruction;  // p^(|E|-rho) (1-p)^rho T(D; 1, 1/p)
  bool holds() const { return direct == reconstruction; }
};

/// Every arc fails independently with probability p. Throws POutOfRange, NotRootConnected.
ReliabilityReport reliability_identity(const RootedDigraph& d, const Rational& p,
                                       const EnumerationLimits& limits = {});

/// T(D_2; 1, -1) = 3^(|E|-rho) T(D; 1, 1/3), both sides by enumeration.
bool digon_reduction_check(const RootedDigraph& d, const EnumerationLimits& limits = {});

struct BinaryIdentityRow {
  Rational a;
  Rational attach_y0, predicted_y0;    // T(M ~ I_1; a, 0) and a T(M; 1, 0)
  Rational lhs_ym1, rhs_ym1;           // (2a-1) T(M; 1, -1) and T(M ~ I_1; a, -1) + (a-1) T(M; a, -1)
  bool holds() const { return attach_y0 == predicted_y0 && lhs_ym1 == rhs_ym1; }
};

/// Checks both identities of the full rank attachment M ~ I_1 at each a.
/// Throws RowsDependent.
std::vector<BinaryIdentityRow> binary_identities_check(const BinaryMatrix& m, const std::vector<Rational>& a_values,
                                                       const EnumerationLimits& limits = {});

struct PointTransfer {
  Rational attached;   // T(D ~ P_2; a, 2)
  Rational factor;     // T(P_2; a, 2)^rho
  Rational image_x;    // where the identity lands on y = 2
  Rational image;      // T(D; image_x, 2)
  bool holds() const { return attached == factor * image; }
};

/// T(D ~ P_2; a, 2) = T(P_2; a, 2)^rho T(D; (a-1)^3 4 / T(P_2; a, 2) + 1, 2).
/// a = 0 lands on (-1, 2); a = 2/3 lands on (5/6, 2).
PointTransfer digraph_y2_transfer(const RootedDigraph& d, const Rational& a, const EnumerationLimits& limits = {});

nlohmann::json to_json(const InterpolationResult& r);
nlohmann::json to_json(const SubtreeReport& r);
nlohmann::json to_json(const ReliabilityReport& r);
nlohmann::json to_json(const BinaryIdentityRow& r);
nlohmann::json to_json(const PointTransfer& r);

}  // namespace gtutte
