#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gtutte/rational.hpp"

namespace gtutte {

/// A simple graph without isolated vertices. Vertices are 0..n-1.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Throws NotSimple on loops, repeated pairs, isolated vertices or bad ids.
  void validate() const;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
/// The path with `edges` edges (edges + 1 vertices).
SimpleGraph path_graph(std::size_t edges);

/// The field a matrix is represented over. Elements are stored as int64:
/// residues for GF(p), integers scaled by row operations for the rationals.
class FieldSpec {
 public:
  enum class Kind { GF2, GFp, Rationals };

  static FieldSpec gf2() { return FieldSpec(Kind::GF2, 2); }
  /// Throws DimensionMismatch unless p is an odd prime.
  static FieldSpec gfp(std::int64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }
  bool characteristic_two() const { return kind_ == Kind::GF2; }
  std::string name() const;

  /// Brings v to canonical scale: leading entry 1 over GF(p), primitive with
  /// positive leading entry over the rationals.
  void normalize(std::vector<std::int64_t>& v) const;
  /// Clears v[col] using a row whose entry at col is nonzero.
  void eliminate(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& row, std::size_t col) const;

 private:
  FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/// A growing echelon basis. Each vector is reduced against the earlier ones
/// when added, so pop() undoes the last add exactly.
class Echelon {
 public:
  Echelon(FieldSpec field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Reduced copy of v (zero iff v lies in the span).
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;
  bool contains(const std::vector<std::int64_t>& v) const;
  /// Adds v when independent of the current span; returns whether it did.
  bool add(const std::vector<std::int64_t>& v);
  void pop();
  std::size_t rank() const { return rows_.size(); }
  /// Reduced row echelon form of the span, canonically scaled.
  std::vector<std::vector<std::int64_t>> canonical() const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// A_k of a simple graph. Rows: vertices, edges, then f_{i,j} (edge-major).
/// Columns: vertices, edges, then w, x, y, z for each (i, j).
struct AkMatrix {
  SimpleGraph graph;
  std::size_t k = 1;
  std::vector<std::vector<std::int64_t>> entries;  // row-major, 0/1
  std::vector<std::string> row_labels, col_labels;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return col_labels.size(); }
  std::size_t vertex_col(std::size_t v) const { return v; }
  std::size_t edge_col(std::size_t i) const { return graph.n + i; }
  /// letter: 0 = w, 1 = x, 2 = y, 3 = z.
  std::size_t block_col(std::size_t i, std::size_t j, std::size_t letter) const {
    return graph.n + graph.edges.size() + (i * k + j) * 4 + letter;
  }
  std::size_t f_row(std::size_t i, std::size_t j) const { return graph.n + graph.edges.size() + i * k + j; }
  std::vector<std::int64_t> column(std::size_t c) const;
};

/// Throws NotSimple; k must be at least 1 (DimensionMismatch otherwise).
AkMatrix build_Ak(const SimpleGraph& g, std::size_t k);

/// M_k: the w, x, y, z columns. Element t of M_k is column columns[t] of A_k,
/// and element (i, j, letter) has index (i k + j) 4 + letter.
struct MkRestriction {
  std::vector<std::size_t> columns;
  std::size_t rank_target = 0;  // n + m k
};

MkRestriction restrict_Mk(const AkMatrix& a);

/// Rank of a set of columns of A_k.
std::size_t matroid_rank(const AkMatrix& a, const std::vector<std::size_t>& columns, const FieldSpec& field);

enum class BasisCountMethod {
  Direct,     // depth-first over columns, pruned by partial rank
  Blockwise,  // per-edge choices combined over subspaces of the vertex space
  Auto,       // Direct when C(4mk, n+mk) <= 1e5, Blockwise otherwise
};

struct BasisCountLimits {
  std::size_t max_direct_ground = 64;
  std::size_t max_block_columns = 16;  // 4k per edge block
};

/// Number of bases of M_k. Throws GroundSetTooLarge.
Integer count_bases(const AkMatrix& a, const FieldSpec& field,
                    BasisCountMethod method = BasisCountMethod::Auto, const BasisCountLimits& limits = {});

/// Calls visit on every basis of M_k (as a bitmask over M_k elements).
void for_each_basis(const AkMatrix& a, const FieldSpec& field,
                    const std::function<void(std::uint64_t)>& visit, const BasisCountLimits& limits = {});

struct EdgeState {
  enum class Kind { Absent, Bidirected, TowardLower, TowardHigher, Undirected };
  Kind kind = Kind::Absent;
  std::string label;  // "wx", "yz", "wy", "xz", "wz", "xy" or empty

  bool operator==(const EdgeState&) const = default;
  auto operator<=>(const EdgeState&) const = default;
};

struct Template {
  std::vector<EdgeState> edges;  // indexed like the graph's edge list

  std::size_t bidirected() const;
  std::string to_string() const;
  bool operator==(const Template&) const = default;
  auto operator<=>(const Template&) const = default;
};

/// Whether t satisfies the template conditions for the given characteristic class.
bool is_feasible_template(const SimpleGraph& g, const Template& t, bool characteristic_two);

struct TemplateCensus {
  std::vector<Template> templates;
  std::vector<Integer> t;  // t[j]: feasible templates with j bidirected edges
};

/// All feasible templates. Throws GroundSetTooLarge beyond 6 edges.
TemplateCensus enumerate_feasible_templates(const SimpleGraph& g, bool characteristic_two);

/// T(S) for any S with each S ∩ F_i independent and S ∩ F_{i,j} nonempty;
/// returns false when S fails those conditions.
bool template_of_subset(const AkMatrix& a, std::uint64_t subset, const FieldSpec& field, Template& out);

/// T(B) for a basis B of M_k. Throws NotABasis.
Template template_of_basis(const AkMatrix& a, std::uint64_t basis, const FieldSpec& field);

/// Bases per feasible template with b bidirected edges:
/// 4^(km) (k/4)^n (4/k + 12)^b in characteristic two, (3/k + 13)^b otherwise.
Rational predicted_bases_per_template(std::size_t n, std::size_t m, std::size_t k, std::size_t b,
                                      bool characteristic_two);

struct MatchingRecovery {
  std::vector<Integer> b;  // b[k-1] = bases of M_k, k = 1..n/2+1
  std::vector<std::string> b_method;
  std::vector<Rational> t;  // solved template counts t_0..t_{n/2}
  Rational recovered;       // t_{n/2}
  Integer direct;           // brute-force perfect matchings
  bool matches() const { return recovered == Rational(direct); }
};

/// Solves b_k = sum_j 4^(km) (k/4)^n c(k)^j t_j for t. Throws OddVertexCount.
MatchingRecovery recover_perfect_matchings(const SimpleGraph& g, const FieldSpec& field,
                                           BasisCountMethod method = BasisCountMethod::Auto,
                                           const BasisCountLimits& limits = {});

/// Throws GroundSetTooLarge beyond 24 edges.
Integer count_perfect_matchings(const SimpleGraph& g);

nlohmann::json to_json(const MatchingRecovery& r);

}  // namespace gtutte
