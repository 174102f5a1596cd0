#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gtutte/greedoid.hpp"

namespace gtutte {

using VertexPair = std::pair<std::size_t, std::size_t>;

/// Undirected multigraph with a distinguished root. Loops and parallel edges allowed.
struct RootedGraph {
  std::size_t vertex_count = 1;
  std::vector<VertexPair> edges;
  std::size_t root = 0;
  std::vector<std::string> labels;  // optional, one per edge

  void validate() const;
};

/// Directed multigraph with a distinguished root; arcs are (tail, head).
struct RootedDigraph {
  std::size_t vertex_count = 1;
  std::vector<VertexPair> arcs;
  std::size_t root = 0;
  std::vector<std::string> labels;

  void validate() const;
};

/// Undirected multigraph without a root.
struct UnrootedGraph {
  std::size_t vertex_count = 0;
  std::vector<VertexPair> edges;

  void validate() const;
};

/// 0/1 matrix stored by columns; bit r of column c is entry (r, c).
/// At most 64 rows.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  static BinaryMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  bool get(std::size_t r, std::size_t c) const { return (columns_.at(c) >> r) & 1u; }
  void set(std::size_t r, std::size_t c, bool value);
  std::uint64_t column(std::size_t c) const { return columns_.at(c); }
  void append_column(std::uint64_t bits);
  std::vector<std::string> row_strings() const;

  /// Rank over GF(2).
  std::size_t rank() const;
  /// row j += row i (0-based).
  BinaryMatrix with_row_added(std::size_t i, std::size_t j) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::uint64_t> columns_;
};

/// Rank over GF(2) of the given column vectors.
std::size_t gf2_rank(std::vector<std::uint64_t> vectors);

/// A feasible iff the root component of G|A is a tree containing every edge of A.
Greedoid::Oracle branching_feasibility(const RootedGraph& g);
/// A feasible iff the root component of D|A is an arborescence rooted at r containing A.
Greedoid::Oracle directed_branching_feasibility(const RootedDigraph& d);
/// A feasible iff the top |A| rows of the columns in A are nonsingular over GF(2).
Greedoid::Oracle binary_feasibility(const BinaryMatrix& m);

Greedoid greedoid_of(const RootedGraph& g);
Greedoid greedoid_of(const RootedDigraph& d);
Greedoid greedoid_of(const BinaryMatrix& m);

using Carrier = std::variant<RootedGraph, RootedDigraph, BinaryMatrix>;
Greedoid greedoid_of(const Carrier& c);
std::size_t element_count(const Carrier& c);
std::string family_name(const Carrier& c);

enum class StandardKind { Path, Star, DirectedPath, DirectedStar, Identity };

/// P_k, S_k (root at the leaf end / centre), their directed forms, or I_k.
Carrier standard_family(StandardKind kind, std::size_t k);
RootedGraph rooted_path(std::size_t k);
RootedGraph rooted_star(std::size_t k);
RootedDigraph directed_path(std::size_t k);
RootedDigraph directed_star(std::size_t k);
BinaryMatrix identity_matrix(std::size_t k);
/// Rows 1001 / 1010 / 0111.
BinaryMatrix example_matrix();

struct RowAddReport {
  bool vacuous = false;  // fewer than two rows
  bool isomorphic = true;
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
};

/// Compares feasible families of M and M with row i added to row j (0-based, i < j).
bool row_add_isomorphism_check(const BinaryMatrix& m, std::size_t i, std::size_t j,
                               const EnumerationLimits& limits = {});
/// Runs the check for every pair i < j.
RowAddReport row_add_isomorphism_report(const BinaryMatrix& m, const EnumerationLimits& limits = {});

/// Whether every vertex is reachable from the root (undirected / along arcs).
bool is_connected(const RootedGraph& g);
bool is_root_connected(const RootedDigraph& d);
bool is_connected(const UnrootedGraph& g);
/// Vertices in the root component.
std::vector<bool> root_component(const RootedGraph& g);

UnrootedGraph underlying(const RootedGraph& g);
RootedGraph rooted_at(const UnrootedGraph& g, std::size_t root);

// Text formats. Graph files: "root v", "edge u v" or "arc u v" lines; '#'
// starts a comment. Matrix files: one row of 0/1 characters per line.
Carrier parse_carrier(std::istream& in);
Carrier read_carrier_file(const std::string& path);
UnrootedGraph parse_unrooted(std::istream& in);
std::string format_carrier(const Carrier& c);

}  // namespace gtutte
