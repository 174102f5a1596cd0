#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gtutte {

/// Bit i set means element i is present. Ground sets hold at most 64 elements.
using ElementSubset = std::uint64_t;
inline constexpr std::size_t kMaxGroundSize = 64;

inline std::size_t subset_size(ElementSubset a) { return static_cast<std::size_t>(std::popcount(a)); }
inline bool contains(ElementSubset a, std::size_t e) { return (a >> e) & 1u; }
inline ElementSubset singleton(std::size_t e) { return ElementSubset{1} << e; }
inline ElementSubset full_subset(std::size_t n) { return n >= 64 ? ~ElementSubset{0} : (ElementSubset{1} << n) - 1; }
ElementSubset subset_of(const std::vector<std::size_t>& elements);
std::vector<std::size_t> elements_of(ElementSubset a);

/// Bound on ground-set size for operations that visit every subset.
struct EnumerationLimits {
  std::size_t max_ground = 20;
};

/// Throws GroundSetTooLarge when n exceeds the bound.
void require_enumerable(std::size_t n, const EnumerationLimits& limits, const std::string& what);

/// A greedoid given by its ground-set size and a pure feasibility oracle.
class Greedoid {
 public:
  using Oracle = std::function<bool(ElementSubset)>;

  Greedoid();
  Greedoid(std::size_t ground_size, Oracle oracle, std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  ElementSubset ground() const { return full_subset(size_); }
  /// rho(Gamma), computed once at construction.
  std::size_t rank() const { return rank_; }
  const std::string& label(std::size_t e) const;
  const std::vector<std::string>& labels() const { return *labels_; }

  /// Throws ElementOutOfRange if A is not a subset of the ground set.
  bool is_feasible(ElementSubset a) const;
  /// Greedy augmentation taking the smallest feasible extension each round.
  std::size_t rank_of(ElementSubset a) const;
  /// The maximal feasible subset of A found by that greedy augmentation.
  ElementSubset maximal_feasible_subset(ElementSubset a) const;
  /// sigma(A) = {e : rho(A + e) = rho(A)}.
  ElementSubset closure(ElementSubset a) const;

  /// Oracle call without the range check.
  bool feasible_unchecked(ElementSubset a) const { return (*oracle_)(a); }

 private:
  void check_range(ElementSubset a) const;

  std::size_t size_ = 0;
  std::size_t rank_ = 0;
  std::shared_ptr<const Oracle> oracle_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// All feasible sets in increasing bitmask order.
std::vector<ElementSubset> enumerate_feasible(const Greedoid& g, const EnumerationLimits& limits = {});
/// All feasible sets of size rho(Gamma), in increasing bitmask order.
std::vector<ElementSubset> enumerate_bases(const Greedoid& g, const EnumerationLimits& limits = {});

/// rho(A) for every A, indexed by bitmask. Uses rho(A) = max_e rho(A - e) for
/// infeasible A and queries the oracle only when that maximum is |A| - 1.
std::vector<std::uint8_t> rank_table(const Greedoid& g, const EnumerationLimits& limits = {});

struct ParallelClasses {
  std::vector<std::vector<std::size_t>> classes;  // sorted by smallest member
  std::optional<std::size_t> loop_class;          // index into classes
};

/// Partition under e ~ f iff rho(A+e) = rho(A+f) = rho(A+e+f) for all A.
ParallelClasses parallel_classes(const Greedoid& g, const EnumerationLimits& limits = {});
ParallelClasses parallel_classes(std::size_t n, const std::vector<std::uint8_t>& ranks);

struct AxiomViolation {
  std::string axiom;  // "G1", "G2", "GR1", "GR2", "GR3"
  std::vector<ElementSubset> sets;
  std::vector<std::size_t> elements;
  std::string describe() const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;  // first `kept` instances
  std::size_t total = 0;
  bool ok() const { return total == 0; }
};

/// G1 and G2 over an explicit family on ground {0..n-1}.
AxiomReport verify_feasible_family(std::size_t n, const std::vector<ElementSubset>& family,
                                   std::size_t kept = 32);
/// GR1-GR3 over an explicit rank table indexed by bitmask.
AxiomReport verify_rank_table(std::size_t n, const std::vector<std::uint8_t>& ranks, std::size_t kept = 32);

}  // namespace gtutte
