#include "gtutte/greedoid.hpp"

#include <algorithm>
#include <sstream>

#include "gtutte/error.hpp"

namespace gtutte {

ElementSubset subset_of(const std::vector<std::size_t>& elements) {
  ElementSubset a = 0;
  for (std::size_t e : elements) {
    if (e >= kMaxGroundSize) throw Error(ErrorKind::ElementOutOfRange, "element id " + std::to_string(e));
    a |= singleton(e);
  }
  return a;
}

std::vector<std::size_t> elements_of(ElementSubset a) {
  std::vector<std::size_t> out;
  while (a) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(a)));
    a &= a - 1;
  }
  return out;
}

void require_enumerable(std::size_t n, const EnumerationLimits& limits, const std::string& what) {
  if (n > limits.max_ground || n > kMaxGroundSize) {
    throw Error(ErrorKind::GroundSetTooLarge, what + ": ground set of " + std::to_string(n) +
                                                  " elements exceeds the bound of " +
                                                  std::to_string(limits.max_ground));
  }
}

// ---------------------------------------------------------------------------
// Greedoid

Greedoid::Greedoid() : Greedoid(0, [](ElementSubset a) { return a == 0; }) {}

Greedoid::Greedoid(std::size_t ground_size, Oracle oracle, std::vector<std::string> labels)
    : size_(ground_size), oracle_(std::make_shared<const Oracle>(std::move(oracle))) {
  if (ground_size > kMaxGroundSize) {
    throw Error(ErrorKind::GroundSetTooLarge, "ground sets are limited to 64 elements");
  }
  if (labels.empty()) {
    for (std::size_t e = 0; e < ground_size; ++e) labels.push_back(std::to_string(e));
  }
  if (labels.size() != ground_size) throw Error(ErrorKind::DimensionMismatch, "one label per element");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  rank_ = rank_of(ground());
}

const std::string& Greedoid::label(std::size_t e) const {
  if (e >= size_) throw Error(ErrorKind::ElementOutOfRange, "element " + std::to_string(e));
  return (*labels_)[e];
}

void Greedoid::check_range(ElementSubset a) const {
  if (a & ~ground()) throw Error(ErrorKind::ElementOutOfRange, "subset leaves the ground set");
}

bool Greedoid::is_feasible(ElementSubset a) const {
  check_range(a);
  return (*oracle_)(a);
}

std::size_t Greedoid::rank_of(ElementSubset a) const { return subset_size(maximal_feasible_subset(a)); }

ElementSubset Greedoid::maximal_feasible_subset(ElementSubset a) const {
  check_range(a);
  ElementSubset current = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (ElementSubset rest = a & ~current; rest; rest &= rest - 1) {
      const ElementSubset e = rest & -rest;
      if ((*oracle_)(current | e)) {
        current |= e;
        grew = true;
        break;
      }
    }
  }
  return current;
}

ElementSubset Greedoid::closure(ElementSubset a) const {
  const std::size_t r = rank_of(a);
  ElementSubset out = a;
  for (std::size_t e = 0; e < size_; ++e) {
    if (!contains(a, e) && rank_of(a | singleton(e)) == r) out |= singleton(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<ElementSubset> enumerate_feasible(const Greedoid& g, const EnumerationLimits& limits) {
  require_enumerable(g.size(), limits, "enumerate_feasible");
  const auto ranks = rank_table(g, limits);
  std::vector<ElementSubset> out;
  for (ElementSubset a = 0; a < ranks.size(); ++a) {
    if (ranks[a] == subset_size(a)) out.push_back(a);
  }
  return out;
}

std::vector<ElementSubset> enumerate_bases(const Greedoid& g, const EnumerationLimits& limits) {
  require_enumerable(g.size(), limits, "enumerate_bases");
  const auto ranks = rank_table(g, limits);
  std::vector<ElementSubset> out;
  for (ElementSubset a = 0; a < ranks.size(); ++a) {
    if (ranks[a] == g.rank() && subset_size(a) == g.rank()) out.push_back(a);
  }
  return out;
}

std::vector<std::uint8_t> rank_table(const Greedoid& g, const EnumerationLimits& limits) {
  require_enumerable(g.size(), limits, "rank_table");
  const ElementSubset count = ElementSubset{1} << g.size();
  std::vector<std::uint8_t> r(count, 0);
  for (ElementSubset a = 1; a < count; ++a) {
    const auto size = static_cast<std::uint8_t>(subset_size(a));
    std::uint8_t best = 0;
    for (ElementSubset rest = a; rest && best + 1 < size; rest &= rest - 1) {
      best = std::max(best, r[a & ~(rest & -rest)]);
    }
    if (best + 1 == size && g.feasible_unchecked(a)) best = size;
    r[a] = best;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Parallel classes

ParallelClasses parallel_classes(const Greedoid& g, const EnumerationLimits& limits) {
  return parallel_classes(g.size(), rank_table(g, limits));
}

ParallelClasses parallel_classes(std::size_t n, const std::vector<std::uint8_t>& ranks) {
  auto parallel = [&](std::size_t e, std::size_t f) {
    const ElementSubset be = singleton(e), bf = singleton(f);
    for (ElementSubset a = 0; a < ranks.size(); ++a) {
      const auto re = ranks[a | be], rf = ranks[a | bf];
      if (re != rf || re != ranks[a | be | bf]) return false;
    }
    return true;
  };
  ElementSubset in_feasible = 0;
  for (ElementSubset a = 0; a < ranks.size(); ++a) {
    if (ranks[a] == subset_size(a)) in_feasible |= a;
  }
  ParallelClasses out;
  std::vector<bool> assigned(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (assigned[e]) continue;
    std::vector<std::size_t> cls{e};
    assigned[e] = true;
    for (std::size_t f = e + 1; f < n; ++f) {
      if (!assigned[f] && parallel(e, f)) {
        cls.push_back(f);
        assigned[f] = true;
      }
    }
    if (!contains(in_feasible, e)) out.loop_class = out.classes.size();
    out.classes.push_back(std::move(cls));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom verification

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << axiom;
  auto print_set = [&](ElementSubset s) {
    os << " {";
    bool first = true;
    for (std::size_t e : elements_of(s)) {
      os << (first ? "" : ",") << e;
      first = false;
    }
    os << "}";
  };
  for (ElementSubset s : sets) print_set(s);
  for (std::size_t e : elements) os << " e" << e;
  return os.str();
}

namespace {

void record(AxiomReport& report, std::size_t kept, AxiomViolation v) {
  ++report.total;
  if (report.violations.size() < kept) report.violations.push_back(std::move(v));
}

}  // namespace

AxiomReport verify_feasible_family(std::size_t n, const std::vector<ElementSubset>& family, std::size_t kept) {
  if (n > 30) throw Error(ErrorKind::GroundSetTooLarge, "verify_feasible_family needs n <= 30");
  AxiomReport report;
  std::vector<bool> member(std::size_t{1} << n, false);
  for (ElementSubset f : family) {
    if (f >> n) throw Error(ErrorKind::ElementOutOfRange, "family member leaves the ground set");
    member[f] = true;
  }
  if (!member[0]) record(report, kept, {"G1", {0}, {}});

  std::vector<ElementSubset> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (ElementSubset f : sorted) {
    for (ElementSubset small : sorted) {
      if (subset_size(f) <= subset_size(small)) continue;
      bool ok = false;
      for (ElementSubset rest = f & ~small; rest && !ok; rest &= rest - 1) {
        ok = member[small | (rest & -rest)];
      }
      if (!ok) record(report, kept, {"G2", {f, small}, {}});
    }
  }
  return report;
}

AxiomReport verify_rank_table(std::size_t n, const std::vector<std::uint8_t>& ranks, std::size_t kept) {
  if (ranks.size() != (std::size_t{1} << n)) throw Error(ErrorKind::DimensionMismatch, "rank table size");
  AxiomReport report;
  std::vector<std::size_t> flat;
  for (ElementSubset a = 0; a < ranks.size(); ++a) {
    if (ranks[a] > subset_size(a)) record(report, kept, {"GR1", {a}, {}});
    flat.clear();
    for (std::size_t e = 0; e < n; ++e) {
      if (contains(a, e)) continue;
      const auto up = ranks[a | singleton(e)];
      if (up < ranks[a]) record(report, kept, {"GR2", {a, a | singleton(e)}, {}});
      if (up == ranks[a]) flat.push_back(e);
    }
    for (std::size_t i = 0; i < flat.size(); ++i)
      for (std::size_t j = i + 1; j < flat.size(); ++j) {
        if (ranks[a | singleton(flat[i]) | singleton(flat[j])] != ranks[a]) {
          record(report, kept, {"GR3", {a}, {flat[i], flat[j]}});
        }
      }
  }
  return report;
}

}  // namespace gtutte
