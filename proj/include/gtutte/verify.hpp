#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtutte/families.hpp"

namespace gtutte {

/// Outcome of one identity suite. `witness` names the first failing instance.
struct SuiteResult {
  std::string name;
  std::string title;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;
  double seconds = 0;
};

/// Suite names in the order the acceptance report prints them.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws ParseError for an unknown name.
SuiteResult run_suite(const std::string& name);

nlohmann::json to_json(const SuiteResult& r);

// Instance catalogues shared by the suites.

/// Ten carriers over the three families, each with at most five elements.
std::vector<Carrier> identity_carriers();
/// Five carriers per family for the interpolation round trips.
std::vector<Carrier> reduction_catalogue();
/// Root-connected digraphs (loops and parallel arcs allowed) with at most
/// `max_arcs` arcs, one per rooted isomorphism class.
std::vector<RootedDigraph> rooted_digraph_catalogue(std::size_t max_arcs);
/// Connected simple rooted graphs with 1..max_edges edges, one per rooted
/// isomorphism class.
std::vector<RootedGraph> rooted_graph_catalogue(std::size_t max_edges);

}  // namespace gtutte
