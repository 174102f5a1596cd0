#pragma once

// Small carriers shared by the test binaries.

#include <functional>
#include <vector>

#include "gtutte/families.hpp"

namespace fixtures {

using namespace gtutte;

inline std::vector<RootedGraph> small_graphs() {
  return {
      rooted_path(1),
      rooted_path(2),
      rooted_star(3),
      RootedGraph{3, {{0, 1}, {1, 2}, {2, 0}}, 0, {}},
      RootedGraph{3, {{0, 1}, {0, 1}, {1, 2}}, 2, {}},
      RootedGraph{2, {{0, 1}, {1, 1}}, 0, {}},
      RootedGraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, 0, {}},
      RootedGraph{4, {{0, 1}, {2, 3}, {2, 3}}, 0, {}},
  };
}

inline std::vector<RootedDigraph> small_digraphs() {
  return {
      directed_path(2),
      directed_star(3),
      RootedDigraph{3, {{0, 1}, {1, 2}, {2, 1}}, 0, {"p0", "p1", "q1"}},
      RootedDigraph{3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}, 0, {}},
      RootedDigraph{4, {{0, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 3}, {0, 3}}, 0, {}},
      RootedDigraph{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 1}}, 0, {}},
  };
}

inline std::vector<BinaryMatrix> small_matrices() {
  return {
      identity_matrix(2),
      example_matrix(),
      BinaryMatrix::from_strings({"110110", "011011", "101101"}),
      BinaryMatrix::from_strings({"0110", "1011", "1111"}),
      BinaryMatrix::from_strings({"1100", "0011"}),
  };
}

inline std::vector<Carrier> all_carriers() {
  std::vector<Carrier> out;
  for (auto& g : small_graphs()) out.emplace_back(g);
  for (auto& d : small_digraphs()) out.emplace_back(d);
  for (auto& m : small_matrices()) out.emplace_back(m);
  return out;
}

// Root-connected digraphs on vertices {0..n-1}, n <= max_vertices, root 0,
// with 1..max_arcs arcs drawn as a multiset from all n^2 ordered pairs (loops included).
inline std::vector<RootedDigraph> root_connected_digraphs(std::size_t max_arcs, std::size_t max_vertices) {
  std::vector<RootedDigraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<VertexPair> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<VertexPair> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (!chosen.empty()) {
        RootedDigraph d{n, chosen, 0, {}};
        if (is_root_connected(d)) out.push_back(d);
      }
      if (chosen.size() == max_arcs) return;
      for (std::size_t p = from; p < pairs.size(); ++p) {
        chosen.push_back(pairs[p]);
        rec(p);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

// Connected simple graphs on up to max_vertices vertices with at most max_edges
// edges, one entry per choice of root.
inline std::vector<RootedGraph> connected_rooted_graphs(std::size_t max_edges, std::size_t max_vertices) {
  std::vector<RootedGraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<VertexPair> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<VertexPair> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (chosen.size() + 1 >= n) {
        RootedGraph g{n, chosen, 0, {}};
        if (is_connected(g)) {
          for (std::size_t r = 0; r < n; ++r) {
            g.root = r;
            out.push_back(g);
          }
        }
      }
      if (chosen.size() == max_edges) return;
      for (std::size_t p = from; p < pairs.size(); ++p) {
        chosen.push_back(pairs[p]);
        rec(p + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace fixtures
