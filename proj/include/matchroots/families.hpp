#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matchroots/graph.hpp"

namespace matchroots {

Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// K_{1,k}; the center is vertex 0.
Graph star_graph(std::size_t leaves);
Graph hypercube_graph(std::size_t dim);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// C3..C12, K2..K8, K3,3, Q3 and the Petersen graph, all vertex-transitive.
std::vector<NamedGraph> fixture_graphs();

}  // namespace matchroots
