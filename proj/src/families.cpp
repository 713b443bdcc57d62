#include "matchroots/families.hpp"

#include <stdexcept>

namespace matchroots {

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

Graph hypercube_graph(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t d = 0; d < dim; ++d) {
      const Vertex w = v ^ (std::size_t{1} << d);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph petersen_graph() {
  return Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

std::vector<NamedGraph> fixture_graphs() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 3; n <= 12; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (std::size_t n = 2; n <= 8; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  out.push_back({"K3,3", complete_bipartite_graph(3, 3)});
  out.push_back({"Q3", hypercube_graph(3)});
  out.push_back({"Petersen", petersen_graph()});
  return out;
}

}  // namespace matchroots
