#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matchroots/graph.hpp"

namespace matchroots {

inline constexpr std::size_t kCanonicalFormLimit = 10;
inline constexpr std::size_t kEnumerationLimit = 7;
inline constexpr std::size_t kAutomorphismLimit = 12;

/// Relabeling perm (vertex v -> perm[v]) that produces the canonical graph.
/// Throws std::invalid_argument above `limit` vertices.
std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t limit = kCanonicalFormLimit);

/// The graph6 string of the canonical relabeling: among all relabelings that
/// list vertices by nonincreasing degree, the one whose column-ordered
/// adjacency bits are lexicographically smallest.
std::string canonical_form(const Graph& g, std::size_t limit = kCanonicalFormLimit);

/// One canonically labeled representative per isomorphism class of graphs on
/// exactly n vertices, sorted by (edge count, canonical form).
std::vector<Graph> enumerate_graphs_up_to_iso(std::size_t n, std::size_t limit = kEnumerationLimit);

/// Orbits of the automorphism group, ordered by minimum vertex.
std::vector<VertexSet> automorphism_orbits(const Graph& g, std::size_t limit = kAutomorphismLimit);

bool is_vertex_transitive(const Graph& g, std::size_t limit = kAutomorphismLimit);

}  // namespace matchroots
