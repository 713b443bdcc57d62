#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchroots {

using Vertex = std::size_t;
inline constexpr std::size_t kMaxVertices = 32;

/// A set of vertices of a graph with at most kMaxVertices vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  static VertexSet all(std::size_t n) { return VertexSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1); }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (auto v : vs) s.insert(v);
    return s;
  }

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  void insert(Vertex v) { bits_ |= std::uint32_t{1} << v; }
  void erase(Vertex v) { bits_ &= ~(std::uint32_t{1} << v); }
  Vertex min() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet, VertexSet) = default;

  std::vector<Vertex> to_vector() const;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint32_t rest) : rest_(rest) {}
    Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint32_t bits_ = 0;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Relabeled;

/// Simple undirected graph on vertices 0..n-1, n <= kMaxVertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Duplicated pairs collapse. Throws std::invalid_argument on an
  /// out-of-range endpoint or a self-loop.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;
  VertexSet vertices() const { return VertexSet::all(n_); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex u) const { return VertexSet(adj_[u]); }
  std::size_t degree(Vertex u) const { return static_cast<std::size_t>(std::popcount(adj_[u])); }
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  std::size_t hash() const;

 private:
  friend Graph add_edge(const Graph&, Edge);
  friend Graph delete_edge(const Graph&, Edge);
  friend Relabeled induced_subgraph(const Graph&, VertexSet);
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph permute(const Graph&, std::span<const Vertex>);

  void link(Vertex u, Vertex v) {
    adj_[u] |= std::uint32_t{1} << v;
    adj_[v] |= std::uint32_t{1} << u;
  }
  void unlink(Vertex u, Vertex v) {
    adj_[u] &= ~(std::uint32_t{1} << v);
    adj_[v] &= ~(std::uint32_t{1} << u);
  }

  std::size_t n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hash(); }
};

/// A graph derived by deleting vertices, with the surviving vertices'
/// old -> new labels (nullopt for deleted vertices).
struct Relabeled {
  Graph graph;
  std::vector<std::optional<Vertex>> index_map;
};

/// Throws std::out_of_range when u is not a vertex.
Relabeled delete_vertex(const Graph& g, Vertex u);
/// Subgraph induced by `keep`, relabeled densely in increasing order.
Relabeled induced_subgraph(const Graph& g, VertexSet keep);

/// Throws std::invalid_argument unless e is an edge.
Graph delete_edge(const Graph& g, Edge e);
/// Throws std::invalid_argument if f is already an edge or a self-loop.
Graph add_edge(const Graph& g, Edge f);

/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels so that vertex v becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Maximal connected vertex sets ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the subgraph induced by `within`, in host labels.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);

/// A simple path, listed from one end vertex to the other.
struct VertexPath {
  std::vector<Vertex> vertices;
  friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

bool is_path(const Graph& g, std::span<const Vertex> path);

/// Visits every simple path with 1..max_len vertices once, by increasing
/// length; multi-vertex paths are oriented with the smaller end vertex first.
void for_each_path(const Graph& g, std::size_t max_len, const std::function<void(std::span<const Vertex>)>& visit);
std::vector<VertexPath> enumerate_paths(const Graph& g, std::size_t max_len);

// Text formats.

/// graph6 short form (n < 63), with or without the ">>graph6<<" header.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// "n; u-v, u-v, ..." (the edge part may be empty: "3;" or "3").
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

/// Edge-list text when the input contains ';' or only digits, graph6 otherwise.
Graph parse_graph_input(std::string_view text);

}  // namespace matchroots
