#include "matchroots/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace matchroots {

namespace {

void check_limit(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds the brute-force limit of " +
                                std::to_string(limit));
  }
}

// Branch and bound over degree-respecting relabelings. Column j of a
// relabeling is the mask of earlier positions adjacent to position j.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    degree_at_.resize(n_);
    std::vector<Vertex> by_degree(n_);
    std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (std::size_t j = 0; j < n_; ++j) degree_at_[j] = g.degree(by_degree[j]);
    order_.resize(n_);
    cols_.resize(n_);
    best_cols_.resize(n_);
    best_order_.resize(n_);
  }

  void run() {
    if (n_ == 0) return;
    search(0, false, VertexSet());
  }

  const std::vector<Vertex>& best_order() const { return best_order_; }
  const std::vector<std::uint32_t>& best_cols() const { return best_cols_; }

 private:
  // Returns true when the best relabeling was replaced in this subtree.
  bool search(std::size_t j, bool less, VertexSet placed) {
    if (j == n_) {
      if (!have_best_ || less) {
        best_cols_ = cols_;
        best_order_ = order_;
        have_best_ = true;
        return true;
      }
      return false;
    }
    bool updated = false;
    for (Vertex v = 0; v < n_; ++v) {
      if (placed.contains(v) || g_.degree(v) != degree_at_[j]) continue;
      std::uint32_t col = 0;
      for (std::size_t i = 0; i < j; ++i) {
        if (g_.adjacent(order_[i], v)) col |= std::uint32_t{1} << i;
      }
      bool child_less = less;
      if (have_best_ && !less) {
        const std::uint32_t diff = col ^ best_cols_[j];
        if (diff != 0) {
          const std::uint32_t low = diff & (~diff + 1);
          if (col & low) continue;
          child_less = true;
        }
      }
      order_[j] = v;
      cols_[j] = col;
      VertexSet next = placed;
      next.insert(v);
      if (search(j + 1, child_less, next)) {
        updated = true;
        less = false;
      }
    }
    return updated;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> degree_at_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> cols_;
  std::vector<std::uint32_t> best_cols_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

// Finds an automorphism mapping `from` to `to`, if any.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order()) {}

  bool find(Vertex from, Vertex to, std::vector<Vertex>& image) {
    // Visit vertices in breadth-first order from `from` so adjacency
    // constraints bite early.
    order_.clear();
    VertexSet seen;
    auto bfs = [&](Vertex root) {
      std::size_t head = order_.size();
      order_.push_back(root);
      seen.insert(root);
      while (head < order_.size()) {
        for (auto w : g_.neighbors(order_[head++])) {
          if (!seen.contains(w)) {
            seen.insert(w);
            order_.push_back(w);
          }
        }
      }
    };
    bfs(from);
    for (Vertex v = 0; v < n_; ++v) {
      if (!seen.contains(v)) bfs(v);
    }
    map_.assign(n_, 0);
    if (g_.degree(from) != g_.degree(to)) return false;
    map_[from] = to;
    VertexSet used;
    used.insert(to);
    if (!extend(1, used)) return false;
    image = map_;
    return true;
  }

 private:
  bool extend(std::size_t k, VertexSet used) {
    if (k == n_) return true;
    const Vertex v = order_[k];
    for (Vertex w = 0; w < n_; ++w) {
      if (used.contains(w) || g_.degree(w) != g_.degree(v)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const Vertex x = order_[i];
        ok = g_.adjacent(v, x) == g_.adjacent(w, map_[x]);
      }
      if (!ok) continue;
      map_[v] = w;
      VertexSet next = used;
      next.insert(w);
      if (extend(k + 1, next)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t limit) {
  check_limit(g, limit, "canonical_labeling");
  CanonicalSearch search(g);
  search.run();
  std::vector<Vertex> perm(g.order());
  for (std::size_t j = 0; j < g.order(); ++j) perm[search.best_order()[j]] = j;
  return perm;
}

std::string canonical_form(const Graph& g, std::size_t limit) {
  const auto perm = canonical_labeling(g, limit);
  return to_graph6(permute(g, perm));
}

std::vector<Graph> enumerate_graphs_up_to_iso(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw std::invalid_argument("enumerate_graphs_up_to_iso: n = " + std::to_string(n) + " exceeds the limit of " + std::to_string(limit));
  }
  // Every graph on n vertices is a representative on n-1 vertices plus a new
  // vertex with some neighbor set.
  std::vector<Graph> level{Graph(0)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::size_t, std::string>> keyed;
    for (const auto& base : level) {
      for (std::uint32_t nbrs = 0; nbrs < (std::uint32_t{1} << (m - 1)); ++nbrs) {
        std::vector<Edge> edges = base.edges();
        for (auto v : VertexSet(nbrs)) edges.push_back({v, m - 1});
        const Graph g = Graph::from_edge_list(m, edges);
        std::string key = canonical_form(g, limit);
        if (seen.insert(key).second) keyed.emplace_back(g.edge_count(), std::move(key));
      }
    }
    std::sort(keyed.begin(), keyed.end());
    level.clear();
    level.reserve(keyed.size());
    for (const auto& [edges, key] : keyed) level.push_back(parse_graph6(key));
  }
  return level;
}

std::vector<VertexSet> automorphism_orbits(const Graph& g, std::size_t limit) {
  check_limit(g, limit, "automorphism_orbits");
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  AutomorphismSearch search(g);
  std::vector<Vertex> image;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex t = v + 1; t < n; ++t) {
      if (find(v) == find(t)) continue;
      if (!search.find(v, t, image)) continue;
      for (Vertex x = 0; x < n; ++x) {
        const Vertex a = find(x), b = find(image[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<VertexSet> orbits;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = find(v);
    auto it = std::find_if(orbits.begin(), orbits.end(), [&](VertexSet s) { return find(s.min()) == r; });
    if (it == orbits.end()) {
      orbits.push_back(VertexSet::of({v}));
    } else {
      it->insert(v);
    }
  }
  return orbits;
}

bool is_vertex_transitive(const Graph& g, std::size_t limit) { return automorphism_orbits(g, limit).size() <= 1; }

}  // namespace matchroots
