#include "matchroots/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace matchroots {

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (auto v : *this) out.push_back(v);
  return out;
}

Graph::Graph(std::size_t n) : n_(n) {
  if (n > kMaxVertices) throw std::invalid_argument("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    g.link(e.u, e.v);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (auto v : neighbors(u)) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

std::size_t Graph::hash() const {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
  for (std::size_t u = 0; u < n_; ++u) h = (h ^ adj_[u]) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Relabeled delete_vertex(const Graph& g, Vertex u) {
  if (u >= g.order()) throw std::out_of_range("vertex " + std::to_string(u) + " is not in the graph");
  VertexSet keep = g.vertices();
  keep.erase(u);
  return induced_subgraph(g, keep);
}

Relabeled induced_subgraph(const Graph& g, VertexSet keep) {
  keep = keep & g.vertices();
  Relabeled out{Graph(keep.size()), std::vector<std::optional<Vertex>>(g.order())};
  Vertex next = 0;
  for (auto v : keep) out.index_map[v] = next++;
  for (auto u : keep) {
    for (auto v : g.neighbors(u) & keep) {
      if (v > u) out.graph.link(*out.index_map[u], *out.index_map[v]);
    }
  }
  return out;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw std::invalid_argument("cannot delete non-edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  Graph out = g;
  out.unlink(e.u, e.v);
  return out;
}

Graph add_edge(const Graph& g, Edge f) {
  if (f.u >= g.order() || f.v >= g.order()) throw std::invalid_argument("edge endpoint out of range");
  if (f.u == f.v) throw std::invalid_argument("cannot add a self-loop");
  if (g.adjacent(f.u, f.v)) {
    throw std::invalid_argument("edge " + std::to_string(f.u) + "-" + std::to_string(f.v) + " already present");
  }
  Graph out = g;
  out.link(f.u, f.v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const auto& e : a.edges()) out.link(e.u, e.v);
  for (const auto& e : b.edges()) out.link(e.u + a.order(), e.v + a.order());
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size does not match graph order");
  Graph out(g.order());
  for (const auto& e : g.edges()) out.link(perm[e.u], perm[e.v]);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (!left.empty()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.insert(left.min());
    while (!frontier.empty()) {
      comp = comp | frontier;
      VertexSet next;
      for (auto v : frontier) next = next | g.neighbors(v);
      frontier = (next & left) - comp;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.order() || seen.contains(path[i])) return false;
    seen.insert(path[i]);
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

namespace {

void extend_paths(const Graph& g, std::vector<Vertex>& path, VertexSet used, std::size_t target,
                  const std::function<void(std::span<const Vertex>)>& visit) {
  if (path.size() == target) {
    if (target == 1 || path.front() < path.back()) visit(path);
    return;
  }
  for (auto w : g.neighbors(path.back()) - used) {
    path.push_back(w);
    used.insert(w);
    extend_paths(g, path, used, target, visit);
    used.erase(w);
    path.pop_back();
  }
}

}  // namespace

void for_each_path(const Graph& g, std::size_t max_len, const std::function<void(std::span<const Vertex>)>& visit) {
  std::vector<Vertex> path;
  for (std::size_t len = 1; len <= std::min(max_len, g.order()); ++len) {
    for (Vertex s = 0; s < g.order(); ++s) {
      path.assign(1, s);
      extend_paths(g, path, VertexSet::of({s}), len, visit);
    }
  }
}

std::vector<VertexPath> enumerate_paths(const Graph& g, std::size_t max_len) {
  std::vector<VertexPath> out;
  for_each_path(g, max_len, [&](std::span<const Vertex> p) { out.push_back({{p.begin(), p.end()}}); });
  return out;
}

// graph6: one byte n+63, then the upper triangle column by column
// ((0,1), (0,2), (1,2), (0,3), ...) packed six bits per byte, high bit first.

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  const int len_byte = static_cast<unsigned char>(text[0]);
  if (len_byte < 63 || len_byte > 126) throw std::invalid_argument("graph6: malformed length byte");
  if (len_byte == 126) throw std::invalid_argument("graph6: only the short form (n < 63) is supported");
  const std::size_t n = static_cast<std::size_t>(len_byte - 63);
  if (n > kMaxVertices) throw std::invalid_argument("graph6: graph has more than " + std::to_string(kMaxVertices) + " vertices");
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() < nbytes) throw std::invalid_argument("graph6: bit-length mismatch (too few bytes)");
  if (body.size() > nbytes) throw std::invalid_argument("graph6: trailing garbage");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    const int b = static_cast<unsigned char>(body[k]);
    if (b < 63 || b > 126) throw std::invalid_argument("graph6: byte out of range");
    const int value = b - 63;
    for (int s = 5; s >= 0; --s, ++bit) {
      const bool set = (value >> s) & 1;
      if (bit >= nbits) {
        if (set) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (!set) continue;
      // Bit index -> (i, j) in column order.
      std::size_t j = 1;
      while (j * (j + 1) / 2 <= bit) ++j;
      const std::size_t i = bit - j * (j - 1) / 2;
      edges.push_back({i, j});
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s, const char* what) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("edge list: bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list_text(std::string_view text) {
  text = trim(text);
  const auto semi = text.find(';');
  const std::size_t n = parse_count(text.substr(0, semi), "vertex count");
  if (n > kMaxVertices) throw std::invalid_argument("edge list: too many vertices");
  std::vector<Edge> edges;
  if (semi != std::string_view::npos) {
    std::string_view rest = trim(text.substr(semi + 1));
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = trim(rest.substr(0, comma));
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) throw std::invalid_argument("edge list: expected u-v, got '" + std::string(item) + "'");
      edges.push_back({parse_count(item.substr(0, dash), "vertex"), parse_count(item.substr(dash + 1), "vertex")});
      if (comma == std::string_view::npos) break;
      rest = trim(rest.substr(comma + 1));
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_edge_list_text(const Graph& g) {
  std::string out = std::to_string(g.order()) + ";";
  bool first = true;
  for (const auto& e : g.edges()) {
    out += first ? " " : ", ";
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out;
}

Graph parse_graph_input(std::string_view text) {
  text = trim(text);
  const bool digits_only = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (digits_only || text.find(';') != std::string_view::npos) return parse_edge_list_text(text);
  return parse_graph6(text);
}

}  // namespace matchroots
