#include "matchroots/match_poly.hpp"

#include <map>

#include "matchroots/canonical.hpp"

namespace matchroots {

MatchCounts match_counts(const Graph& g) {
  const std::size_t n = g.order();
  // state: bits of vertices > i that are already matched -> counts by size
  std::map<std::uint32_t, std::vector<Integer>> cur;
  cur[0] = {Integer(1)};
  auto accumulate = [](std::vector<Integer>& into, const std::vector<Integer>& from, std::size_t shift) {
    if (into.size() < from.size() + shift) into.resize(from.size() + shift);
    for (std::size_t k = 0; k < from.size(); ++k) into[k + shift] += from[k];
  };
  for (Vertex i = 0; i < n; ++i) {
    std::map<std::uint32_t, std::vector<Integer>> next;
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (const auto& [used, counts] : cur) {
      if (used & bit) {
        accumulate(next[used & ~bit], counts, 0);
        continue;
      }
      accumulate(next[used], counts, 0);
      for (auto j : g.neighbors(i)) {
        if (j <= i || ((used >> j) & 1U)) continue;
        accumulate(next[used | (std::uint32_t{1} << j)], counts, 1);
      }
    }
    cur = std::move(next);
  }
  MatchCounts out{std::move(cur[0])};
  while (out.p.size() > 1 && sgn(out.p.back()) == 0) out.p.pop_back();
  return out;
}

IntPoly matching_polynomial(const MatchCounts& counts, std::size_t n) {
  std::vector<Integer> c(n + 1);
  for (std::size_t k = 0; k < counts.p.size(); ++k) c[n - 2 * k] = (k % 2 == 0) ? counts.p[k] : Integer(-counts.p[k]);
  return IntPoly(std::move(c));
}

IntPoly matching_polynomial(const Graph& g) { return matching_polynomial(match_counts(g), g.order()); }

bool MuCache::lookup(const std::string& key, IntPoly& out) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void MuCache::insert(const std::string& key, const IntPoly& value) {
  std::unique_lock lock(mutex_);
  if (table_.size() >= capacity_) return;
  table_.emplace(key, value);
}

std::size_t MuCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

namespace {

IntPoly edge_recurrence(const Graph& g, MuCache& cache) {
  if (g.edge_count() == 0) return IntPoly::monomial(1, g.order());
  const std::string key = g.order() <= kCanonicalFormLimit ? canonical_form(g) : to_graph6(g);
  IntPoly out;
  if (cache.lookup(key, out)) return out;
  Vertex u = 0;
  while (g.degree(u) == 0) ++u;
  const Vertex v = g.neighbors(u).min();
  VertexSet rest = g.vertices();
  rest.erase(u);
  rest.erase(v);
  out = edge_recurrence(delete_edge(g, {u, v}), cache) - edge_recurrence(induced_subgraph(g, rest).graph, cache);
  cache.insert(key, out);
  return out;
}

IntPoly vertex_recurrence(const Graph& g, VertexSet alive, std::unordered_map<std::uint32_t, IntPoly>& memo) {
  if (alive.empty()) return IntPoly{1};
  if (auto it = memo.find(alive.bits()); it != memo.end()) return it->second;
  const Vertex u = alive.min();
  VertexSet without_u = alive;
  without_u.erase(u);
  IntPoly out = IntPoly::x() * vertex_recurrence(g, without_u, memo);
  for (auto v : g.neighbors(u) & without_u) {
    VertexSet without_uv = without_u;
    without_uv.erase(v);
    out = out - vertex_recurrence(g, without_uv, memo);
  }
  memo.emplace(alive.bits(), out);
  return out;
}

}  // namespace

IntPoly mu_by_edge_recurrence(const Graph& g, MuCache* cache) {
  if (cache != nullptr) return edge_recurrence(g, *cache);
  MuCache local;
  return edge_recurrence(g, local);
}

IntPoly mu_by_vertex_recurrence(const Graph& g) {
  std::unordered_map<std::uint32_t, IntPoly> memo;
  return vertex_recurrence(g, g.vertices(), memo);
}

FactoredPoly root_support(const Graph& g) { return factor(matching_polynomial(g)); }

std::size_t matching_number(const Graph& g) { return match_counts(g).matching_number(); }

std::size_t deficiency(const Graph& g) { return g.order() - 2 * matching_number(g); }

namespace {

void extend_matching(const std::vector<Edge>& edges, std::size_t from, VertexSet covered, std::vector<Edge>& chosen,
                     const std::function<void(std::span<const Edge>)>& visit) {
  visit(chosen);
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (covered.contains(e.u) || covered.contains(e.v)) continue;
    chosen.push_back(e);
    extend_matching(edges, i + 1, covered | VertexSet::of({e.u, e.v}), chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_matching(const Graph& g, const std::function<void(std::span<const Edge>)>& visit) {
  const auto edges = g.edges();
  std::vector<Edge> chosen;
  extend_matching(edges, 0, VertexSet(), chosen, visit);
}

MaximumMatchingSummary brute_force_maximum_matchings(const Graph& g) {
  MaximumMatchingSummary out;
  for_each_matching(g, [&](std::span<const Edge> m) {
    VertexSet covered;
    for (const auto& e : m) covered = covered | VertexSet::of({e.u, e.v});
    const VertexSet missed = g.vertices() - covered;
    if (m.size() > out.size) {
      out.size = m.size();
      out.missed_by_some = missed;
    } else if (m.size() == out.size) {
      out.missed_by_some = out.missed_by_some | missed;
    }
  });
  return out;
}

}  // namespace matchroots
