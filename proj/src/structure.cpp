#include "matchroots/structure.hpp"

#include "matchroots/match_poly.hpp"

namespace matchroots {

std::string_view to_string(VertexSign s) {
  switch (s) {
    case VertexSign::Essential:
      return "essential";
    case VertexSign::Neutral:
      return "neutral";
    case VertexSign::Positive:
      return "positive";
  }
  return "?";
}

char sign_letter(VertexSign s) {
  switch (s) {
    case VertexSign::Essential:
      return 'E';
    case VertexSign::Neutral:
      return 'N';
    case VertexSign::Positive:
      return 'P';
  }
  return '?';
}

InterlacingViolation::InterlacingViolation(const Graph& g, const RootClass& r, VertexSet rem, Vertex u, std::size_t b, std::size_t a)
    : std::runtime_error("deleting vertex " + std::to_string(u) + " moves mult(" + r.minpoly().str() + ") from " + std::to_string(b) +
                         " to " + std::to_string(a)),
      graph(g),
      root(r),
      removed(rem),
      vertex(u),
      before(b),
      after(a) {}

const IntPoly& MuTable::mu(const Graph& g, VertexSet removed) {
  Key key{g, removed.bits()};
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  IntPoly value = matching_polynomial(induced_subgraph(g, g.vertices() - removed).graph);
  return table_.emplace(std::move(key), std::move(value)).first->second;
}

MultiplicityOracle::MultiplicityOracle(RootClass root, MuTable* shared) : root_(std::move(root)), table_(shared ? shared : &own_) {}

std::size_t MultiplicityOracle::mult(const Graph& g, VertexSet removed) {
  removed = removed & g.vertices();
  Key key{g, removed.bits()};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::size_t m = multiplicity(root_, table_->mu(g, removed));
  if (fault_) m = fault_(g, removed, m);
  cache_.emplace(std::move(key), m);
  return m;
}

std::optional<VertexSign> MultiplicityOracle::try_sign(const Graph& g, Vertex u, VertexSet removed) {
  VertexSet more = removed;
  more.insert(u);
  const auto before = static_cast<long>(mult(g, removed));
  const auto after = static_cast<long>(mult(g, more));
  switch (after - before) {
    case -1:
      return VertexSign::Essential;
    case 0:
      return VertexSign::Neutral;
    case 1:
      return VertexSign::Positive;
    default:
      return std::nullopt;
  }
}

VertexSign MultiplicityOracle::sign(const Graph& g, Vertex u, VertexSet removed) {
  if (auto s = try_sign(g, u, removed)) return *s;
  VertexSet more = removed;
  more.insert(u);
  throw InterlacingViolation(g, root_, removed, u, mult(g, removed), mult(g, more));
}

std::optional<SignTable> try_classify(MultiplicityOracle& oracle, const Graph& g, VertexSet removed) {
  SignTable t;
  t.root = oracle.root();
  t.present = g.vertices() - removed;
  t.base_mult = oracle.mult(g, removed);
  t.signs.assign(g.order(), VertexSign::Neutral);
  for (auto u : t.present) {
    auto s = oracle.try_sign(g, u, removed);
    if (!s) return std::nullopt;
    t.signs[u] = *s;
    switch (*s) {
      case VertexSign::Essential:
        t.essential.insert(u);
        break;
      case VertexSign::Neutral:
        t.neutral.insert(u);
        break;
      case VertexSign::Positive:
        t.positive.insert(u);
        break;
    }
  }
  for (auto u : t.present - t.essential) {
    if (!(g.neighbors(u) & t.essential).empty()) t.special.insert(u);
  }
  return t;
}

SignTable classify(MultiplicityOracle& oracle, const Graph& g, VertexSet removed) {
  if (auto t = try_classify(oracle, g, removed)) return *t;
  for (auto u : g.vertices() - removed) oracle.sign(g, u, removed);
  throw std::logic_error("classify: inconsistent oracle");
}

SignTable classify_all(const Graph& g, const RootClass& root) {
  MultiplicityOracle oracle(root);
  return classify(oracle, g);
}

VertexSign vertex_sign(const Graph& g, const RootClass& root, Vertex u) {
  if (u >= g.order()) throw std::out_of_range("vertex_sign: vertex " + std::to_string(u) + " out of range");
  MultiplicityOracle oracle(root);
  return oracle.sign(g, u);
}

Decomposition decomposition(const SignTable& table) {
  Decomposition d;
  d.root = table.root;
  d.D = table.essential;
  d.A = table.special;
  d.C = table.present - table.essential - table.special;
  return d;
}

Decomposition decomposition(const Graph& g, const RootClass& root) { return decomposition(classify_all(g, root)); }

bool is_essential_path(MultiplicityOracle& oracle, const Graph& g, std::span<const Vertex> path) {
  if (!is_path(g, path)) throw std::invalid_argument("is_essential_path: not a path of the graph");
  const std::size_t k = oracle.mult(g);
  if (k == 0) throw std::domain_error("is_essential_path: " + oracle.root().minpoly().str() + " is not a root");
  VertexSet removed;
  for (auto v : path) removed.insert(v);
  return oracle.mult(g, removed) + 1 == k;
}

bool is_essential_path(const Graph& g, const RootClass& root, std::span<const Vertex> path) {
  MultiplicityOracle oracle(root);
  return is_essential_path(oracle, g, path);
}

}  // namespace matchroots
