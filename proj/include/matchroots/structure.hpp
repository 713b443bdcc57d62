#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matchroots/factor.hpp"
#include "matchroots/graph.hpp"
#include "matchroots/int_poly.hpp"

namespace matchroots {

/// Change of mult(theta, .) when a vertex is deleted: -1, 0, +1.
enum class VertexSign { Essential, Neutral, Positive };

std::string_view to_string(VertexSign s);
/// "E", "N", "P".
char sign_letter(VertexSign s);

/// Raised when deleting one vertex moves a multiplicity by more than one.
class InterlacingViolation : public std::runtime_error {
 public:
  InterlacingViolation(const Graph& g, const RootClass& root, VertexSet removed, Vertex u, std::size_t before, std::size_t after);

  Graph graph;
  RootClass root;
  VertexSet removed;
  Vertex vertex;
  std::size_t before;
  std::size_t after;
};

/// Memo of mu(G \ S) keyed by (graph, removed set S). One table can serve
/// several roots of the same graph. Not thread-safe.
class MuTable {
 public:
  const IntPoly& mu(const Graph& g, VertexSet removed);
  std::size_t size() const { return table_.size(); }
  void clear() { table_.clear(); }

 private:
  struct Key {
    Graph graph;
    std::uint32_t removed;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.graph.hash() * 1000003U ^ k.removed; }
  };
  std::unordered_map<Key, IntPoly, KeyHash> table_;
};

/// Test hook: receives (graph, removed set, true multiplicity) and returns
/// the value the oracle should report instead.
using MultiplicityFault = std::function<std::size_t(const Graph&, VertexSet, std::size_t)>;

/// mult(theta, G \ S) for one root class over any graph, memoized. Not
/// thread-safe; use one per worker.
class MultiplicityOracle {
 public:
  explicit MultiplicityOracle(RootClass root, MuTable* shared = nullptr);

  const RootClass& root() const { return root_; }

  std::size_t mult(const Graph& g, VertexSet removed = VertexSet());

  /// Sign of u in G \ removed; nullopt when the change is outside {-1,0,1}.
  std::optional<VertexSign> try_sign(const Graph& g, Vertex u, VertexSet removed = VertexSet());
  /// As try_sign but throws InterlacingViolation.
  VertexSign sign(const Graph& g, Vertex u, VertexSet removed = VertexSet());

  void set_fault(MultiplicityFault fault) { fault_ = std::move(fault); }

 private:
  struct Key {
    Graph graph;
    std::uint32_t removed;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.graph.hash() * 1000003U ^ k.removed; }
  };

  RootClass root_;
  MuTable own_;
  MuTable* table_;
  std::unordered_map<Key, std::size_t, KeyHash> cache_;
  MultiplicityFault fault_;
};

/// Signs of every vertex of G \ removed for one root. Vertices keep their
/// labels in G; `signs` is indexed by label and removed labels hold Neutral.
struct SignTable {
  RootClass root = RootClass::zero();
  VertexSet present;
  std::size_t base_mult = 0;
  std::vector<VertexSign> signs;
  VertexSet essential;
  VertexSet neutral;
  VertexSet positive;
  /// Not essential, with an essential neighbor.
  VertexSet special;
};

/// Throws InterlacingViolation if some vertex moves the multiplicity by two
/// or more.
SignTable classify(MultiplicityOracle& oracle, const Graph& g, VertexSet removed = VertexSet());
/// nullopt instead of throwing.
std::optional<SignTable> try_classify(MultiplicityOracle& oracle, const Graph& g, VertexSet removed = VertexSet());

SignTable classify_all(const Graph& g, const RootClass& root);
VertexSign vertex_sign(const Graph& g, const RootClass& root, Vertex u);

/// Per-root partition: D essential, A special, C the rest.
struct Decomposition {
  RootClass root = RootClass::zero();
  VertexSet D;
  VertexSet A;
  VertexSet C;
};

Decomposition decomposition(const SignTable& table);
Decomposition decomposition(const Graph& g, const RootClass& root);

/// Deleting the path's vertices lowers the multiplicity by exactly one.
/// Throws std::invalid_argument if `path` is not a path of G, and
/// std::domain_error if theta is not a root of mu(G).
bool is_essential_path(const Graph& g, const RootClass& root, std::span<const Vertex> path);
bool is_essential_path(MultiplicityOracle& oracle, const Graph& g, std::span<const Vertex> path);

}  // namespace matchroots
