#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchroots/factor.hpp"
#include "matchroots/graph.hpp"
#include "matchroots/int_poly.hpp"

namespace matchroots {

/// p[k] = number of k-edge matchings, for k = 0..matching number.
struct MatchCounts {
  std::vector<Integer> p;

  std::size_t matching_number() const { return p.size() - 1; }
};

/// Counts matchings with a left-to-right sweep over the vertices whose state
/// is the set of later vertices already matched to an earlier one.
MatchCounts match_counts(const Graph& g);

/// sum_k (-1)^k p[k] x^(n - 2k).
IntPoly matching_polynomial(const MatchCounts& counts, std::size_t n);
IntPoly matching_polynomial(const Graph& g);

/// Memo table for the edge recurrence, keyed by canonical form. Safe for
/// concurrent use; once `capacity` entries are stored further inserts are
/// dropped.
class MuCache {
 public:
  explicit MuCache(std::size_t capacity = 1 << 16) : capacity_(capacity) {}

  bool lookup(const std::string& key, IntPoly& out) const;
  void insert(const std::string& key, const IntPoly& value);
  std::size_t size() const;

 private:
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, IntPoly> table_;
};

/// mu(G) = mu(G - e) - mu(G \ uv), memoized on isomorphism class. A private
/// cache is used when `cache` is null.
IntPoly mu_by_edge_recurrence(const Graph& g, MuCache* cache = nullptr);

/// mu(G) = x mu(G \ u) - sum over neighbors v of mu(G \ uv), memoized on the
/// surviving vertex set.
IntPoly mu_by_vertex_recurrence(const Graph& g);

/// Irreducible factorization of the matching polynomial: every root class
/// with its multiplicity.
FactoredPoly root_support(const Graph& g);

std::size_t matching_number(const Graph& g);
/// n - 2 * matching number.
std::size_t deficiency(const Graph& g);

/// Calls visit on every matching (including the empty one) by explicit
/// enumeration of edge subsets.
void for_each_matching(const Graph& g, const std::function<void(std::span<const Edge>)>& visit);

struct MaximumMatchingSummary {
  std::size_t size = 0;
  /// Vertices left uncovered by at least one maximum matching.
  VertexSet missed_by_some;
};

MaximumMatchingSummary brute_force_maximum_matchings(const Graph& g);

}  // namespace matchroots
