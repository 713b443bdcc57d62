#include <gtest/gtest.h>

#include <random>

#include "matchroots/canonical.hpp"
#include "matchroots/families.hpp"
#include "matchroots/match_poly.hpp"

using namespace matchroots;

namespace {

std::vector<Graph> corpus(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs_up_to_iso(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// counts[k] by explicit edge-subset enumeration, independent of every
// production path
std::vector<long> brute_counts(const Graph& g) {
  const auto edges = g.edges();
  std::vector<long> counts(g.order() / 2 + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
    std::uint32_t used = 0;
    bool ok = true;
    std::size_t k = 0;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!((s >> i) & 1U)) continue;
      const std::uint32_t m = (std::uint32_t{1} << edges[i].u) | (std::uint32_t{1} << edges[i].v);
      ok = (used & m) == 0;
      used |= m;
      ++k;
    }
    if (ok) ++counts[k];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<long> as_longs(const MatchCounts& c) {
  std::vector<long> out;
  for (const auto& v : c.p) out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST(MatchCounts, SmallExamples) {
  EXPECT_EQ(as_longs(match_counts(complete_graph(2))), (std::vector<long>{1, 1}));
  EXPECT_EQ(as_longs(match_counts(star_graph(3))), (std::vector<long>{1, 3}));
  EXPECT_EQ(as_longs(match_counts(cycle_graph(5))), (std::vector<long>{1, 5, 5}));
  EXPECT_EQ(brute_counts(cycle_graph(5)), (std::vector<long>{1, 5, 5}));
  EXPECT_EQ(as_longs(match_counts(Graph(0))), (std::vector<long>{1}));
}

TEST(MatchCounts, AgreesWithEdgeSubsetEnumeration) {
  for (const auto& g : corpus(6)) {
    const auto c = match_counts(g);
    EXPECT_EQ(as_longs(c), brute_counts(g)) << to_graph6(g);
    EXPECT_EQ(c.p[0], 1);
    if (c.p.size() > 1) EXPECT_EQ(c.p[1], static_cast<long>(g.edge_count()));
  }
  // Petersen: 15 edges, 6 perfect matchings
  const auto c = match_counts(petersen_graph());
  EXPECT_EQ(c.p.size(), 6U);
  EXPECT_EQ(c.p[5], 6);
}

TEST(MatchingPolynomial, Examples) {
  EXPECT_EQ(matching_polynomial(complete_graph(2)), IntPoly({-1, 0, 1}));
  EXPECT_EQ(matching_polynomial(star_graph(3)), IntPoly({0, 0, -3, 0, 1}));
  EXPECT_EQ(matching_polynomial(cycle_graph(5)), IntPoly({0, 5, 0, -5, 0, 1}));
  EXPECT_EQ(matching_polynomial(complete_graph(3)), IntPoly({0, -3, 0, 1}));
  EXPECT_EQ(matching_polynomial(Graph(0)), IntPoly{1});
  EXPECT_EQ(matching_polynomial(Graph(1)), IntPoly::x());
}

TEST(MatchingPolynomial, RecurrenceExamples) {
  EXPECT_EQ(mu_by_edge_recurrence(complete_graph(2)), IntPoly({-1, 0, 1}));
  EXPECT_EQ(mu_by_edge_recurrence(complete_graph(3)), IntPoly({0, -3, 0, 1}));
  EXPECT_EQ(mu_by_vertex_recurrence(Graph(1)), IntPoly::x());
  EXPECT_EQ(mu_by_vertex_recurrence(complete_graph(2)), IntPoly({-1, 0, 1}));
  EXPECT_EQ(mu_by_vertex_recurrence(star_graph(3)), IntPoly({0, 0, -3, 0, 1}));
}

TEST(MatchingPolynomial, ThreeMethodsAgreeOnSmallCorpus) {
  const auto graphs = corpus(6);
  ASSERT_EQ(graphs.size(), 208U);
  MuCache shared;
  for (const auto& g : graphs) {
    const IntPoly mu = matching_polynomial(g);
    EXPECT_EQ(mu_by_edge_recurrence(g), mu) << to_graph6(g);
    EXPECT_EQ(mu_by_edge_recurrence(g, &shared), mu) << to_graph6(g);
    EXPECT_EQ(mu_by_vertex_recurrence(g), mu) << to_graph6(g);
  }
  EXPECT_GT(shared.size(), 0U);
}

TEST(MatchingPolynomial, LossyCacheStaysCorrect) {
  MuCache tiny(3);
  for (const auto& f : fixture_graphs()) {
    if (f.graph.order() > 10) continue;
    EXPECT_EQ(mu_by_edge_recurrence(f.graph, &tiny), matching_polynomial(f.graph)) << f.name;
  }
  EXPECT_LE(tiny.size(), 3U);
}

TEST(MatchingPolynomial, CoefficientStructure) {
  for (const auto& g : corpus(6)) {
    const IntPoly mu = matching_polynomial(g);
    const std::size_t n = g.order();
    ASSERT_EQ(mu.degree(), n);
    EXPECT_EQ(mu.leading(), 1);
    if (n >= 1) EXPECT_EQ(mu.coeff(n - 1), 0);
    if (n >= 2) EXPECT_EQ(mu.coeff(n - 2), -static_cast<long>(g.edge_count()));
  }
}

TEST(MatchingPolynomial, DisjointUnionMultiplies) {
  const auto graphs = corpus(5);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const Graph& a = graphs[pick(rng)];
    const Graph& b = graphs[pick(rng)];
    const Graph u = disjoint_union(a, b);
    EXPECT_EQ(matching_polynomial(u), matching_polynomial(a) * matching_polynomial(b));
    EXPECT_EQ(mu_by_vertex_recurrence(u), matching_polynomial(u));
  }
}

TEST(RootSupport, Examples) {
  EXPECT_EQ(root_support(star_graph(3)).str(), "x^2 (x^2 - 3)");
  const auto p4 = root_support(path_graph(4));
  EXPECT_EQ(p4.str(), "(x^2 - x - 1) (x^2 + x - 1)");
  for (const auto& f : p4.factors()) EXPECT_EQ(f.exponent, 1U);
  EXPECT_EQ(root_support(empty_graph(3)).str(), "x^3");
  EXPECT_EQ(root_support(cycle_graph(5)).str(), "x (x^4 - 5x^2 + 5)");
  EXPECT_EQ(matching_polynomial(path_graph(4)), IntPoly({1, 0, -3, 0, 1}));
}

TEST(Deficiency, Examples) {
  EXPECT_EQ(deficiency(complete_graph(2)), 0U);
  EXPECT_EQ(deficiency(star_graph(3)), 2U);
  EXPECT_EQ(deficiency(cycle_graph(5)), 1U);
  EXPECT_EQ(matching_number(petersen_graph()), 5U);
}

TEST(Deficiency, EqualsMultiplicityOfZero) {
  for (const auto& g : corpus(6)) {
    const auto summary = brute_force_maximum_matchings(g);
    EXPECT_EQ(deficiency(g), g.order() - 2 * summary.size);
    EXPECT_EQ(multiplicity(RootClass::zero(), matching_polynomial(g)), deficiency(g)) << to_graph6(g);
  }
}

TEST(MaximumMatchings, MissedVertices) {
  // star: any leaf can be missed, the center never
  const auto s = brute_force_maximum_matchings(star_graph(3));
  EXPECT_EQ(s.size, 1U);
  EXPECT_EQ(s.missed_by_some, VertexSet::of({1, 2, 3}));
  EXPECT_TRUE(brute_force_maximum_matchings(cycle_graph(6)).missed_by_some.empty());
  EXPECT_EQ(brute_force_maximum_matchings(cycle_graph(5)).missed_by_some, VertexSet::all(5));
}

TEST(MatchingPolynomial, VertexDeletionInterlaces) {
  for (const auto& g : corpus(6)) {
    const IntPoly mu = matching_polynomial(g);
    const auto support = factor(mu);
    for (Vertex u = 0; u < g.order(); ++u) {
      const IntPoly mu_u = matching_polynomial(delete_vertex(g, u).graph);
      for (const auto& f : support.factors()) {
        const long a = static_cast<long>(f.exponent);
        const long b = static_cast<long>(multiplicity(f.root, mu_u));
        EXPECT_LE(std::abs(a - b), 1) << to_graph6(g) << " u=" << u;
      }
    }
  }
}
