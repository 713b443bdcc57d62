#include <gtest/gtest.h>

#include "matchroots/canonical.hpp"
#include "matchroots/families.hpp"
#include "matchroots/lemmas.hpp"
#include "matchroots/match_poly.hpp"
#include "matchroots/structure.hpp"

using namespace matchroots;

namespace {

const RootClass kZero = RootClass::zero();
const RootClass kSqrt3(IntPoly({-3, 0, 1}));

std::vector<Graph> corpus(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs_up_to_iso(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// mult straight from the definition: build G \ S explicitly and factor.
std::size_t mult_by_hand(const Graph& g, const RootClass& r, VertexSet removed) {
  return multiplicity(r, matching_polynomial(induced_subgraph(g, g.vertices() - removed).graph));
}

}  // namespace

TEST(Signs, StarAtZero) {
  const Graph s = star_graph(3);
  EXPECT_EQ(vertex_sign(s, kZero, 0), VertexSign::Positive);
  for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(vertex_sign(s, kZero, v), VertexSign::Essential);
  const auto t = classify_all(s, kZero);
  EXPECT_EQ(t.base_mult, 2U);
  EXPECT_EQ(t.special, VertexSet::of({0}));
  EXPECT_EQ(t.essential, VertexSet::of({1, 2, 3}));
}

TEST(Signs, StarAtSqrt3) {
  const auto t = classify_all(star_graph(3), kSqrt3);
  EXPECT_EQ(t.base_mult, 1U);
  EXPECT_EQ(t.essential, VertexSet::all(4));
  EXPECT_TRUE(t.special.empty());
}

TEST(Signs, EdgeAtOne) {
  const auto t = classify_all(complete_graph(2), RootClass(IntPoly({-1, 1})));
  EXPECT_EQ(t.essential, VertexSet::all(2));
  EXPECT_TRUE(t.special.empty());
}

TEST(Signs, NonRootHasNoEssentialVertex) {
  const RootClass two(IntPoly({-2, 1}));
  for (const auto& g : corpus(5)) {
    if (multiplicity(two, matching_polynomial(g)) != 0) continue;
    EXPECT_TRUE(classify_all(g, two).essential.empty()) << to_graph6(g);
  }
}

TEST(Signs, OutOfRangeVertex) { EXPECT_THROW(vertex_sign(star_graph(3), kZero, 4), std::out_of_range); }

TEST(Signs, OracleMatchesDefinition) {
  for (const auto& g : corpus(5)) {
    const auto support = root_support(g);
    for (const auto& f : support.factors()) {
      MultiplicityOracle o(f.root);
      for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
        ASSERT_EQ(o.mult(g, VertexSet(s)), mult_by_hand(g, f.root, VertexSet(s)));
      }
    }
  }
}

TEST(Decomposition, Examples) {
  const auto d = decomposition(star_graph(3), kZero);
  EXPECT_EQ(d.D, VertexSet::of({1, 2, 3}));
  EXPECT_EQ(d.A, VertexSet::of({0}));
  EXPECT_TRUE(d.C.empty());

  const auto c5 = decomposition(cycle_graph(5), RootClass(IntPoly({5, 0, -5, 0, 1})));
  EXPECT_EQ(c5.D, VertexSet::all(5));
  EXPECT_TRUE(c5.A.empty());
  EXPECT_TRUE(c5.C.empty());

  // x - 2 is not a root of mu(P3) = x^3 - 2x
  const auto p3 = decomposition(path_graph(3), RootClass(IntPoly({-2, 1})));
  EXPECT_TRUE(p3.D.empty());
  EXPECT_TRUE(p3.A.empty());
  EXPECT_EQ(p3.C, VertexSet::all(3));
}

TEST(Decomposition, PartitionAndSpecialArePositive) {
  for (const auto& g : corpus(6)) {
    const auto support = root_support(g);
    for (const auto& f : support.factors()) {
      const auto t = classify_all(g, f.root);
      const auto d = decomposition(t);
      EXPECT_TRUE((d.D & d.A).empty());
      EXPECT_TRUE((d.D & d.C).empty());
      EXPECT_TRUE((d.A & d.C).empty());
      EXPECT_EQ(d.D | d.A | d.C, g.vertices());
      EXPECT_EQ(t.special - t.positive, VertexSet()) << to_graph6(g) << " " << f.root.minpoly().str();
      for (auto u : g.vertices()) {
        const bool expect_special = !t.essential.contains(u) && !(g.neighbors(u) & t.essential).empty();
        EXPECT_EQ(t.special.contains(u), expect_special);
      }
    }
  }
}

TEST(EssentialPath, Examples) {
  const Graph s = star_graph(3);
  const std::vector<Vertex> leaf{1}, leaf_center{1, 0}, leaf_center_leaf{1, 0, 2};
  EXPECT_TRUE(is_essential_path(s, kZero, leaf));
  EXPECT_FALSE(is_essential_path(s, kZero, leaf_center));
  // G \ P is a single vertex: mult 1 = 2 - 1
  EXPECT_TRUE(is_essential_path(s, kZero, leaf_center_leaf));
  EXPECT_EQ(mult_by_hand(s, kZero, VertexSet::of({0, 1, 2})), 1U);
  const std::vector<Vertex> not_a_path{1, 2};
  EXPECT_THROW(is_essential_path(s, kZero, not_a_path), std::invalid_argument);
  EXPECT_THROW(is_essential_path(s, RootClass(IntPoly({-2, 1})), leaf), std::domain_error);
}

TEST(Lemmas, CatalogIsConsistent) {
  EXPECT_EQ(lemma_catalog().size(), 15U);
  EXPECT_NE(find_lemma("stability"), nullptr);
  EXPECT_EQ(find_lemma("nope"), nullptr);
  RootContext ctx(star_graph(3), kZero);
  EXPECT_THROW(run_root_lemma("zero-root-deficiency", ctx), std::invalid_argument);
  EXPECT_THROW(run_graph_lemma("stability", star_graph(3)), std::invalid_argument);
}

TEST(Lemmas, StarStability) {
  RootContext ctx(star_graph(3), kZero);
  const auto r = verify_stability(ctx);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.instances, 3U);
}

TEST(Lemmas, FiveCycleGallai) {
  RootContext ctx(cycle_graph(5), RootClass(IntPoly({5, 0, -5, 0, 1})));
  const auto r = verify_gallai(ctx);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.instances, 1U);
}

TEST(Lemmas, NoSpecialVertexMeansVacuousStability) {
  // mu(K4) = x^4 - 6x^2 + 3 is irreducible and K4 is vertex-transitive
  RootContext ctx(complete_graph(4), RootClass(IntPoly({3, 0, -6, 0, 1})));
  const auto r = verify_stability(ctx);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.instances, 0U);
}

TEST(Lemmas, NonRootIsSkippedUnlessExploratory) {
  const RootClass two(IntPoly({-2, 0, 1}));
  RootContext plain(path_graph(3), RootClass(IntPoly({-1, 1})));
  EXPECT_EQ(run_root_lemma("interlacing", plain).verdict, Verdict::Skipped);
  VerifyOptions opts;
  opts.exploratory = true;
  RootContext explore(path_graph(3), RootClass(IntPoly({-1, 1})), opts);
  const auto r = run_root_lemma("interlacing", explore);
  EXPECT_NE(r.verdict, Verdict::Skipped);
  EXPECT_TRUE(r.exploratory);
  EXPECT_FALSE(r.failed());
  RootContext real(path_graph(3), two, opts);
  EXPECT_FALSE(run_root_lemma("stability", real).exploratory);
  EXPECT_TRUE(run_root_lemma("special-set-stability", real).exploratory);
}

TEST(Lemmas, AllHoldOnSmallCorpus) {
  std::size_t pairs = 0, both_essential_hyp = 0;
  for (const auto& g : corpus(6)) {
    for (const auto& info : lemma_catalog()) {
      if (info.scope != LemmaScope::PerGraph) continue;
      const auto r = run_graph_lemma(info.id, g);
      EXPECT_NE(r.verdict, Verdict::Violated) << info.id << " " << to_graph6(g) << " " << r.to_json().dump();
    }
    MuTable table;
    const auto support = root_support(g);
    for (const auto& f : support.factors()) {
      ++pairs;
      RootContext ctx(g, f.root, {}, &table);
      for (const auto& info : lemma_catalog()) {
        if (info.scope != LemmaScope::PerRoot || info.exploratory_only) continue;
        const auto r = run_root_lemma(info.id, ctx);
        EXPECT_EQ(r.verdict, Verdict::Holds) << r.to_json().dump();
        if (info.id == "edge-addition") {
          auto it = r.counters.find("both-essential-hypothesis-holds");
          if (it != r.counters.end()) both_essential_hyp += it->second;
        }
      }
    }
  }
  EXPECT_GT(pairs, 208U);
  EXPECT_GT(both_essential_hyp, 0U);
}

TEST(Lemmas, FaultInjectionIsCaught) {
  VerifyOptions opts;
  // claim the root vanishes whenever vertex 0 is deleted
  opts.fault = [](const Graph&, VertexSet removed, std::size_t m) { return removed.contains(0) ? std::size_t{0} : m; };
  RootContext ctx(star_graph(3), kZero, opts);
  const auto r = run_root_lemma("interlacing", ctx);
  EXPECT_EQ(r.verdict, Verdict::Violated);
  ASSERT_EQ(r.witnesses.size(), 1U);
  EXPECT_EQ(r.witnesses[0]["kind"], "vertex");
  EXPECT_EQ(r.witnesses[0]["vertex"], 0);
  EXPECT_EQ(r.witnesses[0]["mult_G_minus_u"], 0);
  EXPECT_TRUE(r.failed());
  const auto z = verify_zero_root_missed_vertices(star_graph(3), opts);
  EXPECT_EQ(z.verdict, Verdict::Violated);
}

TEST(Lemmas, ReportJsonShape) {
  RootContext ctx(star_graph(3), kZero);
  const auto j = run_root_lemma("stability", ctx).to_json();
  EXPECT_EQ(j["lemma"], "stability");
  EXPECT_EQ(j["graph6"], to_graph6(star_graph(3)));
  EXPECT_EQ(j["root_coeffs"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["verdict"], "holds");
  EXPECT_TRUE(j["witnesses"].is_array());
}

TEST(Lemmas, AllEssentialDisconnectedGraphCountsComponents) {
  // two isolated vertices: both 0-essential, mult(0) = 2
  RootContext ctx(empty_graph(2), kZero);
  const auto r = verify_gallai(ctx);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.counters.at("disconnected"), 1U);
  EXPECT_EQ(r.counters.at("mult-not-one"), 1U);
  RootContext c5(cycle_graph(5), RootClass(IntPoly({5, 0, -5, 0, 1})));
  EXPECT_EQ(verify_gallai(c5).counters.at("connected"), 1U);
}

TEST(Lemmas, DisconnectedVertexTransitiveGraphHasRepeatedRoots) {
  const Graph two_edges = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_TRUE(is_vertex_transitive(two_edges));
  EXPECT_EQ(root_support(two_edges).str(), "(x - 1)^2 (x + 1)^2");
  const auto r = verify_vertex_transitive_simple_roots(two_edges);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.counters.at("disconnected"), 1U);
  EXPECT_EQ(verify_vertex_transitive_simple_roots(path_graph(3)).verdict, Verdict::Skipped);
  EXPECT_EQ(verify_vertex_transitive_simple_roots(petersen_graph()).verdict, Verdict::Holds);
}
