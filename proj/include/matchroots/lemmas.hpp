#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matchroots/factor.hpp"
#include "matchroots/graph.hpp"
#include "matchroots/structure.hpp"

namespace matchroots {

enum class Verdict { Holds, Violated, Skipped };
std::string_view to_string(Verdict v);

/// Outcome of checking one lemma on one graph (and one root for per-root
/// lemmas). Every instance is checked; only the first violation is kept as
/// a witness, with enough values to replay it.
struct LemmaReport {
  std::string lemma;
  std::string graph6;
  std::optional<RootClass> root;
  Verdict verdict = Verdict::Holds;
  /// Run outside the lemma's hypotheses; never counts as a failure.
  bool exploratory = false;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<nlohmann::json> witnesses;
  std::map<std::string, std::size_t> counters;

  bool failed() const { return verdict == Verdict::Violated && !exploratory; }
  /// {lemma, graph6, root_coeffs, verdict, witnesses, instances, violations,
  /// counters, exploratory}
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /// Longest path, in vertices, for the path-based checks.
  std::size_t path_cap = 4;
  /// Also run per-root lemmas when theta is not a root of mu(G), and run the
  /// exploratory-only measurements.
  bool exploratory = false;
  /// Test-only corruption of every multiplicity the verifiers see.
  MultiplicityFault fault;
};

enum class LemmaScope { PerRoot, PerGraph };

struct LemmaInfo {
  std::string_view id;
  LemmaScope scope;
  /// Measured under VerifyOptions::exploratory only.
  bool exploratory_only;
  std::string_view summary;
};

/// All lemmas in their fixed report order.
const std::vector<LemmaInfo>& lemma_catalog();
const LemmaInfo* find_lemma(std::string_view id);

/// Shared state for running per-root lemmas on one (graph, root) pair.
class RootContext {
 public:
  RootContext(const Graph& g, RootClass root, VerifyOptions options = {}, MuTable* shared = nullptr);

  const Graph& graph() const { return g_; }
  const RootClass& root() const { return oracle_.root(); }
  const VerifyOptions& options() const { return options_; }
  MultiplicityOracle& oracle() { return oracle_; }
  std::size_t base_mult() { return oracle_.mult(g_); }
  /// Sign table of G; nullopt if some vertex breaks interlacing.
  const std::optional<SignTable>& table();

 private:
  Graph g_;
  VerifyOptions options_;
  MultiplicityOracle oracle_;
  bool classified_ = false;
  std::optional<SignTable> table_;
};

// Per-root verifiers. Each checks every instance regardless of whether
// theta is a root; gating on mult >= 1 happens in run_root_lemma.
LemmaReport verify_interlacing(RootContext& ctx);
LemmaReport verify_essential_exists(RootContext& ctx);
LemmaReport verify_neutral_essential_nonadjacent(RootContext& ctx);
LemmaReport verify_essential_path_endpoints(RootContext& ctx);
LemmaReport verify_deletion_transitions(RootContext& ctx);
LemmaReport verify_edge_addition(RootContext& ctx);
LemmaReport verify_edge_deletion(RootContext& ctx);
LemmaReport verify_special_edge_deletion(RootContext& ctx);
LemmaReport verify_stability(RootContext& ctx);
LemmaReport verify_gallai(RootContext& ctx);
LemmaReport verify_count_identity(RootContext& ctx);
LemmaReport measure_special_set_stability(RootContext& ctx);

// Graph-level verifiers.
LemmaReport verify_vertex_transitive_simple_roots(const Graph& g, const VerifyOptions& options = {});
LemmaReport verify_zero_root_deficiency(const Graph& g, const VerifyOptions& options = {});
LemmaReport verify_zero_root_missed_vertices(const Graph& g, const VerifyOptions& options = {});

/// Runs a per-root lemma by id. When theta is not a root of mu(G) the
/// report is Skipped unless options.exploratory, in which case it runs and is
/// flagged exploratory. Exploratory-only lemmas are Skipped unless
/// options.exploratory. Throws std::invalid_argument for an unknown id.
LemmaReport run_root_lemma(std::string_view id, RootContext& ctx);
LemmaReport run_graph_lemma(std::string_view id, const Graph& g, const VerifyOptions& options = {});

}  // namespace matchroots
