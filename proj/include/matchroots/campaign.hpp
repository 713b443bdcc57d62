#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matchroots/factor.hpp"
#include "matchroots/graph.hpp"
#include "matchroots/lemmas.hpp"
#include "matchroots/structure.hpp"

namespace matchroots {

inline constexpr std::size_t kGeneratedCorpusLimit = 7;
inline constexpr std::size_t kIngestedCorpusLimit = 12;

/// Bad configuration or unreadable corpus.
class CampaignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CampaignConfig {
  /// Generated corpus: every isomorphism class on 1..max_n vertices.
  std::size_t max_n = 5;
  /// graph6 file, one graph per line; replaces the generated corpus.
  std::optional<std::string> corpus_path;
  /// Lemma ids; empty selects every lemma.
  std::vector<std::string> lemmas;
  std::size_t path_cap = 4;
  bool exploratory = false;
  std::size_t jobs = 1;
  /// Test-only: corrupts every multiplicity the verifiers see.
  MultiplicityFault fault;
};

struct LemmaTally {
  std::size_t reports = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t exploratory = 0;
  /// Exploratory reports that came out violated (measured, not failures).
  std::size_t exploratory_violated = 0;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> counters;
};

struct CampaignSummary {
  std::size_t graphs = 0;
  /// (graph, root) pairs with theta a root of mu(G).
  std::size_t root_pairs = 0;
  /// Extra (graph, theta) pairs with mult 0 examined under --exploratory.
  std::size_t exploratory_pairs = 0;
  std::map<std::string, LemmaTally> per_lemma;
  /// Non-exploratory violated reports, in report order.
  std::vector<LemmaReport> violations;
  double wall_seconds = 0;

  bool clean() const { return violations.empty(); }
  /// Wall time is left out so that summaries compare byte for byte.
  nlohmann::json to_json() const;
};

/// Generated isomorphism classes, ordered by n, then edge count, then
/// canonical form. Throws CampaignError above kGeneratedCorpusLimit.
std::vector<Graph> generated_corpus(std::size_t max_n);

/// graph6 lines; blank lines and lines starting with '#' are skipped.
/// Throws CampaignError naming the line on a parse error or a graph above
/// kIngestedCorpusLimit vertices.
std::vector<Graph> read_graph6_corpus(std::istream& in);
std::vector<Graph> load_corpus(const CampaignConfig& config);

/// Resolves config.lemmas against the catalog, in catalog order. Throws
/// CampaignError for an unknown id.
std::vector<const LemmaInfo*> select_lemmas(const std::vector<std::string>& ids);

/// Roots of mu(G \ u) for some u that are not roots of mu(G), sorted.
std::vector<RootClass> exploratory_roots(const Graph& g);

/// All reports for one graph, skipped ones dropped: graph-level lemmas
/// first, then each root of mu(G) in canonical order, then (exploratory)
/// the extra roots; lemmas in catalog order within each.
std::vector<LemmaReport> verify_graph(const Graph& g, const CampaignConfig& config, const std::vector<const LemmaInfo*>& lemmas);

/// Runs the campaign over `corpus` with config.jobs worker threads and
/// streams one JSON line per report to `reports` (if given) in corpus order,
/// followed by {"summary": ...}. Output is identical for any job count.
CampaignSummary run_campaign(const CampaignConfig& config, const std::vector<Graph>& corpus, std::ostream* reports);
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream* reports);

/// Root selector: "all" | "#k" (0-based index into root_support(G)) |
/// "poly:c0,c1,...,cd" (ascending coefficients of an irreducible
/// polynomial, normalized to positive leading coefficient). Throws
/// std::invalid_argument with a message on bad syntax, an index out of range
/// or a reducible polynomial.
std::vector<RootClass> parse_root_selector(std::string_view selector, const Graph& g);

/// Undirected DOT graph with one node statement per vertex, colored by
/// sign; special vertices get their own color.
std::string to_dot(const Graph& g, const SignTable& table);

}  // namespace matchroots
