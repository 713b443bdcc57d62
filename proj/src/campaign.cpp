#include "matchroots/campaign.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "matchroots/canonical.hpp"
#include "matchroots/match_poly.hpp"

namespace matchroots {

using nlohmann::json;

json CampaignSummary::to_json() const {
  json lemmas = json::object();
  for (const auto& [id, t] : per_lemma) {
    lemmas[id] = json{{"reports", t.reports},
                      {"holds", t.holds},
                      {"violated", t.violated},
                      {"exploratory", t.exploratory},
                      {"exploratory_violated", t.exploratory_violated},
                      {"instances", t.instances},
                      {"counters", t.counters}};
  }
  json bad = json::array();
  for (const auto& r : violations) {
    bad.push_back(json{{"lemma", r.lemma}, {"graph6", r.graph6}, {"root_coeffs", r.to_json()["root_coeffs"]}});
  }
  return json{{"graphs", graphs},
              {"root_pairs", root_pairs},
              {"exploratory_pairs", exploratory_pairs},
              {"lemmas", lemmas},
              {"violations", bad},
              {"clean", clean()}};
}

std::vector<Graph> generated_corpus(std::size_t max_n) {
  if (max_n > kGeneratedCorpusLimit) {
    throw CampaignError("--max-n " + std::to_string(max_n) + " exceeds the generated-corpus limit of " + std::to_string(kGeneratedCorpusLimit));
  }
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs_up_to_iso(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const std::exception& e) {
      throw CampaignError("corpus line " + std::to_string(lineno) + ": " + e.what());
    }
    if (g.order() > kIngestedCorpusLimit) {
      throw CampaignError("corpus line " + std::to_string(lineno) + ": " + std::to_string(g.order()) +
                          " vertices exceeds the ingested-corpus limit of " + std::to_string(kIngestedCorpusLimit));
    }
    out.push_back(g);
  }
  return out;
}

std::vector<Graph> load_corpus(const CampaignConfig& config) {
  if (!config.corpus_path) return generated_corpus(config.max_n);
  std::ifstream in(*config.corpus_path);
  if (!in) throw CampaignError("cannot open corpus file " + *config.corpus_path);
  return read_graph6_corpus(in);
}

std::vector<const LemmaInfo*> select_lemmas(const std::vector<std::string>& ids) {
  std::vector<const LemmaInfo*> out;
  if (ids.empty()) {
    for (const auto& info : lemma_catalog()) out.push_back(&info);
    return out;
  }
  std::set<std::string_view> wanted;
  for (const auto& id : ids) {
    if (find_lemma(id) == nullptr) throw CampaignError("unknown lemma: " + id);
    wanted.insert(id);
  }
  for (const auto& info : lemma_catalog()) {
    if (wanted.count(info.id)) out.push_back(&info);
  }
  return out;
}

std::vector<RootClass> exploratory_roots(const Graph& g) {
  const IntPoly mu = matching_polynomial(g);
  std::set<RootClass> roots;
  for (auto u : g.vertices()) {
    const auto sub = root_support(delete_vertex(g, u).graph);
    for (const auto& f : sub.factors()) {
      if (multiplicity(f.root, mu) == 0) roots.insert(f.root);
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<LemmaReport> verify_graph(const Graph& g, const CampaignConfig& config, const std::vector<const LemmaInfo*>& lemmas) {
  VerifyOptions options;
  options.path_cap = config.path_cap;
  options.exploratory = config.exploratory;
  options.fault = config.fault;

  std::vector<LemmaReport> out;
  auto keep = [&](LemmaReport r) {
    if (r.verdict != Verdict::Skipped) out.push_back(std::move(r));
  };
  for (const auto* info : lemmas) {
    if (info->scope == LemmaScope::PerGraph) keep(run_graph_lemma(info->id, g, options));
  }
  bool any_root_lemma = false;
  for (const auto* info : lemmas) any_root_lemma = any_root_lemma || info->scope == LemmaScope::PerRoot;
  if (!any_root_lemma) return out;

  MuTable table;
  auto per_root = [&](const RootClass& root) {
    RootContext ctx(g, root, options, &table);
    for (const auto* info : lemmas) {
      if (info->scope == LemmaScope::PerRoot) keep(run_root_lemma(info->id, ctx));
    }
  };
  const auto support = root_support(g);
  for (const auto& f : support.factors()) per_root(f.root);
  if (config.exploratory) {
    for (const auto& root : exploratory_roots(g)) per_root(root);
  }
  return out;
}

namespace {

struct GraphResult {
  std::vector<LemmaReport> reports;
  std::size_t roots = 0;
  std::size_t extra_roots = 0;
};

GraphResult evaluate(const Graph& g, const CampaignConfig& config, const std::vector<const LemmaInfo*>& lemmas) {
  GraphResult r;
  r.reports = verify_graph(g, config, lemmas);
  r.roots = root_support(g).factors().size();
  if (config.exploratory) r.extra_roots = exploratory_roots(g).size();
  return r;
}

void tally(CampaignSummary& s, const GraphResult& r) {
  ++s.graphs;
  s.root_pairs += r.roots;
  s.exploratory_pairs += r.extra_roots;
  for (const auto& rep : r.reports) {
    auto& t = s.per_lemma[rep.lemma];
    ++t.reports;
    t.instances += rep.instances;
    for (const auto& [k, v] : rep.counters) t.counters[k] += v;
    if (rep.exploratory) {
      ++t.exploratory;
      if (rep.verdict == Verdict::Violated) ++t.exploratory_violated;
    } else if (rep.verdict == Verdict::Violated) {
      ++t.violated;
      s.violations.push_back(rep);
    } else {
      ++t.holds;
    }
  }
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& config, const std::vector<Graph>& corpus, std::ostream* reports) {
  const auto start = std::chrono::steady_clock::now();
  const auto lemmas = select_lemmas(config.lemmas);
  if (config.path_cap < 1) throw CampaignError("--path-cap must be at least 1");
  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, std::max<std::size_t>(1, corpus.size())));

  std::vector<std::optional<GraphResult>> results(corpus.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      GraphResult r;
      try {
        r = evaluate(corpus[i], config, lemmas);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        next = corpus.size();
      }
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(r);
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);

  CampaignSummary summary;
  // Emit in corpus order as soon as each prefix is complete.
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    GraphResult r;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return results[i].has_value() || failure; });
      if (failure) break;
      r = std::move(*results[i]);
      results[i].reset();
    }
    tally(summary, r);
    if (reports) {
      for (const auto& rep : r.reports) *reports << rep.to_json().dump() << '\n';
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (reports) {
    *reports << json{{"summary", summary.to_json()}}.dump() << '\n';
    reports->flush();
  }
  return summary;
}

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream* reports) { return run_campaign(config, load_corpus(config), reports); }

std::vector<RootClass> parse_root_selector(std::string_view selector, const Graph& g) {
  const auto support = root_support(g);
  std::vector<RootClass> all;
  for (const auto& f : support.factors()) all.push_back(f.root);
  if (selector == "all") return all;
  if (!selector.empty() && selector[0] == '#') {
    const std::string digits(selector.substr(1));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("root selector '#k' needs a nonnegative integer, got '" + std::string(selector) + "'");
    }
    const std::size_t k = std::stoul(digits);
    if (k >= all.size()) {
      throw std::invalid_argument("root index " + digits + " out of range: mu(G) has " + std::to_string(all.size()) + " distinct root classes");
    }
    return {all[k]};
  }
  if (selector.substr(0, 5) == "poly:") {
    std::vector<std::string> parts;
    std::stringstream ss{std::string(selector.substr(5))};
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    IntPoly p;
    try {
      p = from_coeff_strings(parts);
    } catch (const std::exception& e) {
      throw std::invalid_argument("bad root polynomial '" + std::string(selector) + "': " + e.what());
    }
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("root polynomial must have degree at least 1");
    if (sgn(p.leading()) < 0) p = -p;
    if (p.content() != 1 || !is_irreducible(p)) {
      throw std::invalid_argument("root polynomial " + p.str() + " is not irreducible over the integers: " + factor(p).str());
    }
    return {RootClass(p)};
  }
  throw std::invalid_argument("root selector must be 'all', '#k' or 'poly:c0,c1,...', got '" + std::string(selector) + "'");
}

std::string to_dot(const Graph& g, const SignTable& table) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  label=\"mult(" << table.root.minpoly().str() << ") = " << table.base_mult << "\";\n";
  out << "  node [style=filled, fontname=\"Helvetica\"];\n";
  for (auto v : g.vertices()) {
    const VertexSign s = table.signs[v];
    std::string kind(to_string(s));
    std::string color = s == VertexSign::Essential ? "#e41a1c" : s == VertexSign::Neutral ? "#bdbdbd" : "#4daf4a";
    if (table.special.contains(v)) {
      kind = "special";
      color = "#ff7f00";
    }
    out << "  " << v << " [label=\"" << v << "\\n" << kind << "\", fillcolor=\"" << color << "\"];\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace matchroots
