#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matchroots/campaign.hpp"
#include "matchroots/families.hpp"
#include "matchroots/match_poly.hpp"
#include "matchroots/structure.hpp"

using namespace matchroots;

namespace {

constexpr int kClean = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string set_str(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph read_graph(const std::string& text) {
  try {
    return parse_graph_input(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse graph '") + text + "': " + e.what());
  }
}

std::vector<RootClass> read_roots(const std::string& selector, const Graph& g) {
  try {
    return parse_root_selector(selector, g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string poly_line(const IntPoly& mu) {
  const std::string plain = mu.str();
  const std::string factored = factor(mu).str();
  return factored == plain ? plain : plain + " = " + factored;
}

// PATH for a single root; PATH with ".k" before the extension for several.
std::string dot_path(const std::string& base, std::size_t k, std::size_t count) {
  if (count == 1) return base;
  std::filesystem::path p(base);
  const std::string ext = p.extension().string();
  p.replace_extension();
  return p.string() + "." + std::to_string(k) + ext;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_poly(const std::string& input) {
  const Graph g = read_graph(input);
  const IntPoly mu = matching_polynomial(g);
  std::cout << poly_line(mu) << "\n";
  std::cout << "deficiency: " << deficiency(g) << "\n";
  std::cout << "matching number: " << matching_number(g) << "\n";
  return kClean;
}

int cmd_classify(const std::string& input, const std::string& selector, const std::string& dot) {
  const Graph g = read_graph(input);
  const auto roots = read_roots(selector, g);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    MultiplicityOracle oracle(roots[k]);
    const SignTable t = classify(oracle, g);
    if (k > 0) std::cout << "\n";
    std::cout << "root " << roots[k].minpoly().str() << ": mult " << t.base_mult << "\n";
    for (auto v : g.vertices()) {
      std::cout << "  vertex " << v << ": " << to_string(t.signs[v]) << (t.special.contains(v) ? " special" : "") << "\n";
    }
    std::cout << "essential: " << set_str(t.essential) << "\n";
    std::cout << "neutral: " << set_str(t.neutral) << "\n";
    std::cout << "positive: " << set_str(t.positive) << "\n";
    std::cout << "special: " << set_str(t.special) << "\n";
    if (!dot.empty()) write_file(dot_path(dot, k, roots.size()), to_dot(g, t));
  }
  return kClean;
}

int cmd_decompose(const std::string& input, const std::string& selector, const std::string& dot) {
  const Graph g = read_graph(input);
  const auto roots = read_roots(selector, g);
  int status = kClean;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    MultiplicityOracle oracle(roots[k]);
    const SignTable t = classify(oracle, g);
    const Decomposition d = decomposition(t);
    if (k > 0) std::cout << "\n";
    std::cout << "root " << roots[k].minpoly().str() << ": mult " << t.base_mult << "\n";
    std::cout << "D: " << set_str(d.D) << "\n";
    std::cout << "A: " << set_str(d.A) << "\n";
    std::cout << "C: " << set_str(d.C) << "\n";
    const std::size_t c = connected_components(g, d.D).size();
    std::cout << "components of D: " << c << "\n";
    if (t.base_mult == 0) {
      std::cout << "identity: skipped (not a root of mu(G))\n";
    } else {
      const long rhs = static_cast<long>(c) - static_cast<long>(d.A.size());
      const bool ok = rhs == static_cast<long>(t.base_mult);
      std::cout << "identity: mult = c(D) - |A|: " << t.base_mult << " = " << c << " - " << d.A.size() << (ok ? " ok" : " FAILED") << "\n";
      if (!ok) status = kViolations;
    }
    if (!dot.empty()) write_file(dot_path(dot, k, roots.size()), to_dot(g, t));
  }
  return status;
}

void print_summary(std::ostream& out, const CampaignSummary& s) {
  out << "graphs: " << s.graphs << ", root pairs: " << s.root_pairs;
  if (s.exploratory_pairs) out << ", exploratory pairs: " << s.exploratory_pairs;
  out << "\n";
  for (const auto& [id, t] : s.per_lemma) {
    out << "  " << id << ": " << t.holds << " hold, " << t.violated << " violated";
    if (t.exploratory) out << ", " << t.exploratory << " exploratory (" << t.exploratory_violated << " violated)";
    out << " (" << t.instances << " instances)\n";
  }
  out << "violations: " << s.violations.size() << "\n";
  out << "wall time: " << s.wall_seconds << " s\n";
}

int cmd_verify(CampaignConfig config, const std::string& out_path, bool self_test_fault) {
  if (self_test_fault) {
    config.fault = [](const Graph&, VertexSet removed, std::size_t m) { return removed == VertexSet::of({0}) ? m + 2 : m; };
  }
  std::vector<Graph> corpus;
  try {
    select_lemmas(config.lemmas);
    corpus = load_corpus(config);
  } catch (const CampaignError& e) {
    throw UsageError(e.what());
  }
  CampaignSummary s;
  if (out_path.empty()) {
    s = run_campaign(config, corpus, &std::cout);
    print_summary(std::cerr, s);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    s = run_campaign(config, corpus, &out);
    print_summary(std::cout, s);
  }
  return s.clean() ? kClean : kViolations;
}

int cmd_fixtures(const std::string& out_path) {
  std::ostringstream text;
  for (const auto& f : fixture_graphs()) text << to_graph6(f.graph) << "\n";
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    write_file(out_path, text.str());
  }
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching polynomial roots: signs, special vertices and per-root Gallai-Edmonds decompositions"};
  app.require_subcommand(1);

  std::string graph_input, selector = "all", dot, out_path;

  auto* poly = app.add_subcommand("poly", "print mu(G,x), its factorization, deficiency and matching number");
  poly->add_option("graph", graph_input, "graph6 string or edge list \"n; u-v, ...\"")->required();

  auto* classify_cmd = app.add_subcommand("classify", "print every vertex's sign and the special set for the selected roots");
  classify_cmd->add_option("graph", graph_input, "graph6 string or edge list \"n; u-v, ...\"")->required();
  classify_cmd->add_option("--root", selector, "all | #k | poly:c0,c1,...")->capture_default_str();
  classify_cmd->add_option("--dot", dot, "write a colored DOT file");

  auto* decompose_cmd = app.add_subcommand("decompose", "print the D/A/C partition and check mult = c(D) - |A|");
  decompose_cmd->add_option("graph", graph_input, "graph6 string or edge list \"n; u-v, ...\"")->required();
  decompose_cmd->add_option("--root", selector, "all | #k | poly:c0,c1,...")->capture_default_str();
  decompose_cmd->add_option("--dot", dot, "write a colored DOT file");

  CampaignConfig config;
  std::string lemma_list, corpus_path;
  bool self_test_fault = false;
  auto* verify = app.add_subcommand("verify", "check every selected lemma over a corpus and write JSON-lines reports");
  verify->add_option("--max-n", config.max_n, "generated corpus: all graphs on 1..N vertices (N <= 7)")->capture_default_str();
  verify->add_option("--corpus", corpus_path, "graph6 file to use instead of the generated corpus (n <= 12)");
  verify->add_option("--lemmas", lemma_list, "comma-separated lemma ids (default: all)");
  verify->add_option("--path-cap", config.path_cap, "longest path, in vertices, for path checks")->capture_default_str();
  verify->add_flag("--exploratory", config.exploratory, "also run lemmas at non-roots and the exploratory measurements");
  verify->add_option("--jobs", config.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "report file (default: stdout, summary on stderr)");
  verify->add_flag("--self-test-fault", self_test_fault, "corrupt the multiplicity oracle (harness self-test)")->group("");

  auto* fixtures = app.add_subcommand("fixtures", "print the built-in vertex-transitive fixture graphs as graph6");
  fixtures->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kUsage;
  }

  try {
    if (*poly) return cmd_poly(graph_input);
    if (*classify_cmd) return cmd_classify(graph_input, selector, dot);
    if (*decompose_cmd) return cmd_decompose(graph_input, selector, dot);
    if (*verify) {
      if (!corpus_path.empty()) config.corpus_path = corpus_path;
      if (!lemma_list.empty()) {
        std::stringstream ss(lemma_list);
        std::string id;
        while (std::getline(ss, id, ',')) {
          if (!id.empty()) config.lemmas.push_back(id);
        }
      }
      return cmd_verify(config, out_path, self_test_fault);
    }
    if (*fixtures) return cmd_fixtures(out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InterlacingViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolations;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
