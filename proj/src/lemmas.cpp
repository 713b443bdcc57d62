#include "matchroots/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchroots/canonical.hpp"
#include "matchroots/match_poly.hpp"

namespace matchroots {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Violated:
      return "violated";
    case Verdict::Skipped:
      return "skipped";
  }
  return "?";
}

namespace {

json coeffs_json(const IntPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) {
      out.push_back(c.get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

json set_json(VertexSet s) { return s.to_vector(); }

std::string letter(VertexSign s) { return std::string(1, sign_letter(s)); }

class Builder {
 public:
  Builder(std::string_view id, const Graph& g, std::optional<RootClass> root) {
    r_.lemma = std::string(id);
    r_.graph6 = to_graph6(g);
    r_.root = std::move(root);
  }
  Builder(std::string_view id, RootContext& ctx) : Builder(id, ctx.graph(), ctx.root()) {}

  template <class Witness>
  void check(bool ok, Witness&& witness) {
    ++r_.instances;
    if (ok) return;
    ++r_.violations;
    r_.verdict = Verdict::Violated;
    if (r_.witnesses.empty()) r_.witnesses.push_back(witness());
  }
  void count(const std::string& key, std::size_t by = 1) { r_.counters[key] += by; }
  LemmaReport done() { return std::move(r_); }

 private:
  LemmaReport r_;
};

// Signs could not be assigned because some deletion moved the multiplicity
// by more than one. Reported as a violation of the lemma being checked.
LemmaReport broken_classification(Builder& b, const Graph& g, VertexSet removed, MultiplicityOracle& oracle) {
  for (auto u : g.vertices() - removed) {
    if (!oracle.try_sign(g, u, removed)) {
      VertexSet more = removed;
      more.insert(u);
      b.check(false, [&] {
        return json{{"kind", "interlacing-failure"},
                    {"graph6", to_graph6(g)},
                    {"removed", set_json(removed)},
                    {"vertex", u},
                    {"mult_before", oracle.mult(g, removed)},
                    {"mult_after", oracle.mult(g, more)}};
      });
      break;
    }
  }
  return b.done();
}

bool allowed_transition(VertexSign deleted, VertexSign before, VertexSign after) {
  using S = VertexSign;
  switch (deleted) {
    case S::Positive:
      if (before == S::Essential) return after == S::Essential;
      if (before == S::Positive) return after == S::Essential || after == S::Positive;
      return after == S::Essential || after == S::Neutral;
    case S::Neutral:
      if (before == S::Essential) return after == S::Essential;
      return after == S::Positive || after == S::Neutral;
    case S::Essential:
      if (before == S::Essential) return true;
      return after == before;
  }
  return false;
}

}  // namespace

json LemmaReport::to_json() const {
  json j;
  j["lemma"] = lemma;
  j["graph6"] = graph6;
  j["root_coeffs"] = root ? coeffs_json(root->minpoly()) : json::array();
  j["verdict"] = std::string(to_string(verdict));
  j["witnesses"] = witnesses;
  j["instances"] = instances;
  j["violations"] = violations;
  j["counters"] = counters;
  j["exploratory"] = exploratory;
  return j;
}

const std::vector<LemmaInfo>& lemma_catalog() {
  static const std::vector<LemmaInfo> catalog{
      {"interlacing", LemmaScope::PerRoot, false, "one-vertex deletion moves mult by at most 1; path deletion lowers it by at most 1"},
      {"essential-exists", LemmaScope::PerRoot, false, "a root has at least one essential vertex"},
      {"neutral-essential-nonadjacent", LemmaScope::PerRoot, false, "no edge joins a neutral vertex to an essential one"},
      {"essential-path-endpoints", LemmaScope::PerRoot, false, "both ends of an essential path are essential"},
      {"deletion-transitions", LemmaScope::PerRoot, false, "sign changes after deleting a vertex stay inside the allowed tables"},
      {"edge-addition", LemmaScope::PerRoot, false, "adding an edge at a positive / neutral-essential / essential-essential pair"},
      {"edge-deletion", LemmaScope::PerRoot, false, "deleting a special-essential or positive-neutral edge"},
      {"special-edge-deletion", LemmaScope::PerRoot, false, "deleting an edge at a special vertex keeps it special"},
      {"stability", LemmaScope::PerRoot, false, "deleting a special vertex preserves every other sign"},
      {"gallai", LemmaScope::PerRoot, false, "all vertices essential implies multiplicity 1 per component"},
      {"count-identity", LemmaScope::PerRoot, false, "mult = components(D) - |A|, D-components primitive, C-components root-free"},
      {"special-set-stability", LemmaScope::PerRoot, true, "special set of G - u equals special set of G minus u (measured)"},
      {"vertex-transitive-simple-roots", LemmaScope::PerGraph, false, "connected vertex-transitive graphs have square-free matching polynomials"},
      {"zero-root-deficiency", LemmaScope::PerGraph, false, "multiplicity of 0 equals the deficiency"},
      {"zero-root-missed-vertices", LemmaScope::PerGraph, false, "0-essential vertices are those missed by some maximum matching; none are 0-neutral"},
  };
  return catalog;
}

const LemmaInfo* find_lemma(std::string_view id) {
  for (const auto& info : lemma_catalog()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

RootContext::RootContext(const Graph& g, RootClass root, VerifyOptions options, MuTable* shared)
    : g_(g), options_(std::move(options)), oracle_(std::move(root), shared) {
  if (options_.fault) oracle_.set_fault(options_.fault);
}

const std::optional<SignTable>& RootContext::table() {
  if (!classified_) {
    table_ = try_classify(oracle_, g_);
    classified_ = true;
  }
  return table_;
}

LemmaReport verify_interlacing(RootContext& ctx) {
  Builder b("interlacing", ctx);
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  const long k = static_cast<long>(o.mult(g));
  for (auto u : g.vertices()) {
    const long m = static_cast<long>(o.mult(g, VertexSet::of({u})));
    b.check(std::abs(m - k) <= 1, [&] { return json{{"kind", "vertex"}, {"vertex", u}, {"mult_G", k}, {"mult_G_minus_u", m}}; });
  }
  std::size_t paths = 0;
  for_each_path(g, ctx.options().path_cap, [&](std::span<const Vertex> p) {
    if (p.size() < 2) return;
    ++paths;
    VertexSet removed;
    for (auto v : p) removed.insert(v);
    const long m = static_cast<long>(o.mult(g, removed));
    b.check(m >= k - 1, [&] {
      return json{{"kind", "path"}, {"path", std::vector<Vertex>(p.begin(), p.end())}, {"mult_G", k}, {"mult_G_minus_path", m}};
    });
  });
  b.count("paths", paths);
  return b.done();
}

LemmaReport verify_essential_exists(RootContext& ctx) {
  Builder b("essential-exists", ctx);
  const auto& t = ctx.table();
  if (!t) return broken_classification(b, ctx.graph(), VertexSet(), ctx.oracle());
  b.check(!t->essential.empty(), [&] { return json{{"mult_G", t->base_mult}, {"essential", json::array()}}; });
  return b.done();
}

LemmaReport verify_neutral_essential_nonadjacent(RootContext& ctx) {
  Builder b("neutral-essential-nonadjacent", ctx);
  const auto& t = ctx.table();
  if (!t) return broken_classification(b, ctx.graph(), VertexSet(), ctx.oracle());
  for (const auto& e : ctx.graph().edges()) {
    const VertexSign su = t->signs[e.u], sv = t->signs[e.v];
    const bool bad = (su == VertexSign::Neutral && sv == VertexSign::Essential) || (su == VertexSign::Essential && sv == VertexSign::Neutral);
    b.check(!bad, [&] { return json{{"edge", {e.u, e.v}}, {"sign_u", letter(su)}, {"sign_v", letter(sv)}, {"mult_G", t->base_mult}}; });
  }
  return b.done();
}

LemmaReport verify_essential_path_endpoints(RootContext& ctx) {
  Builder b("essential-path-endpoints", ctx);
  const auto& t = ctx.table();
  if (!t) return broken_classification(b, ctx.graph(), VertexSet(), ctx.oracle());
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  const std::size_t k = t->base_mult;
  for_each_path(g, ctx.options().path_cap, [&](std::span<const Vertex> p) {
    if (p.size() < 2) return;
    VertexSet removed;
    for (auto v : p) removed.insert(v);
    const std::size_t m = o.mult(g, removed);
    if (m + 1 != k) return;
    b.count("essential-paths");
    const Vertex a = p.front(), z = p.back();
    b.check(t->essential.contains(a) && t->essential.contains(z), [&] {
      return json{{"path", std::vector<Vertex>(p.begin(), p.end())},
                  {"mult_G", k},
                  {"mult_G_minus_path", m},
                  {"sign_first", letter(t->signs[a])},
                  {"sign_last", letter(t->signs[z])}};
    });
  });
  return b.done();
}

LemmaReport verify_deletion_transitions(RootContext& ctx) {
  Builder b("deletion-transitions", ctx);
  const auto& t = ctx.table();
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  if (!t) return broken_classification(b, g, VertexSet(), o);
  for (auto u : g.vertices()) {
    const VertexSet removed = VertexSet::of({u});
    const auto tu = try_classify(o, g, removed);
    if (!tu) return broken_classification(b, g, removed, o);
    for (auto v : g.vertices() - removed) {
      const VertexSign su = t->signs[u], before = t->signs[v], after = tu->signs[v];
      b.count(letter(su) + ": " + letter(before) + "->" + letter(after));
      b.check(allowed_transition(su, before, after), [&] {
        return json{{"deleted", u},
                    {"vertex", v},
                    {"sign_deleted", letter(su)},
                    {"sign_in_G", letter(before)},
                    {"sign_in_G_minus_u", letter(after)},
                    {"mult_G", t->base_mult},
                    {"mult_G_minus_u", tu->base_mult},
                    {"mult_G_minus_uv", o.mult(g, VertexSet::of({u, v}))}};
      });
    }
  }
  return b.done();
}

LemmaReport verify_edge_addition(RootContext& ctx) {
  Builder b("edge-addition", ctx);
  const auto& t = ctx.table();
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  if (!t) return broken_classification(b, g, VertexSet(), o);
  const std::size_t k = t->base_mult;
  using S = VertexSign;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const Graph h = add_edge(g, {u, v});
      std::optional<SignTable> th;
      bool th_done = false;
      auto table_h = [&]() -> const std::optional<SignTable>& {
        if (!th_done) {
          th = try_classify(o, h);
          th_done = true;
        }
        return th;
      };
      auto witness = [&](const char* kind) {
        json w{{"kind", kind}, {"u", u}, {"v", v}, {"sign_u", letter(t->signs[u])}, {"sign_v", letter(t->signs[v])}, {"mult_G", k}};
        if (const auto& x = table_h()) {
          w["mult_G_plus_uv"] = x->base_mult;
          w["sign_u_after"] = letter(x->signs[u]);
          w["sign_v_after"] = letter(x->signs[v]);
        }
        return w;
      };
      for (int flip = 0; flip < 2; ++flip) {
        const Vertex a = flip ? v : u, c = flip ? u : v;
        const S sa = t->signs[a], sc = t->signs[c];
        if (sa == S::Positive) {
          b.count("positive-endpoint");
          const auto& x = table_h();
          if (!x) return broken_classification(b, h, VertexSet(), o);
          b.check(x->base_mult == k && x->signs[a] == S::Positive && x->signs[c] == sc, [&] { return witness("positive-endpoint"); });
        } else if (sa == S::Neutral && sc == S::Essential) {
          b.count("neutral-essential");
          const auto& x = table_h();
          if (!x) return broken_classification(b, h, VertexSet(), o);
          b.check(x->base_mult + 1 == k && x->signs[a] == S::Positive && x->signs[c] == S::Neutral,
                  [&] { return witness("neutral-essential"); });
        }
      }
      if (t->signs[u] == S::Essential && t->signs[v] == S::Essential) {
        b.count("both-essential");
        const std::size_t m_uv = o.mult(g, VertexSet::of({u, v}));
        if (m_uv + 1 >= k) {
          b.count("both-essential-hypothesis-holds");
          const auto& x = table_h();
          if (!x) return broken_classification(b, h, VertexSet(), o);
          const bool drop = x->base_mult + 1 == k && x->signs[u] == S::Neutral && x->signs[v] == S::Neutral;
          const bool keep = x->base_mult == k && x->signs[u] == S::Essential && x->signs[v] == S::Essential;
          if (drop) b.count("both-essential-outcome-drop");
          if (keep) b.count("both-essential-outcome-keep");
          b.check(drop != keep, [&] {
            auto w = witness("both-essential");
            w["mult_G_minus_uv"] = m_uv;
            return w;
          });
        }
      }
    }
  }
  return b.done();
}

LemmaReport verify_edge_deletion(RootContext& ctx) {
  Builder b("edge-deletion", ctx);
  const auto& t = ctx.table();
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  if (!t) return broken_classification(b, g, VertexSet(), o);
  const std::size_t k = t->base_mult;
  using S = VertexSign;
  for (const auto& e : g.edges()) {
    const Graph h = delete_edge(g, e);
    std::optional<SignTable> th;
    bool th_done = false;
    auto table_h = [&]() -> const std::optional<SignTable>& {
      if (!th_done) {
        th = try_classify(o, h);
        th_done = true;
      }
      return th;
    };
    for (int flip = 0; flip < 2; ++flip) {
      const Vertex a = flip ? e.v : e.u, c = flip ? e.u : e.v;
      auto witness = [&](const char* kind) {
        json w{{"kind", kind}, {"u", a}, {"v", c}, {"sign_u", letter(t->signs[a])}, {"sign_v", letter(t->signs[c])}, {"mult_G", k}};
        if (const auto& x = table_h()) {
          w["mult_G_minus_uv_edge"] = x->base_mult;
          w["sign_u_after"] = letter(x->signs[a]);
          w["sign_v_after"] = letter(x->signs[c]);
        }
        return w;
      };
      if (t->special.contains(a) && t->signs[c] == S::Essential) {
        b.count("special-essential");
        const auto& x = table_h();
        if (!x) return broken_classification(b, h, VertexSet(), o);
        b.check(x->base_mult == k && x->signs[a] == S::Positive && x->signs[c] == S::Essential, [&] { return witness("special-essential"); });
      }
      if (t->signs[a] == S::Positive && t->signs[c] == S::Neutral) {
        b.count("positive-neutral");
        const auto& x = table_h();
        if (!x) return broken_classification(b, h, VertexSet(), o);
        const bool up = x->base_mult == k + 1 && x->signs[a] == S::Neutral && x->signs[c] == S::Essential;
        const bool same = x->base_mult == k && x->signs[a] == S::Positive && x->signs[c] == S::Neutral;
        if (up) b.count("positive-neutral-outcome-up");
        if (same) b.count("positive-neutral-outcome-same");
        b.check(up != same, [&] { return witness("positive-neutral"); });
      }
    }
  }
  return b.done();
}

LemmaReport verify_special_edge_deletion(RootContext& ctx) {
  Builder b("special-edge-deletion", ctx);
  const auto& t = ctx.table();
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  if (!t) return broken_classification(b, g, VertexSet(), o);
  const std::size_t k = t->base_mult;
  using S = VertexSign;
  for (auto u : t->special) {
    for (auto v : g.neighbors(u) & t->essential) {
      for (auto w : g.neighbors(u)) {
        if (w == v) continue;
        const S sw = t->signs[w];
        const char* kind = nullptr;
        Edge cut{};
        Vertex keep = 0;
        if (sw == S::Essential) {
          if (o.mult(g, VertexSet::of({v, u, w})) + 1 == k) {
            b.count("essential-path-vuw");
            continue;
          }
          kind = "two-essential-neighbors";
          cut = {std::min(u, v), std::max(u, v)};
          keep = w;
        } else {
          kind = sw == S::Neutral ? "neutral-neighbor" : "positive-neighbor";
          cut = {std::min(u, w), std::max(u, w)};
          keep = v;
        }
        b.count(kind);
        const Graph h = delete_edge(g, cut);
        const auto x = try_classify(o, h);
        if (!x) return broken_classification(b, h, VertexSet(), o);
        b.check(x->base_mult == k && x->special.contains(u) && x->signs[keep] == S::Essential, [&] {
          return json{{"kind", kind},
                      {"special", u},
                      {"essential_neighbor", v},
                      {"other_neighbor", w},
                      {"deleted_edge", {cut.u, cut.v}},
                      {"mult_G", k},
                      {"mult_after", x->base_mult},
                      {"special_after", x->special.contains(u)},
                      {"kept_vertex", keep},
                      {"kept_sign_after", letter(x->signs[keep])}};
        });
      }
    }
  }
  return b.done();
}

LemmaReport verify_stability(RootContext& ctx) {
  Builder b("stability", ctx);
  const auto& t = ctx.table();
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  if (!t) return broken_classification(b, g, VertexSet(), o);
  for (auto u : t->special) {
    const VertexSet removed = VertexSet::of({u});
    const auto tu = try_classify(o, g, removed);
    if (!tu) return broken_classification(b, g, removed, o);
    for (auto v : g.vertices() - removed) {
      b.check(t->signs[v] == tu->signs[v], [&] {
        return json{{"special", u},
                    {"vertex", v},
                    {"sign_in_G", letter(t->signs[v])},
                    {"sign_in_G_minus_u", letter(tu->signs[v])},
                    {"mult_G", t->base_mult},
                    {"mult_G_minus_u", tu->base_mult},
                    {"mult_G_minus_v", o.mult(g, VertexSet::of({v}))},
                    {"mult_G_minus_uv", o.mult(g, VertexSet::of({u, v}))}};
      });
    }
  }
  return b.done();
}

LemmaReport verify_gallai(RootContext& ctx) {
  Builder b("gallai", ctx);
  const auto& t = ctx.table();
  if (!t) return broken_classification(b, ctx.graph(), VertexSet(), ctx.oracle());
  const Graph& g = ctx.graph();
  if (g.order() > 0 && t->essential == t->present) {
    // Each component is itself all-essential, so the statement applies per
    // component and the multiplicities add up. For connected G this is
    // exactly mult = 1.
    const std::size_t c = connected_components(g).size();
    b.count(c == 1 ? "connected" : "disconnected");
    if (t->base_mult != 1) b.count("mult-not-one");
    b.check(t->base_mult == c, [&] { return json{{"mult_G", t->base_mult}, {"components", c}, {"essential", set_json(t->essential)}}; });
  }
  return b.done();
}

LemmaReport verify_count_identity(RootContext& ctx) {
  Builder b("count-identity", ctx);
  const auto& t = ctx.table();
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  if (!t) return broken_classification(b, g, VertexSet(), o);
  const Decomposition d = decomposition(*t);
  const auto d_parts = connected_components(g, d.D);
  const auto c_parts = connected_components(g, d.C);
  const long k = static_cast<long>(t->base_mult);
  const long predicted = static_cast<long>(d_parts.size()) - static_cast<long>(d.A.size());
  auto base = [&] {
    return json{{"D", set_json(d.D)}, {"A", set_json(d.A)}, {"C", set_json(d.C)}, {"mult_G", k}, {"components_D", d_parts.size()}};
  };
  b.check(k == predicted, [&] {
    auto w = base();
    w["kind"] = "count";
    return w;
  });
  for (auto part : d_parts) {
    const VertexSet removed = g.vertices() - part;
    const std::size_t m = o.mult(g, removed);
    bool primitive = true;
    for (auto v : part) {
      const auto s = o.try_sign(g, v, removed);
      primitive = primitive && s && *s == VertexSign::Essential;
    }
    b.check(m == 1 && primitive, [&] {
      auto w = base();
      w["kind"] = "D-component";
      w["component"] = set_json(part);
      w["mult_component"] = m;
      w["all_essential"] = primitive;
      return w;
    });
  }
  for (auto part : c_parts) {
    const std::size_t m = o.mult(g, g.vertices() - part);
    b.check(m == 0, [&] {
      auto w = base();
      w["kind"] = "C-component";
      w["component"] = set_json(part);
      w["mult_component"] = m;
      return w;
    });
  }
  return b.done();
}

LemmaReport measure_special_set_stability(RootContext& ctx) {
  Builder b("special-set-stability", ctx);
  const auto& t = ctx.table();
  const Graph& g = ctx.graph();
  auto& o = ctx.oracle();
  if (!t) return broken_classification(b, g, VertexSet(), o);
  for (auto u : t->special) {
    const VertexSet removed = VertexSet::of({u});
    const auto tu = try_classify(o, g, removed);
    if (!tu) return broken_classification(b, g, removed, o);
    VertexSet expected = t->special;
    expected.erase(u);
    if (tu->special == expected) b.count("stable");
    b.check(tu->special == expected, [&] {
      return json{{"special", u}, {"special_G", set_json(t->special)}, {"special_G_minus_u", set_json(tu->special)}};
    });
  }
  return b.done();
}

LemmaReport verify_vertex_transitive_simple_roots(const Graph& g, const VerifyOptions&) {
  Builder b("vertex-transitive-simple-roots", g, std::nullopt);
  if (g.order() > kAutomorphismLimit || !is_vertex_transitive(g)) {
    auto r = b.done();
    r.verdict = Verdict::Skipped;
    return r;
  }
  // A disconnected vertex-transitive graph is c copies of one connected
  // vertex-transitive graph, so every exponent is c.
  const std::size_t c = connected_components(g).size();
  b.count(c == 1 ? "connected" : "disconnected");
  const auto support = root_support(g);
  for (const auto& f : support.factors()) {
    b.check(f.exponent == c,
            [&] { return json{{"root_coeffs", coeffs_json(f.root.minpoly())}, {"exponent", f.exponent}, {"components", c}}; });
  }
  return b.done();
}

LemmaReport verify_zero_root_deficiency(const Graph& g, const VerifyOptions& options) {
  Builder b("zero-root-deficiency", g, RootClass::zero());
  MultiplicityOracle o(RootClass::zero());
  if (options.fault) o.set_fault(options.fault);
  const std::size_t m = o.mult(g);
  const std::size_t def = g.order() - 2 * brute_force_maximum_matchings(g).size;
  b.check(m == def, [&] { return json{{"mult_zero", m}, {"deficiency", def}}; });
  return b.done();
}

LemmaReport verify_zero_root_missed_vertices(const Graph& g, const VerifyOptions& options) {
  Builder b("zero-root-missed-vertices", g, RootClass::zero());
  MultiplicityOracle o(RootClass::zero());
  if (options.fault) o.set_fault(options.fault);
  const auto t = try_classify(o, g);
  if (!t) return broken_classification(b, g, VertexSet(), o);
  const VertexSet missed = brute_force_maximum_matchings(g).missed_by_some;
  b.check(t->essential == missed, [&] { return json{{"kind", "essential-vs-missed"}, {"essential", set_json(t->essential)}, {"missed", set_json(missed)}}; });
  b.check(t->neutral.empty(), [&] { return json{{"kind", "neutral"}, {"neutral", set_json(t->neutral)}}; });
  return b.done();
}

LemmaReport run_root_lemma(std::string_view id, RootContext& ctx) {
  const LemmaInfo* info = find_lemma(id);
  if (info == nullptr || info->scope != LemmaScope::PerRoot) throw std::invalid_argument("unknown per-root lemma: " + std::string(id));
  const bool is_root = ctx.base_mult() >= 1;
  if ((!is_root || info->exploratory_only) && !ctx.options().exploratory) {
    LemmaReport r;
    r.lemma = std::string(id);
    r.graph6 = to_graph6(ctx.graph());
    r.root = ctx.root();
    r.verdict = Verdict::Skipped;
    return r;
  }
  LemmaReport r;
  if (id == "interlacing") r = verify_interlacing(ctx);
  else if (id == "essential-exists") r = verify_essential_exists(ctx);
  else if (id == "neutral-essential-nonadjacent") r = verify_neutral_essential_nonadjacent(ctx);
  else if (id == "essential-path-endpoints") r = verify_essential_path_endpoints(ctx);
  else if (id == "deletion-transitions") r = verify_deletion_transitions(ctx);
  else if (id == "edge-addition") r = verify_edge_addition(ctx);
  else if (id == "edge-deletion") r = verify_edge_deletion(ctx);
  else if (id == "special-edge-deletion") r = verify_special_edge_deletion(ctx);
  else if (id == "stability") r = verify_stability(ctx);
  else if (id == "gallai") r = verify_gallai(ctx);
  else if (id == "count-identity") r = verify_count_identity(ctx);
  else r = measure_special_set_stability(ctx);
  r.exploratory = !is_root || info->exploratory_only;
  return r;
}

LemmaReport run_graph_lemma(std::string_view id, const Graph& g, const VerifyOptions& options) {
  if (id == "vertex-transitive-simple-roots") return verify_vertex_transitive_simple_roots(g, options);
  if (id == "zero-root-deficiency") return verify_zero_root_deficiency(g, options);
  if (id == "zero-root-missed-vertices") return verify_zero_root_missed_vertices(g, options);
  throw std::invalid_argument("unknown graph lemma: " + std::string(id));
}

}  // namespace matchroots
