#include "walkspec/explorer/analyze.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include "walkspec/graph_io.hpp"

namespace walkspec {

using json_io::Json;

std::size_t AnalysisReport::violations() const {
  std::size_t count = 0;
  for (const auto& rep : bounds) count += rep.verdict == Verdict::violated;
  for (const auto& s : sandwiches) count += !s.consistent;
  return count;
}

AnalysisReport analyze(const Graph& g, const ParameterGrid& grid, double tolerance) {
  AnalysisReport out;
  out.graph.n = g.order();
  out.graph.e = g.size();
  out.graph.min_degree = g.min_degree();
  out.graph.max_degree = g.max_degree();
  out.graph.connected = g.connected();
  out.graph.graph6 = emit_graph6(g);

  BoundContext ctx(g, tolerance);
  out.mu = ctx.mu();
  const Spectrum spectrum = eigen_decompose(g);
  out.eigenvalues = spectrum.eigenvalues;
  out.residual = spectrum.residual;
  out.clique = ctx.clique();
  out.regularity = ctx.regularity();

  Catalog cat = evaluate_all(ctx, grid.q, grid.r, grid.p);
  out.bounds = std::move(cat.reports);
  out.sandwiches = std::move(cat.sandwiches);
  for (const auto& rep : out.bounds) {
    if (rep.verdict != Verdict::equality) continue;
    out.equalities.push_back({rep.id, rep.label, rep.q, rep.r, rep.p, rep.k, rep.characterization, rep.explanation});
  }
  out.meta.tolerance = tolerance;
  out.meta.grid = grid;
  return out;
}

Json to_json(const AnalysisReport& report) {
  Json j;
  const auto& g = report.graph;
  j["graph"] = Json{{"n", g.n},
                    {"e", g.e},
                    {"min_degree", g.min_degree},
                    {"max_degree", g.max_degree},
                    {"connected", g.connected},
                    {"graph6", g.graph6}};
  j["spectrum"] = Json{{"mu_interval", json_io::interval(report.mu)},
                       {"eigenvalues", report.eigenvalues},
                       {"residual", report.residual}};
  j["clique"] = Json{{"omega", report.clique.omega}, {"witness", report.clique.witness}};
  j["regularity"] = json_io::profile(report.regularity);
  Json bounds = Json::array();
  for (const auto& rep : report.bounds) bounds.push_back(json_io::bound(rep));
  j["bounds"] = bounds;
  Json sandwiches = Json::array();
  for (const auto& s : report.sandwiches) sandwiches.push_back(json_io::sandwich(s));
  j["sandwiches"] = sandwiches;
  Json eq = Json::array();
  for (const auto& e : report.equalities) {
    eq.push_back(Json{{"id", std::string(to_string(e.id))},
                      {"label", e.label},
                      {"q", e.q},
                      {"r", e.r},
                      {"p", e.p},
                      {"k", e.k},
                      {"characterization", std::string(to_string(e.status))},
                      {"explanation", e.explanation}});
  }
  j["equalities"] = eq;
  const auto& m = report.meta;
  Json meta{{"tool", m.tool},
            {"version", m.version},
            {"tolerance", m.tolerance},
            {"grid", Json{{"q", m.grid.q}, {"r", m.grid.r}, {"p", m.grid.p}}},
            {"violations", report.violations()}};
  if (m.timestamp) meta["timestamp"] = *m.timestamp;
  j["meta"] = meta;
  return j;
}

AnalysisReport analysis_from_json(const Json& j) {
  AnalysisReport out;
  const Json& g = j.at("graph");
  out.graph.n = g.at("n").get<int>();
  out.graph.e = g.at("e").get<int>();
  out.graph.min_degree = g.at("min_degree").get<int>();
  out.graph.max_degree = g.at("max_degree").get<int>();
  out.graph.connected = g.at("connected").get<bool>();
  out.graph.graph6 = g.at("graph6").get<std::string>();
  const Json& s = j.at("spectrum");
  out.mu = json_io::interval_from(s.at("mu_interval"));
  out.eigenvalues = s.at("eigenvalues").get<std::vector<double>>();
  out.residual = s.at("residual").get<double>();
  out.clique.omega = j.at("clique").at("omega").get<int>();
  out.clique.witness = j.at("clique").at("witness").get<std::vector<int>>();
  out.regularity = json_io::profile_from(j.at("regularity"));
  for (const auto& b : j.at("bounds")) out.bounds.push_back(json_io::bound_from(b));
  for (const auto& sw : j.at("sandwiches")) out.sandwiches.push_back(json_io::sandwich_from(sw));
  for (const auto& e : j.at("equalities")) {
    EqualityRecord rec;
    rec.id = parse_bound_id(e.at("id").get<std::string>());
    rec.label = e.at("label").get<std::string>();
    rec.q = e.at("q").get<int>();
    rec.r = e.at("r").get<int>();
    rec.p = e.at("p").get<int>();
    rec.k = e.at("k").get<int>();
    rec.status = parse_characterization(e.at("characterization").get<std::string>());
    rec.explanation = e.at("explanation").get<std::string>();
    out.equalities.push_back(std::move(rec));
  }
  const Json& m = j.at("meta");
  out.meta.tool = m.at("tool").get<std::string>();
  out.meta.version = m.at("version").get<std::string>();
  out.meta.tolerance = m.at("tolerance").get<double>();
  out.meta.grid.q = m.at("grid").at("q").get<std::vector<int>>();
  out.meta.grid.r = m.at("grid").at("r").get<std::vector<int>>();
  out.meta.grid.p = m.at("grid").at("p").get<std::vector<int>>();
  if (m.contains("timestamp")) out.meta.timestamp = m.at("timestamp").get<std::string>();
  return out;
}

namespace {

std::string params(const BoundReport& rep) {
  std::ostringstream os;
  const char* sep = "";
  auto add = [&](const char* name, int v) {
    if (v == 0) return;
    os << sep << name << '=' << v;
    sep = " ";
  };
  add("q", rep.q);
  add("r", rep.r);
  add("p", rep.p);
  add("k", rep.k);
  return os.str();
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "undefined"; }

}  // namespace

std::string render_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << std::setprecision(12);
  const auto& g = report.graph;
  os << "graph " << g.graph6 << ": n=" << g.n << " e=" << g.e << " degrees " << g.min_degree << ".."
     << g.max_degree << (g.connected ? " connected" : " disconnected") << '\n';
  os << "mu in [" << report.mu.lo << ", " << report.mu.hi << "]\n";
  os << "eigenvalues:";
  for (double x : report.eigenvalues) os << ' ' << x;
  os << "\nomega=" << report.clique.omega << " witness {";
  for (std::size_t i = 0; i < report.clique.witness.size(); ++i) os << (i ? "," : "") << report.clique.witness[i];
  os << "}\n";
  const auto& prof = report.regularity;
  os << "regular=" << (prof.is_regular ? "yes" : "no") << " bipartite=" << (prof.is_bipartite ? "yes" : "no")
     << " semiregular=" << (prof.is_semiregular ? "yes" : "no")
     << " pseudo-regular=" << yes_no(prof.is_pseudo_regular)
     << " pseudo-semiregular=" << yes_no(prof.is_pseudo_semiregular)
     << " complete-multipartite=" << (prof.is_complete_multipartite ? "yes" : "no") << '\n';
  os << "\nbounds:\n";
  for (const auto& rep : report.bounds) {
    os << "  " << std::left << std::setw(20) << to_string(rep.id) << std::setw(16) << params(rep)
       << std::setw(13) << to_string(rep.verdict);
    if (rep.compared) os << to_string(*rep.compared) << " <= ";
    if (rep.exact) {
      os << to_string(*rep.exact);
    } else if (rep.value) {
      os << *rep.value;
    }
    if (!rep.label.empty()) os << "  [" << rep.label << ']';
    if (rep.verdict == Verdict::inapplicable) os << "  (" << rep.note << ')';
    os << '\n';
  }
  os << "\nsandwiches:\n";
  for (const auto& s : report.sandwiches) {
    os << "  r=" << s.r << " lower ";
    if (s.max_lower) {
      os << *s.max_lower;
    } else {
      os << '-';
    }
    os << " <= mu^r in [" << s.mu_r.lo << ", " << s.mu_r.hi << "] <= upper ";
    if (s.min_upper) {
      os << *s.min_upper;
    } else {
      os << '-';
    }
    os << (s.consistent ? "" : "  INCONSISTENT") << '\n';
  }
  os << "\nequalities:\n";
  for (const auto& e : report.equalities) {
    os << "  " << to_string(e.id);
    if (e.q) os << " q=" << e.q;
    if (e.r) os << " r=" << e.r;
    if (e.p) os << " p=" << e.p;
    if (e.k) os << " k=" << e.k;
    os << ": " << to_string(e.status);
    if (!e.explanation.empty()) os << " (" << e.explanation << ')';
    os << '\n';
  }
  os << "\nviolations: " << report.violations() << '\n';
  return os.str();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 1) {
      throw Error("expected a comma-separated list of positive integers, got '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace walkspec
