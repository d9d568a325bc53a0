#include "walkspec/explorer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <mutex>
#include <thread>

#include "walkspec/graph_io.hpp"

namespace walkspec {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct GraphResult {
  std::map<std::string, std::size_t> histogram;
  std::map<std::string, std::size_t> checks;
  std::vector<EqualityInstance> equalities;
  std::vector<std::string> violations;
  std::vector<std::string> anomalies;
};

std::string describe(const BoundReport& rep) {
  std::ostringstream os;
  os << to_string(rep.id);
  if (rep.q) os << " q=" << rep.q;
  if (rep.r) os << " r=" << rep.r;
  if (rep.p) os << " p=" << rep.p;
  if (rep.k) os << " k=" << rep.k;
  if (rep.exact) {
    os << " value=" << to_string(*rep.exact);
  } else if (rep.value) {
    os << " value=" << *rep.value;
  }
  if (rep.compared) os << " lhs=" << to_string(*rep.compared);
  return os.str();
}

bool is_equality(const std::vector<BoundReport>& reports, BoundId id, int q, int r, int p, bool* applicable) {
  for (const auto& rep : reports) {
    if (rep.id == id && rep.q == q && rep.r == r && rep.p == p && rep.k == 0) {
      *applicable = rep.verdict != Verdict::inapplicable;
      return rep.verdict == Verdict::equality;
    }
  }
  *applicable = false;
  return false;
}

void check_spectral(const Graph& g, const VerifyOptions& opt, const Spectrum& s, BoundContext& ctx,
                    GraphResult& out) {
  ++out.checks["spectral"];
  const int n = g.order();
  const double walk_err = spectral_walk_check(g, s, opt.spectral_horizon);
  if (!(walk_err <= opt.spectral_tolerance)) {
    out.anomalies.push_back("spectral walk formula error " + std::to_string(walk_err));
  }
  double csum = 0.0;
  for (double c : s.coefficients) csum += c;
  if (!(std::abs(csum - n) <= opt.spectral_tolerance * n)) {
    out.anomalies.push_back("sum of c_i is " + std::to_string(csum));
  }
  for (int k = 1; k <= opt.spectral_horizon; ++k) {
    const double exact = closed_walks(g, k).get_d();
    const double approx = spectral_power_sum(s, k);
    if (!(std::abs(exact - approx) <= opt.spectral_tolerance * std::max(1.0, std::abs(exact)))) {
      out.anomalies.push_back("closed walk count k=" + std::to_string(k) + " off by " +
                              std::to_string(exact - approx));
    }
  }
  const CertifiedInterval& mu = ctx.mu();
  const double top = s.spectral_radius();
  const double slack = 1e-9 * std::max(1.0, mu.hi);
  if (top < mu.lo - slack || top > mu.hi + slack) {
    out.anomalies.push_back("Jacobi mu outside the certified interval");
  }
  if (ctx.regularity().is_bipartite) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(s.eigenvalues[i] + s.eigenvalues[n - 1 - i]) > 1e-8 * std::max(1.0, top)) {
        out.anomalies.push_back("bipartite spectrum not symmetric");
        break;
      }
    }
  }
  const auto orth = orthogonality_characterization(g, s);
  ++out.checks["orthogonality"];
  if (!orth.consistent) {
    std::string what = "orthogonality characterization inconsistent:";
    for (const auto& f : orth.findings) what += " " + f;
    out.anomalies.push_back(what);
  }
}

void check_motzkin_straus(const Graph& g, BoundContext& ctx, GraphResult& out) {
  ++out.checks["motzkin_straus"];
  const double cap = to_double_nearest(ms_cap(ctx.clique().omega));
  const MsResult best = ms_maximize(g);
  if (best.value > cap + 1e-9) {
    out.violations.push_back("Motzkin-Straus form " + std::to_string(best.value) + " above the cap");
  }
  if (best.value < cap - 1e-6) {
    out.anomalies.push_back("ms_maximize stopped at " + std::to_string(best.value) + " below the cap");
  }
  // Both sides of the equality iff on vectors whose structure is exact: the
  // uniform clique vector (equality) and a skewed one (no equality).
  const auto& witness = ctx.clique().witness;
  std::vector<double> x(g.order(), 0.0);
  for (int v : witness) x[v - 1] = 1.0 / witness.size();
  const auto at_cap = ms_equality_witness_check(g, x);
  if (std::abs(at_cap.form - cap) > 1e-12 || !at_cap.form_at_cap || !at_cap.agree()) {
    out.anomalies.push_back("uniform weights on the clique witness miss the cap");
  }
  if (witness.size() >= 2) {
    std::vector<double> skew(g.order(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < witness.size(); ++i) total += static_cast<double>(i + 1);
    for (std::size_t i = 0; i < witness.size(); ++i) skew[witness[i] - 1] = (i + 1) / total;
    if (!ms_equality_witness_check(g, skew).agree()) {
      out.anomalies.push_back("Motzkin-Straus equality sides disagree on a skewed clique vector");
    }
  }
}

GraphResult verify_one(const Graph& g, std::size_t index, const VerifyOptions& opt) {
  GraphResult out;
  const std::string g6 = emit_graph6(g);

  ++out.checks["walk_identities"];
  const auto ids = check_walk_identities(g, opt.identity_limit, opt.identity_limit, opt.identity_limit);
  for (const auto& c : ids.checks) {
    if (c.equal()) continue;
    out.violations.push_back("walk identity " + c.name + " p=" + std::to_string(c.p) + " q=" +
                             std::to_string(c.q) + " r=" + std::to_string(c.r) + ": " + to_string(c.lhs) +
                             " != " + to_string(c.rhs));
  }

  BoundContext ctx(g, opt.tolerance);
  try {
    const Spectrum s = eigen_decompose(g);
    check_spectral(g, opt, s, ctx, out);
  } catch (const SpectralError& e) {
    out.anomalies.push_back(e.what());
  }

  ++out.checks["bounds"];
  Catalog cat = evaluate_all(ctx, opt.grid.q, opt.grid.r, opt.grid.p);
  std::vector<BoundReport> reports = std::move(cat.reports);
  const std::set<int> grid_r(opt.grid.r.begin(), opt.grid.r.end());
  for (int r = 1; r <= opt.clique_r_max; ++r) {
    if (grid_r.count(r)) continue;
    reports.push_back(upper_clique_walk(ctx, r));
    if (reports.back().verdict == Verdict::equality) {
      const auto cls = classify_equality(ctx, reports.back());
      reports.back().characterization = cls.status;
      reports.back().explanation = cls.explanation;
    }
    reports.push_back(lemma_w2r_check(ctx, r));
  }
  for (const auto& rep : reports) {
    ++out.histogram[std::string(to_string(rep.verdict))];
    if (rep.verdict == Verdict::violated) out.violations.push_back("bound violated: " + describe(rep));
    if (rep.verdict == Verdict::equality && rep.side != Side::internal) {
      out.equalities.push_back({index, g6, std::string(to_string(rep.id)), rep.q, rep.r, rep.p, rep.characterization});
      if (rep.characterization == Characterization::inconsistent) {
        out.anomalies.push_back("equality without the characterized structure: " + describe(rep) + " (" +
                                rep.explanation + ")");
      }
    }
  }
  for (const auto& s : cat.sandwiches) {
    if (!s.consistent) out.violations.push_back("sandwich inconsistent at r=" + std::to_string(s.r));
  }

  // Converse directions: the characterized structure must produce equality.
  bool applicable = false;
  for (int q : opt.grid.q) {
    if (q % 2 == 0) continue;
    for (int r : opt.grid.r) {
      if (!walk_ratio_equality_structure(ctx, q, r)) continue;
      ++out.checks["walk_ratio_converse"];
      if (!is_equality(reports, BoundId::walk_ratio_lower, q, r, 0, &applicable) && applicable) {
        out.anomalies.push_back("walk-ratio structure without equality at q=" + std::to_string(q) +
                                " r=" + std::to_string(r));
      }
    }
  }
  std::set<int> clique_rs(grid_r);
  for (int r = 1; r <= opt.clique_r_max; ++r) clique_rs.insert(r);
  for (int r : clique_rs) {
    if (!clique_walk_equality_structure(ctx, r)) continue;
    ++out.checks["clique_walk_converse"];
    if (!is_equality(reports, BoundId::clique_walk_upper, 0, r, 0, &applicable)) {
      out.anomalies.push_back("clique-walk structure without equality at r=" + std::to_string(r));
    }
  }
  if (hof_equality_structure(ctx) == true) {
    ++out.checks["hof_converse"];
    if (!is_equality(reports, BoundId::hof1, 0, 1, 2, &applicable) ||
        !is_equality(reports, BoundId::hof2, 0, 1, 2, &applicable)) {
      out.anomalies.push_back("regular or semiregular graph without Hof equality");
    }
  }

  if (opt.motzkin_straus) check_motzkin_straus(g, ctx, out);
  return out;
}

}  // namespace

VerifySummary verify_corpus(const std::vector<Graph>& graphs, const VerifyOptions& options) {
  std::vector<GraphResult> results(graphs.size());
  parallel_for(graphs.size(), options.jobs,
               [&](std::size_t i) { results[i] = verify_one(graphs[i], i, options); });

  VerifySummary summary;
  summary.graphs = graphs.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& res = results[i];
    for (const auto& [k, v] : res.histogram) summary.histogram[k] += v;
    for (const auto& [k, v] : res.checks) summary.checks[k] += v;
    for (auto& e : res.equalities) summary.equalities.push_back(std::move(e));
    const std::string g6 = emit_graph6(graphs[i]);
    for (auto& v : res.violations) summary.violations.push_back({i, g6, std::move(v)});
    for (auto& a : res.anomalies) summary.anomalies.push_back({i, g6, std::move(a)});
  }
  return summary;
}

json_io::Json to_json(const VerifySummary& summary) {
  using json_io::Json;
  Json j;
  j["graphs"] = summary.graphs;
  j["histogram"] = summary.histogram;
  j["checks"] = summary.checks;
  auto findings = [](const std::vector<Finding>& list) {
    Json arr = Json::array();
    for (const auto& f : list) arr.push_back(Json{{"graph_index", f.graph_index}, {"graph6", f.graph6}, {"what", f.what}});
    return arr;
  };
  j["violations"] = findings(summary.violations);
  j["anomalies"] = findings(summary.anomalies);
  Json eq = Json::array();
  for (const auto& e : summary.equalities) {
    eq.push_back(Json{{"graph_index", e.graph_index},
                      {"graph6", e.graph6},
                      {"bound", e.bound},
                      {"q", e.q},
                      {"r", e.r},
                      {"p", e.p},
                      {"characterization", std::string(to_string(e.status))}});
  }
  j["equalities"] = eq;
  j["ok"] = summary.ok();
  return j;
}

std::string render_text(const VerifySummary& summary) {
  std::ostringstream os;
  os << "graphs checked: " << summary.graphs << '\n';
  os << "verdicts:";
  for (const auto& [k, v] : summary.histogram) os << ' ' << k << '=' << v;
  os << "\nchecks:";
  for (const auto& [k, v] : summary.checks) os << ' ' << k << '=' << v;
  std::map<std::string, std::map<std::string, std::size_t>> eq;
  for (const auto& e : summary.equalities) ++eq[e.bound][std::string(to_string(e.status))];
  os << "\nequality instances: " << summary.equalities.size() << '\n';
  for (const auto& [bound, by_status] : eq) {
    os << "  " << bound << ':';
    for (const auto& [status, n] : by_status) os << ' ' << status << '=' << n;
    os << '\n';
  }
  os << "violations: " << summary.violations.size() << '\n';
  for (const auto& f : summary.violations) os << "  #" << f.graph_index << ' ' << f.graph6 << ": " << f.what << '\n';
  os << "anomalies: " << summary.anomalies.size() << '\n';
  for (const auto& f : summary.anomalies) os << "  #" << f.graph_index << ' ' << f.graph6 << ": " << f.what << '\n';
  return os.str();
}

}  // namespace walkspec
