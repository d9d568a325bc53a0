#include "walkspec/explorer/search.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "walkspec/enumerate.hpp"
#include "walkspec/explorer/verify.hpp"
#include "walkspec/graph_io.hpp"
#include "walkspec/regularity.hpp"

namespace walkspec {

namespace {

struct GraphOutcome {
  bool tested = false;
  std::size_t comparisons = 0;
  std::size_t equalities = 0;
  std::vector<SearchHit> violations;
  std::vector<SearchHit> odd;
};

GraphOutcome probe(const Graph& g, const std::vector<int>& qs, const std::vector<int>& rs, double tolerance) {
  GraphOutcome out;
  if (!g.connected() || g.order() < 2 || !bipartition(g)) return out;
  out.tested = true;
  BoundContext ctx(g, tolerance);
  const int qmax = *std::max_element(qs.begin(), qs.end());
  const int rmax = *std::max_element(rs.begin(), rs.end());
  const WalkTable& w = ctx.walks(qmax + rmax);
  for (int q : qs) {
    for (int r : rs) {
      const CertifiedInterval mu_r = ctx.mu().power(r);
      const Rational value = make_rational(w.total(q + r), w.total(q));
      const double v = to_double_nearest(value);
      const double slack = tolerance * std::max(1.0, mu_r.hi);
      ++out.comparisons;
      if (v > mu_r.hi + slack) {
        SearchHit hit{emit_graph6(g), q, r, value, mu_r, v - mu_r.midpoint()};
        (r % 2 == 0 ? out.violations : out.odd).push_back(std::move(hit));
      } else if (r % 2 == 0 && mu_r.width() <= slack && std::abs(v - mu_r.midpoint()) <= slack) {
        ++out.equalities;
      }
    }
  }
  return out;
}

}  // namespace

SearchOutcome search_problem(const SearchOptions& options) {
  for (int q : options.q)
    if (q < 2 || q % 2) throw Error("search needs even q >= 2");
  for (int r : options.r)
    if (r < 1) throw Error("r must be at least 1");
  for (int r : options.odd_r)
    if (r < 1 || r % 2 == 0) throw Error("odd-r log takes odd r only");
  if (options.q.empty() || options.r.empty()) throw Error("parameter sets must be nonempty");

  SearchOutcome outcome;
  outcome.grid = options;
  outcome.grid.corpus.reset();

  std::vector<Graph> graphs;
  if (options.corpus) {
    graphs = *options.corpus;
  } else {
    if (options.max_n < 1 || options.max_n > kMaxEnumerationOrder) {
      throw Error("search enumerates up to " + std::to_string(kMaxEnumerationOrder) + " vertices");
    }
    graphs = enumerate_corpus(options.max_n, true);
  }
  if (options.max_graphs && graphs.size() > options.max_graphs) {
    graphs.erase(graphs.begin() + static_cast<std::ptrdiff_t>(options.max_graphs), graphs.end());
    outcome.status = "budget-stopped";
  }

  std::set<int> rset(options.r.begin(), options.r.end());
  rset.insert(options.odd_r.begin(), options.odd_r.end());
  const std::vector<int> rs(rset.begin(), rset.end());

  std::vector<GraphOutcome> results(graphs.size());
  parallel_for(graphs.size(), options.jobs,
               [&](std::size_t i) { results[i] = probe(graphs[i], options.q, rs, options.tolerance); });
  for (auto& res : results) {
    if (!res.tested) {
      ++outcome.skipped;
      continue;
    }
    ++outcome.examined;
    outcome.comparisons += res.comparisons;
    outcome.equalities += res.equalities;
    for (auto& h : res.violations) outcome.violations.push_back(std::move(h));
    for (auto& h : res.odd) outcome.odd_r_log.push_back(std::move(h));
  }
  return outcome;
}

namespace {

json_io::Json hits(const std::vector<SearchHit>& list) {
  using json_io::Json;
  Json arr = Json::array();
  for (const auto& h : list) {
    arr.push_back(Json{{"graph6", h.graph6},
                       {"q", h.q},
                       {"r", h.r},
                       {"value", json_io::rational(h.value)},
                       {"mu_r", json_io::interval(h.mu_r)},
                       {"excess", h.excess}});
  }
  return arr;
}

}  // namespace

json_io::Json to_json(const SearchOutcome& outcome) {
  using json_io::Json;
  const auto& g = outcome.grid;
  return Json{{"id", outcome.id},
              {"grid", Json{{"max_n", g.corpus ? Json(nullptr) : Json(g.max_n)}, {"q", g.q}, {"r", g.r}, {"odd_r", g.odd_r}}},
              {"examined", outcome.examined},
              {"skipped", outcome.skipped},
              {"comparisons", outcome.comparisons},
              {"equalities", outcome.equalities},
              {"violations", hits(outcome.violations)},
              {"odd_r_log", hits(outcome.odd_r_log)},
              {"status", outcome.status}};
}

std::string render_text(const SearchOutcome& outcome) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "search " << outcome.id << ": " << outcome.examined << " connected bipartite graphs, "
     << outcome.comparisons << " comparisons, status " << outcome.status << '\n';
  os << "even r: " << outcome.violations.size() << " violations, " << outcome.equalities << " equalities\n";
  for (const auto& h : outcome.violations) {
    os << "  " << h.graph6 << " q=" << h.q << " r=" << h.r << " w_{q+r}/w_q=" << to_string(h.value) << " mu^r<="
       << h.mu_r.hi << '\n';
  }
  os << "odd r log (not counted): " << outcome.odd_r_log.size() << " entries\n";
  for (const auto& h : outcome.odd_r_log) {
    os << "  " << h.graph6 << " q=" << h.q << " r=" << h.r << " w_{q+r}/w_q=" << to_string(h.value) << " mu^r<="
       << h.mu_r.hi << '\n';
  }
  return os.str();
}

}  // namespace walkspec
