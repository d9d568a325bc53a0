#include "walkspec/explorer/converge.hpp"

#include <iomanip>
#include <sstream>

#include "walkspec/regularity.hpp"
#include "walkspec/walks.hpp"

namespace walkspec {

ConvergeResult converge(const Graph& g, int r, const std::vector<double>& eps_list, const ConvergeOptions& options) {
  if (r < 1) throw Error("r must be at least 1");
  if (eps_list.empty()) throw Error("need at least one eps");
  for (double eps : eps_list)
    if (!(eps > 0.0 && eps < 1.0)) throw Error("eps must lie in (0, 1)");
  if (!g.connected()) throw Error("converge needs a connected graph");
  if (bipartition(g)) throw Error("converge needs a nonbipartite graph: bipartite ratios oscillate with the parity of q");

  ConvergeResult out;
  out.r = r;
  out.mu_r = spectral_radius_certified(g).power(r);
  const Rational lo(out.mu_r.lo);
  const Rational hi(out.mu_r.hi);

  // holds[e][q-1]: both flanks certified for eps_list[e] at q.
  std::vector<std::vector<bool>> holds(eps_list.size());
  WalkTable w(g, 1 + r);
  for (int q = 1; q <= options.max_q; ++q) {
    w.extend(q + r);
    if (mpz_sizeinbase(w.total(q + r).get_mpz_t(), 2) > options.bit_budget) {
      out.budget_stopped = true;
      break;
    }
    const Rational ratio = make_rational(w.total(q + r), w.total(q));
    out.ratios.push_back(to_double_nearest(ratio));
    out.last_q = q;
    for (std::size_t e = 0; e < eps_list.size(); ++e) {
      const Rational eps(eps_list[e]);
      holds[e].push_back((1 - eps) * ratio <= lo && hi <= (1 + eps) * ratio);
    }
  }
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    ConvergeRow row;
    row.eps = eps_list[e];
    int q = out.last_q;
    while (q >= 1 && holds[e][q - 1]) --q;
    if (q < out.last_q) row.q0 = q + 1;
    out.rows.push_back(row);
  }
  return out;
}

json_io::Json to_json(const ConvergeResult& result) {
  using json_io::Json;
  Json rows = Json::array();
  for (const auto& row : result.rows) {
    rows.push_back(Json{{"eps", row.eps}, {"q0", row.q0 ? Json(*row.q0) : Json(nullptr)}});
  }
  return Json{{"r", result.r},
              {"mu_r", json_io::interval(result.mu_r)},
              {"last_q", result.last_q},
              {"status", result.budget_stopped ? "budget-stopped" : "horizon"},
              {"rows", rows},
              {"ratios", result.ratios}};
}

std::string render_text(const ConvergeResult& result) {
  std::ostringstream os;
  os << std::setprecision(15);
  os << "r=" << result.r << " mu^r in [" << result.mu_r.lo << ", " << result.mu_r.hi << "], q up to "
     << result.last_q << (result.budget_stopped ? " (budget-stopped)" : "") << '\n';
  for (std::size_t q = 1; q <= result.ratios.size() && q <= 12; ++q) {
    os << "  q=" << q << " w_{q+r}/w_q = " << result.ratios[q - 1] << '\n';
  }
  for (const auto& row : result.rows) {
    os << "  eps=" << row.eps << " q0=" << (row.q0 ? std::to_string(*row.q0) : "unresolved") << '\n';
  }
  return os.str();
}

}  // namespace walkspec
