#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkspec/explorer/json_io.hpp"
#include "walkspec/graph.hpp"
#include "walkspec/numeric.hpp"
#include "walkspec/spectral.hpp"

namespace walkspec {

struct ConvergeOptions {
  int max_q = 400;
  /// Stop once w_q needs more bits than this.
  std::size_t bit_budget = 8192;
};

struct ConvergeRow {
  double eps = 0.0;
  /// Smallest q such that (1-eps) w_{q'+r}/w_{q'} <= mu^r <= (1+eps) w_{q'+r}/w_{q'}
  /// is certified for every q' from q up to the last computed q.
  std::optional<int> q0;
};

struct ConvergeResult {
  int r = 1;
  CertifiedInterval mu_r;
  std::vector<double> ratios;  // ratios[q-1] = w_{q+r}/w_q
  int last_q = 0;
  bool budget_stopped = false;
  std::vector<ConvergeRow> rows;
};

/// Empirical q_0(eps) for the ratio sequence w_{q+r}/w_q. Throws Error for
/// bipartite or disconnected input, where the sequence need not converge.
ConvergeResult converge(const Graph& g, int r, const std::vector<double>& eps_list,
                        const ConvergeOptions& options = {});

json_io::Json to_json(const ConvergeResult& result);
std::string render_text(const ConvergeResult& result);

}  // namespace walkspec
