#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "walkspec/explorer/analyze.hpp"
#include "walkspec/explorer/json_io.hpp"
#include "walkspec/graph.hpp"

namespace walkspec {

struct VerifyOptions {
  ParameterGrid grid;
  int jobs = 1;
  double tolerance = kVerdictTolerance;
  /// p, q, r limit for the walk identity suite.
  int identity_limit = 4;
  /// Largest k for the spectral walk formula and closed-walk checks.
  int spectral_horizon = 8;
  double spectral_tolerance = 1e-8;
  /// Largest r for the clique-walk bound and the w_2r lemma.
  int clique_r_max = 6;
  bool motzkin_straus = true;
};

struct EqualityInstance {
  std::size_t graph_index = 0;
  std::string graph6;
  std::string bound;
  int q = 0, r = 0, p = 0;
  Characterization status = Characterization::not_checked;
};

/// One finding on one graph: a violated bound (theorem-backed, counted
/// against the exit code) or an anomaly (an implementation cross-check that
/// disagreed).
struct Finding {
  std::size_t graph_index = 0;
  std::string graph6;
  std::string what;
};

struct VerifySummary {
  std::size_t graphs = 0;
  std::map<std::string, std::size_t> histogram;
  std::vector<EqualityInstance> equalities;
  std::vector<Finding> violations;
  std::vector<Finding> anomalies;
  /// Counters per named check: how many graphs it applied to.
  std::map<std::string, std::size_t> checks;

  bool ok() const { return violations.empty() && anomalies.empty(); }
};

/// Runs every library cross-check on each graph. Graphs are processed by a
/// pool of `jobs` workers; the summary is assembled in input order, so it is
/// independent of the worker count.
VerifySummary verify_corpus(const std::vector<Graph>& graphs, const VerifyOptions& options = {});

json_io::Json to_json(const VerifySummary& summary);
std::string render_text(const VerifySummary& summary);

/// Applies fn(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace walkspec
