#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkspec/bounds.hpp"
#include "walkspec/explorer/json_io.hpp"
#include "walkspec/graph.hpp"

namespace walkspec {

struct SearchOptions {
  int max_n = 8;
  /// Even q >= 2.
  std::vector<int> q{2, 4};
  /// Even entries are tested; odd entries go to the separate log.
  std::vector<int> r{2, 4};
  /// Extra odd r values logged separately.
  std::vector<int> odd_r{1, 3};
  int jobs = 1;
  double tolerance = kVerdictTolerance;
  /// Stop after this many graphs (0 = no limit).
  std::size_t max_graphs = 0;
  /// External corpus instead of enumeration; non-bipartite or disconnected
  /// graphs in it are skipped.
  std::optional<std::vector<Graph>> corpus;
};

struct SearchHit {
  std::string graph6;
  int q = 0, r = 0;
  Rational value;  // w_{q+r} / w_q
  CertifiedInterval mu_r;
  double excess = 0.0;  // value - mu^r
};

struct SearchOutcome {
  std::string id = "even_q_walk_ratio";
  SearchOptions grid;
  std::size_t examined = 0;
  std::size_t skipped = 0;
  std::size_t comparisons = 0;
  std::size_t equalities = 0;
  std::vector<SearchHit> violations;
  std::vector<SearchHit> odd_r_log;
  std::string status = "exhausted";
};

/// Checks mu^r >= w_{q+r}/w_q on connected bipartite graphs for even q. Only
/// even r counts as a violation; odd r lands in odd_r_log.
SearchOutcome search_problem(const SearchOptions& options);

json_io::Json to_json(const SearchOutcome& outcome);
std::string render_text(const SearchOutcome& outcome);

}  // namespace walkspec
