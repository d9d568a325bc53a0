#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkspec/bounds.hpp"
#include "walkspec/clique.hpp"
#include "walkspec/explorer/json_io.hpp"
#include "walkspec/graph.hpp"
#include "walkspec/regularity.hpp"
#include "walkspec/spectral.hpp"

namespace walkspec {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Index sets for the bound catalog.
struct ParameterGrid {
  std::vector<int> q{1, 3, 5};
  std::vector<int> r{1, 2, 3, 4};
  std::vector<int> p{1, 2, 3};
};

struct GraphSummary {
  int n = 0;
  int e = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  std::string graph6;
};

struct EqualityRecord {
  BoundId id = BoundId::walk_ratio_lower;
  std::string label;
  int q = 0, r = 0, p = 0, k = 0;
  Characterization status = Characterization::not_checked;
  std::string explanation;
};

struct ReportMeta {
  std::string tool = "walkspec";
  std::string version{kToolVersion};
  double tolerance = kVerdictTolerance;
  ParameterGrid grid;
  std::optional<std::string> timestamp;
};

/// Everything known about one graph: walk-free summary, spectrum, clique,
/// structure, every bound and the classification of each equality.
struct AnalysisReport {
  GraphSummary graph;
  CertifiedInterval mu;
  std::vector<double> eigenvalues;
  double residual = 0.0;
  CliqueResult clique;
  RegularityProfile regularity;
  std::vector<BoundReport> bounds;
  std::vector<Sandwich> sandwiches;
  std::vector<EqualityRecord> equalities;
  ReportMeta meta;

  std::size_t violations() const;
};

AnalysisReport analyze(const Graph& g, const ParameterGrid& grid = {}, double tolerance = kVerdictTolerance);

json_io::Json to_json(const AnalysisReport& report);
AnalysisReport analysis_from_json(const json_io::Json& j);
std::string render_text(const AnalysisReport& report);

/// Parses "1,3,5" into {1, 3, 5}; every entry must be a positive integer.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace walkspec
