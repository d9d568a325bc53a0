#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walkspec/clique.hpp"
#include "walkspec/graph.hpp"
#include "walkspec/numeric.hpp"
#include "walkspec/regularity.hpp"
#include "walkspec/spectral.hpp"
#include "walkspec/walks.hpp"

namespace walkspec {

/// Relative slack used for every verdict against mu^r.
inline constexpr double kVerdictTolerance = 1e-8;

enum class BoundId {
  walk_ratio_lower,
  clique_walk_upper,
  rayleigh_sqrt_lower,
  cauchy_dual_lower,
  hof1,
  hof2,
  wilf_r1,
  clique_walk_r2,
  lin0,
  lin1,
  lin2,
  lin3,
  row_ratio_upper,
  lemma_w2r,
};

enum class Side { lower, upper, internal };
enum class Verdict { holds, violated, equality, inapplicable };
enum class Characterization { not_checked, consistent, inconsistent, not_characterized };

std::string_view to_string(BoundId id);
std::string_view to_string(Side side);
std::string_view to_string(Verdict verdict);
std::string_view to_string(Characterization c);
BoundId parse_bound_id(std::string_view name);
Side parse_side(std::string_view name);
Verdict parse_verdict(std::string_view name);
Characterization parse_characterization(std::string_view name);

/// One evaluated bound. Lower bounds claim value <= mu^r, upper bounds claim
/// mu^r <= value; internal checks compare two exact walk expressions.
struct BoundReport {
  BoundId id = BoundId::walk_ratio_lower;
  std::string label;
  Side side = Side::lower;
  int q = 0, r = 0, p = 0, k = 0;  // 0 when the parameter does not apply
  std::optional<Rational> exact;
  std::optional<double> value;
  /// Exact left-hand side of an internal check.
  std::optional<Rational> compared;
  Verdict verdict = Verdict::inapplicable;
  /// value - mu^r (midpoint of the certified bracket); rhs - lhs for internal.
  std::optional<double> slack;
  std::string note;
  Characterization characterization = Characterization::not_checked;
  std::string explanation;
};

/// Per-graph cache of walk tables, pair counts, the clique number and the
/// certified spectral radius shared by the bound evaluations. Not safe for
/// concurrent use; build one per worker.
class BoundContext {
 public:
  explicit BoundContext(Graph g, double tolerance = kVerdictTolerance, CertifyOptions certify = {});

  const Graph& graph() const { return graph_; }
  double tolerance() const { return tolerance_; }

  const WalkTable& walks(int horizon);
  const IntMatrix& pair_counts(int r);
  const CliqueResult& clique();
  const CertifiedInterval& mu();
  const std::vector<Component>& components();
  const RegularityProfile& regularity();

 private:
  Graph graph_;
  double tolerance_;
  CertifyOptions certify_;
  std::optional<WalkTable> walks_;
  std::map<int, IntMatrix> pairs_;
  std::optional<CliqueResult> clique_;
  std::optional<CertifiedInterval> mu_;
  std::optional<std::vector<Component>> components_;
  std::optional<RegularityProfile> regularity_;
};

/// w_{q+r} / w_q <= mu^r for odd q.
BoundReport lower_walk_ratio(BoundContext& ctx, int q, int r);
/// mu^r <= (omega-1)/omega * w_r.
BoundReport upper_clique_walk(BoundContext& ctx, int r);
/// omega * w_{2r} <= (omega-1) * w_r^2, exactly.
BoundReport lemma_w2r_check(BoundContext& ctx, int r);
/// (omega-1)/omega * w_{2^k r} <= ((omega-1)/omega * w_r)^{2^k}, exactly.
BoundReport lemma_w2r_iterated(BoundContext& ctx, int r, int k);
/// (1/w_p) sum_{u,v} w_{r+1}(u,v) sqrt(w_p(u) w_p(v)) <= mu^r.
BoundReport lower_fms1(BoundContext& ctx, int p, int r);
/// w_{r+1}^2 / (w_p sum_{u,v} w_{r+1}(u,v) / sqrt(w_p(u) w_p(v))) <= mu^r.
BoundReport lower_fms2(BoundContext& ctx, int p, int r);
/// mu^r <= max_u w_{r+p}(u) / w_p(u).
BoundReport upper_row_ratio(BoundContext& ctx, int p, int r);
/// Edge maxima of sqrt(d(u)d(v)) and sqrt(w_3(u)w_3(v)/(d(u)d(v))).
std::array<BoundReport, 2> upper_edge_bounds(BoundContext& ctx);

struct Sandwich {
  int r = 1;
  std::optional<double> max_lower;
  std::optional<double> min_upper;
  CertifiedInterval mu_r;
  bool consistent = true;
};

struct Catalog {
  std::vector<BoundReport> reports;
  std::vector<Sandwich> sandwiches;

  std::size_t count(Verdict verdict) const;
};

/// Every bound for every parameter combination, the named specializations,
/// the per-r sandwich, and an equality classification on each equality.
Catalog evaluate_all(BoundContext& ctx, const std::vector<int>& q_set, const std::vector<int>& r_set,
                     const std::vector<int>& p_set);

struct EqualityClassification {
  Characterization status = Characterization::not_characterized;
  std::string explanation;
};

/// Checks the structural characterization of an equality report. Throws
/// when the report is not an equality.
EqualityClassification classify_equality(BoundContext& ctx, const BoundReport& report);

/// Structural side of the walk-ratio equality clause for (q, r): each
/// component (nontrivial ones when q > 1) has spectral radius mu(G) and is
/// regular / semiregular (q = 1) or pseudo-regular / pseudo-semiregular
/// (q > 1), the semi variants only for even r.
bool walk_ratio_equality_structure(BoundContext& ctx, int q, int r);
/// Structural side of the clique-walk equality clause.
bool clique_walk_equality_structure(BoundContext& ctx, int r);
/// Regular or semiregular; nullopt when an isolated vertex exists.
std::optional<bool> hof_equality_structure(BoundContext& ctx);

}  // namespace walkspec
