#include "walkspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace walkspec {

namespace {

struct NameTable {
  BoundId id;
  std::string_view name;
};

constexpr NameTable kBoundNames[] = {
    {BoundId::walk_ratio_lower, "walk_ratio_lower"},
    {BoundId::clique_walk_upper, "clique_walk_upper"},
    {BoundId::rayleigh_sqrt_lower, "rayleigh_sqrt_lower"},
    {BoundId::cauchy_dual_lower, "cauchy_dual_lower"},
    {BoundId::hof1, "hof1"},
    {BoundId::hof2, "hof2"},
    {BoundId::wilf_r1, "wilf_r1"},
    {BoundId::clique_walk_r2, "clique_walk_r2"},
    {BoundId::lin0, "lin0"},
    {BoundId::lin1, "lin1"},
    {BoundId::lin2, "lin2"},
    {BoundId::lin3, "lin3"},
    {BoundId::row_ratio_upper, "row_ratio_upper"},
    {BoundId::lemma_w2r, "lemma_w2r"},
};

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& entry : kBoundNames)
    if (entry.id == id) return entry.name;
  return "unknown";
}

BoundId parse_bound_id(std::string_view name) {
  for (const auto& entry : kBoundNames)
    if (entry.name == name) return entry.id;
  throw Error("unknown bound id '" + std::string(name) + "'");
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::lower: return "lower";
    case Side::upper: return "upper";
    case Side::internal: return "internal";
  }
  return "unknown";
}

Side parse_side(std::string_view name) {
  if (name == "lower") return Side::lower;
  if (name == "upper") return Side::upper;
  if (name == "internal") return Side::internal;
  throw Error("unknown side '" + std::string(name) + "'");
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::equality: return "equality";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

Verdict parse_verdict(std::string_view name) {
  if (name == "holds") return Verdict::holds;
  if (name == "violated") return Verdict::violated;
  if (name == "equality") return Verdict::equality;
  if (name == "inapplicable") return Verdict::inapplicable;
  throw Error("unknown verdict '" + std::string(name) + "'");
}

std::string_view to_string(Characterization c) {
  switch (c) {
    case Characterization::not_checked: return "not_checked";
    case Characterization::consistent: return "consistent";
    case Characterization::inconsistent: return "inconsistent";
    case Characterization::not_characterized: return "not_characterized";
  }
  return "unknown";
}

Characterization parse_characterization(std::string_view name) {
  if (name == "not_checked") return Characterization::not_checked;
  if (name == "consistent") return Characterization::consistent;
  if (name == "inconsistent") return Characterization::inconsistent;
  if (name == "not_characterized") return Characterization::not_characterized;
  throw Error("unknown characterization '" + std::string(name) + "'");
}

BoundContext::BoundContext(Graph g, double tolerance, CertifyOptions certify)
    : graph_(std::move(g)), tolerance_(tolerance), certify_(certify) {
  if (!(tolerance_ > 0.0)) throw Error("verdict tolerance must be positive");
}

const WalkTable& BoundContext::walks(int horizon) {
  if (!walks_) {
    walks_.emplace(graph_, horizon);
  } else {
    walks_->extend(horizon);
  }
  return *walks_;
}

const IntMatrix& BoundContext::pair_counts(int r) {
  auto it = pairs_.find(r);
  if (it == pairs_.end()) it = pairs_.emplace(r, walk_pair_counts(graph_, r)).first;
  return it->second;
}

const CliqueResult& BoundContext::clique() {
  if (!clique_) clique_ = clique_number(graph_);
  return *clique_;
}

const CertifiedInterval& BoundContext::mu() {
  if (!mu_) mu_ = spectral_radius_certified(graph_, certify_);
  return *mu_;
}

const std::vector<Component>& BoundContext::components() {
  if (!components_) components_ = component_split(graph_, certify_);
  return *components_;
}

const RegularityProfile& BoundContext::regularity() {
  if (!regularity_) regularity_ = profile(graph_);
  return *regularity_;
}

namespace {

void check_positive(int value, const char* what) {
  if (value < 1) throw Error(std::string(what) + " must be at least 1");
}

BoundReport make_report(BoundId id, Side side, int q, int r, int p) {
  BoundReport rep;
  rep.id = id;
  rep.side = side;
  rep.q = q;
  rep.r = r;
  rep.p = p;
  return rep;
}

BoundReport inapplicable(BoundReport rep, std::string why) {
  rep.verdict = Verdict::inapplicable;
  rep.note = std::move(why);
  return rep;
}

// Verdict of a lower or upper claim against the certified bracket of mu^r.
void judge(BoundContext& ctx, BoundReport& rep, double value) {
  rep.value = value;
  const CertifiedInterval mu_r = ctx.mu().power(rep.r);
  const double centre = std::pow(ctx.mu().midpoint(), rep.r);
  const double slack_tol = ctx.tolerance() * std::max(1.0, mu_r.hi);
  rep.slack = value - centre;
  const bool tight = mu_r.width() <= slack_tol && std::abs(value - centre) <= slack_tol;
  if (rep.side == Side::lower) {
    rep.verdict = value > mu_r.hi + slack_tol ? Verdict::violated : tight ? Verdict::equality : Verdict::holds;
  } else {
    rep.verdict = value < mu_r.lo - slack_tol ? Verdict::violated : tight ? Verdict::equality : Verdict::holds;
  }
}

void judge_exact(BoundContext& ctx, BoundReport& rep, const Rational& value) {
  rep.exact = value;
  judge(ctx, rep, to_double_nearest(value));
}

// Internal check lhs <= rhs decided exactly.
void judge_internal(BoundReport& rep, const Rational& lhs, const Rational& rhs) {
  rep.compared = lhs;
  rep.exact = rhs;
  rep.value = to_double_nearest(rhs);
  rep.slack = to_double_nearest(rhs - lhs);
  rep.verdict = lhs < rhs ? Verdict::holds : lhs == rhs ? Verdict::equality : Verdict::violated;
}

const char* walk_ratio_label(int q, int r) {
  if (q == 1 && r == 1) return "Collatz-Sinogowitz";
  if (q == 1 && r == 2) return "Hofmeister";
  if (q == 3 && r == 2) return "Yu-Lu-Tian";
  if (q == 5 && r == 2) return "Hong-Zhang";
  return "";
}

// sum over pairs of M_uv * f(w_p(u) w_p(v)), exact when every product is a
// perfect square. `inverse` selects 1/sqrt instead of sqrt.
struct RootSum {
  std::optional<Rational> exact;
  long double approx = 0.0L;
  bool zero_denominator = false;
};

RootSum root_pair_sum(const IntMatrix& pairs, const std::vector<BigInt>& wp, bool inverse) {
  RootSum out;
  Rational exact = 0;
  bool all_square = true;
  const int n = pairs.size();
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      const BigInt& m = pairs(u, v);
      if (m == 0) continue;
      const BigInt prod = wp[u - 1] * wp[v - 1];
      if (prod == 0) {
        if (inverse) out.zero_denominator = true;
        continue;
      }
      BigInt root;
      if (all_square && is_perfect_square(prod, &root)) {
        exact += inverse ? make_rational(m, root) : Rational(m * root);
      } else {
        all_square = false;
      }
      const long double s = std::sqrt(static_cast<long double>(wp[u - 1].get_d())) *
                            std::sqrt(static_cast<long double>(wp[v - 1].get_d()));
      out.approx += static_cast<long double>(m.get_d()) * (inverse ? 1.0L / s : s);
    }
  }
  if (all_square) {
    exact.canonicalize();
    out.exact = exact;
  }
  return out;
}

}  // namespace

BoundReport lower_walk_ratio(BoundContext& ctx, int q, int r) {
  check_positive(q, "q");
  check_positive(r, "r");
  BoundReport rep = make_report(BoundId::walk_ratio_lower, Side::lower, q, r, 0);
  rep.label = walk_ratio_label(q, r);
  if (q % 2 == 0) return inapplicable(std::move(rep), "q is even: the walk-ratio lower bound needs odd q");
  if (ctx.graph().size() == 0) return inapplicable(std::move(rep), "edgeless graph: every walk ratio is degenerate");
  const WalkTable& w = ctx.walks(q + r);
  if (w.total(q) == 0) return inapplicable(std::move(rep), "w_q(G) = 0");
  judge_exact(ctx, rep, make_rational(w.total(q + r), w.total(q)));
  return rep;
}

BoundReport upper_clique_walk(BoundContext& ctx, int r) {
  check_positive(r, "r");
  BoundReport rep = make_report(BoundId::clique_walk_upper, Side::upper, 0, r, 0);
  const WalkTable& w = ctx.walks(r);
  const Rational value = ms_cap(ctx.clique().omega) * Rational(w.total(r));
  judge_exact(ctx, rep, value);
  return rep;
}

BoundReport lemma_w2r_check(BoundContext& ctx, int r) {
  check_positive(r, "r");
  BoundReport rep = make_report(BoundId::lemma_w2r, Side::internal, 0, r, 0);
  const WalkTable& w = ctx.walks(2 * r);
  const int omega = ctx.clique().omega;
  rep.note = "omega * w_2r <= (omega - 1) * w_r^2";
  judge_internal(rep, Rational(BigInt(omega) * w.total(2 * r)),
                 Rational(BigInt(omega - 1) * w.total(r) * w.total(r)));
  return rep;
}

BoundReport lemma_w2r_iterated(BoundContext& ctx, int r, int k) {
  check_positive(r, "r");
  check_positive(k, "k");
  BoundReport rep = make_report(BoundId::lemma_w2r, Side::internal, 0, r, 0);
  rep.k = k;
  const int len = r << k;
  const WalkTable& w = ctx.walks(len);
  const Rational cap = ms_cap(ctx.clique().omega);
  Rational base = cap * Rational(w.total(r));
  Rational rhs = 1;
  for (int i = 0; i < (1 << k); ++i) rhs *= base;
  rep.note = "(omega-1)/omega * w_{2^k r} <= ((omega-1)/omega * w_r)^{2^k}";
  judge_internal(rep, cap * Rational(w.total(len)), rhs);
  return rep;
}

BoundReport lower_fms1(BoundContext& ctx, int p, int r) {
  check_positive(p, "p");
  check_positive(r, "r");
  BoundReport rep = make_report(BoundId::rayleigh_sqrt_lower, Side::lower, 0, r, p);
  const WalkTable& w = ctx.walks(std::max(p, r + 1));
  if (w.total(p) == 0) return inapplicable(std::move(rep), "w_p(G) = 0");
  const RootSum sum = root_pair_sum(ctx.pair_counts(r + 1), w.row(p), false);
  if (sum.exact) {
    judge_exact(ctx, rep, *sum.exact / Rational(w.total(p)));
  } else {
    judge(ctx, rep, static_cast<double>(sum.approx / static_cast<long double>(w.total(p).get_d())));
  }
  return rep;
}

BoundReport lower_fms2(BoundContext& ctx, int p, int r) {
  check_positive(p, "p");
  check_positive(r, "r");
  BoundReport rep = make_report(BoundId::cauchy_dual_lower, Side::lower, 0, r, p);
  const WalkTable& w = ctx.walks(std::max(p, r + 1));
  if (w.total(p) == 0) return inapplicable(std::move(rep), "w_p(G) = 0");
  const RootSum sum = root_pair_sum(ctx.pair_counts(r + 1), w.row(p), true);
  if (sum.zero_denominator) return inapplicable(std::move(rep), "w_p(u) = 0 for a vertex with walks");
  if (sum.approx == 0.0L) return inapplicable(std::move(rep), "zero denominator (no (r+1)-walks)");
  const BigInt& top = w.total(r + 1);
  if (sum.exact) {
    judge_exact(ctx, rep, Rational(top * top) / (Rational(w.total(p)) * *sum.exact));
  } else {
    const long double t = static_cast<long double>(top.get_d());
    judge(ctx, rep, static_cast<double>(t * t / (static_cast<long double>(w.total(p).get_d()) * sum.approx)));
  }
  return rep;
}

BoundReport upper_row_ratio(BoundContext& ctx, int p, int r) {
  check_positive(p, "p");
  check_positive(r, "r");
  BoundReport rep = make_report(BoundId::row_ratio_upper, Side::upper, 0, r, p);
  if (p >= 2 && ctx.graph().has_isolated_vertex()) {
    return inapplicable(std::move(rep), "isolated vertex makes w_p(u) = 0 for p >= 2");
  }
  const WalkTable& w = ctx.walks(r + p);
  Rational best = 0;
  for (int u = 1; u <= ctx.graph().order(); ++u) {
    best = std::max(best, make_rational(w.at(r + p, u), w.at(p, u)));
  }
  judge_exact(ctx, rep, best);
  return rep;
}

std::array<BoundReport, 2> upper_edge_bounds(BoundContext& ctx) {
  BoundReport lin2 = make_report(BoundId::lin2, Side::upper, 0, 1, 0);
  BoundReport lin3 = make_report(BoundId::lin3, Side::upper, 0, 1, 0);
  const Graph& g = ctx.graph();
  if (g.size() == 0) {
    return {inapplicable(std::move(lin2), "edgeless graph"), inapplicable(std::move(lin3), "edgeless graph")};
  }
  const WalkTable& w = ctx.walks(3);
  Rational best2 = 0;
  Rational best3 = 0;
  for (const auto& [u, v] : g.edges()) {
    best2 = std::max(best2, Rational(g.degree(u) * g.degree(v)));
    best3 = std::max(best3, make_rational(w.at(3, u) * w.at(3, v), BigInt(g.degree(u) * g.degree(v))));
  }
  auto finish = [&](BoundReport& rep, const Rational& square) {
    BigInt num_root, den_root;
    if (is_perfect_square(square.get_num(), &num_root) && is_perfect_square(square.get_den(), &den_root)) {
      judge_exact(ctx, rep, make_rational(num_root, den_root));
    } else {
      rep.note = "value is the square root of " + to_string(square);
      judge(ctx, rep, std::sqrt(to_double_nearest(square)));
    }
  };
  finish(lin2, best2);
  finish(lin3, best3);
  return {lin2, lin3};
}

namespace {

bool radius_matches(BoundContext& ctx, const CertifiedInterval& part, int r) {
  const double whole = std::pow(ctx.mu().midpoint(), r);
  const double piece = std::pow(part.midpoint(), r);
  return std::abs(whole - piece) <= ctx.tolerance() * std::max(1.0, whole);
}

}  // namespace

bool walk_ratio_equality_structure(BoundContext& ctx, int q, int r) {
  const auto& prof = ctx.regularity();
  const bool even_r = r % 2 == 0;
  for (const auto& comp : prof.components) {
    const bool trivial = comp.vertices.size() == 1;
    if (trivial && q > 1) continue;
    if (!radius_matches(ctx, comp.mu, r)) return false;
    const bool shape = q == 1 ? comp.regular || (even_r && comp.semiregular)
                              : comp.pseudo_regular == true || (even_r && comp.pseudo_semiregular == true);
    if (!shape) return false;
  }
  return true;
}

bool clique_walk_equality_structure(BoundContext& ctx, int r) {
  const Graph& g = ctx.graph();
  const int omega = ctx.clique().omega;
  if (g.size() == 0) return true;
  const auto& prof = ctx.regularity();
  if (r == 1) {
    return prof.is_regular && prof.is_complete_multipartite && static_cast<int>(prof.parts.size()) == omega;
  }
  const ComponentFlags* nontrivial = nullptr;
  for (const auto& comp : prof.components) {
    if (comp.vertices.size() < 2) continue;
    if (nontrivial != nullptr) return false;
    nontrivial = &comp;
  }
  const Graph g1 = g.induced(nontrivial->vertices);
  const auto parts = multipartite_parts(g1);
  if (static_cast<int>(parts.size()) != omega) return false;
  if (omega > 2) return nontrivial->regular;
  return r % 2 == 0 || nontrivial->regular;
}

std::optional<bool> hof_equality_structure(BoundContext& ctx) {
  if (ctx.graph().has_isolated_vertex()) return std::nullopt;
  const auto& prof = ctx.regularity();
  return prof.is_regular || prof.is_semiregular;
}

EqualityClassification classify_equality(BoundContext& ctx, const BoundReport& report) {
  if (report.verdict != Verdict::equality) throw Error("classify_equality needs an equality report");
  EqualityClassification out;
  auto decide = [&](bool structure, std::string what) {
    out.status = structure ? Characterization::consistent : Characterization::inconsistent;
    out.explanation = (structure ? "confirmed: " : "not satisfied: ") + std::move(what);
  };
  switch (report.id) {
    case BoundId::walk_ratio_lower: {
      const bool even = report.r % 2 == 0;
      std::string what = "each ";
      what += report.q > 1 ? "nontrivial " : "";
      what += "component has spectral radius mu(G) and is ";
      what += report.q == 1 ? (even ? "regular or semiregular" : "regular")
                            : (even ? "pseudo-regular or pseudo-semiregular" : "pseudo-regular");
      decide(walk_ratio_equality_structure(ctx, report.q, report.r), what);
      break;
    }
    case BoundId::clique_walk_upper:
    case BoundId::wilf_r1:
    case BoundId::clique_walk_r2: {
      const int omega = ctx.clique().omega;
      std::string what;
      if (ctx.graph().size() == 0) {
        what = "edgeless graph (omega = 1)";
      } else if (report.r == 1) {
        what = "regular complete " + std::to_string(omega) + "-partite graph";
      } else if (omega > 2) {
        what = "single nontrivial component, regular complete " + std::to_string(omega) + "-partite";
      } else {
        what = std::string("single nontrivial component, complete bipartite") +
               (report.r % 2 == 1 ? " and regular" : "");
      }
      decide(clique_walk_equality_structure(ctx, report.r), what);
      break;
    }
    case BoundId::hof1:
    case BoundId::hof2: {
      const auto structure = hof_equality_structure(ctx);
      if (!structure) {
        out.status = Characterization::not_characterized;
        out.explanation = "isolated vertex: characterization covers graphs without isolated vertices";
      } else {
        decide(*structure, "regular or semiregular");
      }
      break;
    }
    default:
      out.status = Characterization::not_characterized;
      out.explanation = "no structural characterization known; instance recorded";
      break;
  }
  return out;
}

std::size_t Catalog::count(Verdict verdict) const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(),
                                                [&](const BoundReport& r) { return r.verdict == verdict; }));
}

Catalog evaluate_all(BoundContext& ctx, const std::vector<int>& q_set, const std::vector<int>& r_set,
                     const std::vector<int>& p_set) {
  if (q_set.empty() || r_set.empty() || p_set.empty()) throw Error("parameter sets must be nonempty");
  Catalog cat;
  auto& out = cat.reports;
  for (int q : q_set)
    for (int r : r_set) out.push_back(lower_walk_ratio(ctx, q, r));
  for (int r : r_set) out.push_back(upper_clique_walk(ctx, r));
  {
    BoundReport wilf = upper_clique_walk(ctx, 1);
    wilf.id = BoundId::wilf_r1;
    wilf.label = "Wilf";
    out.push_back(std::move(wilf));
    BoundReport sq = upper_clique_walk(ctx, 2);
    sq.id = BoundId::clique_walk_r2;
    sq.label = "clique-walk square";
    out.push_back(std::move(sq));
  }
  for (int r : r_set) {
    out.push_back(lemma_w2r_check(ctx, r));
    for (int k = 1; k <= 3; ++k) out.push_back(lemma_w2r_iterated(ctx, r, k));
  }
  for (int p : p_set)
    for (int r : r_set) {
      out.push_back(lower_fms1(ctx, p, r));
      out.push_back(lower_fms2(ctx, p, r));
      out.push_back(upper_row_ratio(ctx, p, r));
    }
  {
    BoundReport hof1 = lower_fms1(ctx, 2, 1);
    hof1.id = BoundId::hof1;
    out.push_back(std::move(hof1));
    BoundReport hof2 = lower_fms2(ctx, 2, 1);
    hof2.id = BoundId::hof2;
    out.push_back(std::move(hof2));
    BoundReport lin0 = upper_row_ratio(ctx, 1, 2);
    lin0.id = BoundId::lin0;
    lin0.note = "squared form: mu^2 <= max_u w_3(u)";
    out.push_back(std::move(lin0));
    BoundReport lin1 = upper_row_ratio(ctx, 2, 1);
    lin1.id = BoundId::lin1;
    out.push_back(std::move(lin1));
    for (auto& rep : upper_edge_bounds(ctx)) out.push_back(std::move(rep));
  }

  for (auto& rep : out) {
    if (rep.verdict != Verdict::equality || rep.side == Side::internal) continue;
    const auto cls = classify_equality(ctx, rep);
    rep.characterization = cls.status;
    rep.explanation = cls.explanation;
  }

  std::set<int> rs(r_set.begin(), r_set.end());
  rs.insert(1);
  rs.insert(2);
  for (int r : rs) {
    Sandwich s;
    s.r = r;
    s.mu_r = ctx.mu().power(r);
    for (const auto& rep : out) {
      if (rep.r != r || rep.verdict == Verdict::inapplicable || !rep.value) continue;
      if (rep.side == Side::lower) s.max_lower = std::max(s.max_lower.value_or(*rep.value), *rep.value);
      if (rep.side == Side::upper) s.min_upper = std::min(s.min_upper.value_or(*rep.value), *rep.value);
    }
    const double slack = ctx.tolerance() * std::max(1.0, s.mu_r.hi);
    s.consistent = (!s.max_lower || *s.max_lower <= s.mu_r.hi + slack) &&
                   (!s.min_upper || *s.min_upper >= s.mu_r.lo - slack);
    cat.sandwiches.push_back(s);
  }
  return cat;
}

}  // namespace walkspec
