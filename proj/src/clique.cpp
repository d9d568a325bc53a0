#include "walkspec/clique.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace walkspec {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  CliqueResult run() {
    const int n = g_.order();
    std::vector<int> vertices(n);
    std::iota(vertices.begin(), vertices.end(), 1);
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
    best_ = {vertices.front()};
    expand(vertices);
    CliqueResult result;
    result.omega = static_cast<int>(best_.size());
    result.witness = best_;
    std::sort(result.witness.begin(), result.witness.end());
    return result;
  }

 private:
  // Greedy sequential colouring of `candidates` in their current order;
  // returns the vertices sorted by colour and the colour of each.
  void color_sort(const std::vector<int>& candidates, std::vector<int>& sorted,
                  std::vector<int>& colors) const {
    std::vector<std::vector<int>> classes;
    for (int v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        const bool clash = std::any_of(cls.begin(), cls.end(), [&](int w) { return g_.adjacent(v, w); });
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    sorted.clear();
    colors.clear();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (int v : classes[k]) {
        sorted.push_back(v);
        colors.push_back(static_cast<int>(k) + 1);
      }
    }
  }

  void expand(std::vector<int> candidates) {
    std::vector<int> sorted;
    std::vector<int> colors;
    color_sort(candidates, sorted, colors);
    // Branch from the last (highest colour) vertex backwards, but keep the
    // degree order for ties by scanning the sorted list in reverse.
    for (int i = static_cast<int>(sorted.size()) - 1; i >= 0; --i) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const int v = sorted[i];
      current_.push_back(v);
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (g_.adjacent(v, sorted[j])) next.push_back(sorted[j]);
      // Restore the branching order among survivors.
      std::vector<int> ordered;
      for (int c : candidates)
        if (std::find(next.begin(), next.end(), c) != next.end()) ordered.push_back(c);
      if (ordered.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(ordered));
      }
      current_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

CliqueResult clique_number(const Graph& g) { return CliqueSearch(g).run(); }

SimplexVector::SimplexVector(std::vector<double> x, Normalization normalization)
    : x_(std::move(x)), normalization_(normalization) {
  double sum = 0.0;
  double sq = 0.0;
  for (double v : x_) {
    if (!(v >= 0.0)) throw Error("simplex vector entries must be nonnegative");
    sum += v;
    sq += v * v;
  }
  const double norm = normalization_ == Normalization::sum_one ? sum : std::sqrt(sq);
  if (std::abs(norm - 1.0) > 1e-12) throw Error("simplex vector violates its declared normalization");
}

SimplexVector SimplexVector::sum_one(std::vector<double> weights) {
  return SimplexVector(std::move(weights), Normalization::sum_one);
}

SimplexVector SimplexVector::norm_one(std::vector<double> weights) {
  return SimplexVector(std::move(weights), Normalization::norm_one);
}

SimplexVector SimplexVector::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double v : weights) {
    if (!(v >= 0.0)) throw Error("simplex vector entries must be nonnegative");
    sum += v;
  }
  if (!(sum > 0.0)) throw Error("cannot normalize a zero vector");
  for (double& v : weights) v /= sum;
  // Absorb rounding so the declared normalization holds.
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  auto it = std::max_element(weights.begin(), weights.end());
  *it += 1.0 - total;
  return SimplexVector(std::move(weights), Normalization::sum_one);
}

double ms_quadratic_form(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.order()) throw Error("weight vector size does not match graph order");
  for (double v : x)
    if (!(v >= 0.0)) throw Error("quadratic form weights must be nonnegative");
  double form = 0.0;
  for (const auto& [u, v] : g.edges()) form += 2.0 * x[u - 1] * x[v - 1];
  return form;
}

Rational ms_quadratic_form_exact(const Graph& g, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != g.order()) throw Error("weight vector size does not match graph order");
  Rational form = 0;
  for (const auto& xi : x)
    if (sgn(xi) < 0) throw Error("quadratic form weights must be nonnegative");
  for (const auto& [u, v] : g.edges()) form += 2 * x[u - 1] * x[v - 1];
  return form;
}

Rational ms_cap(int omega) {
  if (omega < 1) throw Error("clique number must be positive");
  return make_rational(omega - 1, omega);
}

namespace {

std::vector<double> replicate(const Graph& g, std::vector<double> x, int iterations) {
  const int n = g.order();
  std::vector<double> ax(n);
  double previous = -1.0;
  for (int it = 0; it < iterations; ++it) {
    double form = 0.0;
    for (int u = 1; u <= n; ++u) {
      double s = 0.0;
      for (int w : g.neighbors(u)) s += x[w - 1];
      ax[u - 1] = s;
      form += x[u - 1] * s;
    }
    if (form <= 0.0) break;
    for (int u = 0; u < n; ++u) x[u] *= ax[u] / form;
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) v /= sum;
    if (std::abs(form - previous) < 1e-16) break;
    previous = form;
  }
  return x;
}

std::vector<double> greedy_clique_rounding(const Graph& g, const std::vector<double>& x) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a - 1] > x[b - 1]; });
  std::vector<int> clique;
  for (int v : order) {
    if (std::all_of(clique.begin(), clique.end(), [&](int w) { return g.adjacent(v, w); })) {
      clique.push_back(v);
    }
  }
  std::vector<double> y(g.order(), 0.0);
  for (int v : clique) y[v - 1] = 1.0 / static_cast<double>(clique.size());
  return y;
}

}  // namespace

MsResult ms_maximize(const Graph& g, const MsOptions& options) {
  if (options.iterations < 1 || options.restarts < 1) {
    throw Error("ms_maximize needs at least one iteration and one restart");
  }
  const int n = g.order();
  std::vector<double> uniform(n, 1.0 / n);
  if (g.size() == 0) return {SimplexVector::normalized(uniform), 0.0};

  std::vector<std::vector<double>> starts{uniform};
  std::mt19937_64 rng(options.seed);
  std::exponential_distribution<double> expo(1.0);
  for (int s = 0; s < options.restarts; ++s) {
    std::vector<double> x(n);
    for (double& v : x) v = expo(rng);
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) v /= sum;
    starts.push_back(std::move(x));
  }

  // Values within kTie are rounding noise around the same optimum; among
  // those the smaller support wins, then the lexicographically least x.
  constexpr double kTie = 1e-12;
  auto support = [](const std::vector<double>& x) {
    return std::count_if(x.begin(), x.end(), [](double v) { return v > 0.0; });
  };
  std::vector<double> best_x;
  double best = -1.0;
  auto consider = [&](const std::vector<double>& x) {
    const double value = ms_quadratic_form(g, x);
    bool better = value > best + kTie;
    if (!better && value >= best - kTie) {
      const auto a = support(x);
      const auto b = support(best_x);
      better = a < b || (a == b && x < best_x);
    }
    if (better) {
      best = value;
      best_x = x;
    }
  };
  for (auto& start : starts) {
    const auto end = replicate(g, std::move(start), options.iterations);
    consider(end);
    consider(greedy_clique_rounding(g, end));
  }
  return {SimplexVector::normalized(best_x), best};
}

std::vector<std::vector<int>> multipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(n + 1, -1);
  std::vector<std::vector<int>> parts;
  for (int u = 1; u <= n; ++u) {
    if (part[u] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.push_back({u});
    part[u] = id;
    for (int v = u + 1; v <= n; ++v) {
      if (!g.adjacent(u, v)) {
        if (part[v] >= 0) return {};
        part[v] = id;
        parts[id].push_back(v);
      }
    }
  }
  // Non-adjacency must be transitive inside parts and complete across them.
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (g.adjacent(u, v) == (part[u] == part[v])) return {};
  return parts;
}

MsEqualityVerdict ms_equality_witness_check(const Graph& g, std::span<const double> x) {
  const int n = g.order();
  if (static_cast<int>(x.size()) != n) throw Error("weight vector size does not match graph order");
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9) throw Error("equality check needs a sum-one vector");
  const int omega = clique_number(g).omega;

  MsEqualityVerdict verdict;
  verdict.form = ms_quadratic_form(g, x);
  verdict.cap = to_double_nearest(ms_cap(omega));
  verdict.form_at_cap = std::abs(verdict.form - verdict.cap) <= 1e-9;

  std::vector<int> support;
  for (int u = 1; u <= n; ++u)
    if (x[u - 1] > 1e-12) support.push_back(u);
  const Graph sub = g.induced(support);
  const auto parts = multipartite_parts(sub);
  for (const auto& local : parts) {
    std::vector<int> global;
    double s = 0.0;
    for (int v : local) {
      global.push_back(support[v - 1]);
      s += x[support[v - 1] - 1];
    }
    verdict.support_parts.push_back(std::move(global));
    verdict.part_sums.push_back(s);
  }
  if (static_cast<int>(parts.size()) == omega) {
    const auto [lo, hi] = std::minmax_element(verdict.part_sums.begin(), verdict.part_sums.end());
    verdict.support_structured = *hi - *lo <= 1e-9;
  }
  return verdict;
}

}  // namespace walkspec
