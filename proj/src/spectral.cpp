#include "walkspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "walkspec/walks.hpp"

namespace walkspec {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon();

double mul_down(double a, double b) {
  return std::nextafter(a * b, -std::numeric_limits<double>::infinity());
}
double mul_up(double a, double b) {
  return std::nextafter(a * b, std::numeric_limits<double>::infinity());
}

}  // namespace

Spectrum eigen_decompose(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw SpectralError("Jacobi tolerance must be positive");
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };
  for (const auto& [x, y] : g.edges()) {
    A(x - 1, y - 1) = 1.0;
    A(y - 1, x - 1) = 1.0;
  }
  for (int i = 0; i < n; ++i) V(i, i) = 1.0;

  constexpr int kMaxSweeps = 100;
  int sweeps = 0;
  for (;;) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(A(p, q)));
    if (off < tol) break;
    if (sweeps == kMaxSweeps) {
      throw SpectralError("Jacobi iteration did not converge after " + std::to_string(kMaxSweeps) +
                          " sweeps; largest off-diagonal entry " + std::to_string(off));
    }
    ++sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) < 0.01 * tol) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) > A(j, j); });

  Spectrum spectrum;
  spectrum.sweeps = sweeps;
  for (int idx : order) {
    spectrum.eigenvalues.push_back(A(idx, idx));
    std::vector<double> u(n);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      u[k] = V(k, idx);
      sum += u[k];
    }
    // Deterministic sign: positive entry sum, else first significant entry
    // positive.
    bool flip = sum < -1e-9;
    if (std::abs(sum) <= 1e-9) {
      for (double x : u) {
        if (std::abs(x) > 1e-9) {
          flip = x < 0.0;
          break;
        }
      }
    }
    if (flip) {
      for (double& x : u) x = -x;
      sum = -sum;
    }
    spectrum.coefficients.push_back(sum * sum);
    spectrum.eigenvectors.push_back(std::move(u));
  }

  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& u = spectrum.eigenvectors[i];
    for (int x = 1; x <= n; ++x) {
      double au = 0.0;
      for (int y : g.neighbors(x)) au += u[y - 1];
      residual = std::max(residual, std::abs(au - spectrum.eigenvalues[i] * u[x - 1]));
    }
  }
  spectrum.residual = residual;
  return spectrum;
}

CertifiedInterval CertifiedInterval::power(int r) const {
  if (r < 1) throw Error("power exponent must be at least 1");
  CertifiedInterval out = *this;
  out.lo = lo;
  out.hi = hi;
  for (int i = 1; i < r; ++i) {
    out.lo = std::max(0.0, mul_down(out.lo, lo));
    out.hi = mul_up(out.hi, hi);
  }
  return out;
}

namespace {

// Bracket for a connected graph with at least one edge.
CertifiedInterval certify_connected(const Graph& g, const CertifyOptions& options) {
  const int n = g.order();
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  const int horizon = std::max(options.walk_horizon, 3);
  const WalkTable walks(g, horizon);
  for (int q = 1; q + 1 <= horizon; q += 2) {
    lo = std::max(lo, to_double_down(Rational(walks.total(q + 1), walks.total(q))));
    if (q + 2 <= horizon) lo = std::max(lo, sqrt_down(Rational(walks.total(q + 2), walks.total(q))));
  }
  for (int p = 1; p + 1 <= horizon; ++p) {
    Rational best1 = 0;
    Rational best2 = 0;
    for (int u = 1; u <= n; ++u) {
      best1 = std::max(best1, make_rational(walks.at(p + 1, u), walks.at(p, u)));
      if (p + 2 <= horizon) best2 = std::max(best2, make_rational(walks.at(p + 2, u), walks.at(p, u)));
    }
    hi = std::min(hi, to_double_up(best1));
    if (p + 2 <= horizon) hi = std::min(hi, sqrt_up(best2));
  }

  // Rounding guard for sums of positive terms.
  const double guard = (static_cast<double>(n) + 2.0 * static_cast<double>(g.size()) + 8.0) * kUnitRoundoff;
  const double target_rel = std::max(options.eps, 8.0 * guard);
  std::vector<double> x(n);
  for (int u = 1; u <= n; ++u) x[u - 1] = g.degree(u);
  std::vector<double> ax(n);
  CertifiedInterval result;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (hi - lo <= target_rel * std::max(1.0, hi)) break;
    double xax = 0.0;
    double xx = 0.0;
    double cw = 0.0;
    double scale = 0.0;
    for (int u = 1; u <= n; ++u) {
      double s = 0.0;
      for (int w : g.neighbors(u)) s += x[w - 1];
      ax[u - 1] = s;
      xax += x[u - 1] * s;
      xx += x[u - 1] * x[u - 1];
      cw = std::max(cw, s / x[u - 1]);
    }
    lo = std::max(lo, (xax / xx) * (1.0 - guard));
    hi = std::min(hi, cw * (1.0 + guard));
    for (int u = 0; u < n; ++u) {
      x[u] += ax[u];
      scale = std::max(scale, x[u]);
    }
    for (double& value : x) value /= scale;
  }
  result.lo = lo;
  result.hi = std::max(hi, lo);
  result.iterations = it;
  result.converged = hi - lo <= target_rel * std::max(1.0, hi);
  return result;
}

}  // namespace

CertifiedInterval spectral_radius_certified(const Graph& g, const CertifyOptions& options) {
  if (!(options.eps > 0.0)) throw SpectralError("certification eps must be positive");
  CertifiedInterval total;
  total.lo = 0.0;
  total.hi = 0.0;
  for (const auto& members : connected_components(g)) {
    if (members.size() < 2) continue;
    const CertifiedInterval part = certify_connected(g.induced(members), options);
    total.lo = std::max(total.lo, part.lo);
    total.hi = std::max(total.hi, part.hi);
    total.converged = total.converged && part.converged;
    total.iterations = std::max(total.iterations, part.iterations);
  }
  return total;
}

double spectral_power_sum(const Spectrum& spectrum, int k) {
  double s = 0.0;
  for (double mu : spectrum.eigenvalues) s += std::pow(mu, k);
  return s;
}

double spectral_walk_check(const Graph& g, const Spectrum& spectrum, int max_k) {
  if (max_k < 1) throw Error("walk horizon must be at least 1");
  const WalkTable walks(g, max_k);
  double worst = 0.0;
  for (int k = 1; k <= max_k; ++k) {
    double approx = 0.0;
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
      approx += spectrum.coefficients[i] * std::pow(spectrum.eigenvalues[i], k - 1);
    }
    const double exact = walks.total(k).get_d();
    worst = std::max(worst, std::abs(exact - approx) / std::max(1.0, exact));
  }
  return worst;
}

std::vector<EigenGroup> eigenspace_ones_projection(const Spectrum& spectrum, double group_tol) {
  std::vector<EigenGroup> groups;
  double sum_values = 0.0;
  double last = 0.0;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    const double mu = spectrum.eigenvalues[i];
    if (groups.empty() || last - mu > group_tol) {
      if (!groups.empty()) groups.back().value = sum_values / groups.back().multiplicity;
      groups.push_back({mu, 0, 0.0});
      sum_values = 0.0;
    }
    groups.back().multiplicity += 1;
    groups.back().ones_projection += spectrum.coefficients[i];
    sum_values += mu;
    last = mu;
  }
  if (!groups.empty()) groups.back().value = sum_values / groups.back().multiplicity;
  return groups;
}

}  // namespace walkspec
