#pragma once

#include <vector>

#include "walkspec/graph.hpp"

namespace walkspec {

class SpectralError : public Error {
 public:
  using Error::Error;
};

/// Full eigendecomposition of an adjacency matrix.
struct Spectrum {
  /// mu_1 >= ... >= mu_n.
  std::vector<double> eigenvalues;
  /// Orthonormal eigenvectors aligned with `eigenvalues` (0-based entries).
  std::vector<std::vector<double>> eigenvectors;
  /// c_i = (sum_j u_ij)^2. Only basis independent for simple eigenvalues;
  /// use eigenspace_ones_projection for grouped values.
  std::vector<double> coefficients;
  /// max_i ||A u_i - mu_i u_i||_inf.
  double residual = 0.0;
  int sweeps = 0;

  double spectral_radius() const { return eigenvalues.front(); }
};

inline constexpr double kJacobiTolerance = 1e-12;

/// Cyclic Jacobi rotations until every off-diagonal entry is below `tol`.
Spectrum eigen_decompose(const Graph& g, double tol = kJacobiTolerance);

/// Rigorous bracket lo <= mu(G) <= hi.
struct CertifiedInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool converged = true;
  int iterations = 0;

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  /// Outward-rounded bracket of mu^r.
  CertifiedInterval power(int r) const;
};

struct CertifyOptions {
  double eps = 1e-12;
  int max_iterations = 200000;
  /// Horizon of the exact walk-ratio bounds mixed into the bracket.
  int walk_horizon = 24;
};

/// Brackets mu(G). The lower side is the rounding-guarded Rayleigh quotient of
/// a shifted power iteration started from the degree vector, sharpened by the
/// exact walk ratios w_{q+1}/w_q and sqrt(w_{q+2}/w_q) for odd q. The upper
/// side is the guarded Collatz-Wielandt ratio of the iterate, sharpened by the
/// exact row ratios max_u w_{p+1}(u)/w_p(u) and sqrt(max_u w_{p+2}(u)/w_p(u)).
/// Each nontrivial component is bracketed separately; the maxima are
/// returned. Edgeless graphs give [0, 0].
CertifiedInterval spectral_radius_certified(const Graph& g, const CertifyOptions& options = {});
inline CertifiedInterval spectral_radius_certified(const Graph& g, double eps) {
  CertifyOptions options;
  options.eps = eps;
  return spectral_radius_certified(g, options);
}

/// Largest relative deviation |w_k - sum_i c_i mu_i^{k-1}| / max(1, w_k)
/// over k = 1..max_k.
double spectral_walk_check(const Graph& g, const Spectrum& spectrum, int max_k);

/// sum_i mu_i^k.
double spectral_power_sum(const Spectrum& spectrum, int k);

struct EigenGroup {
  double value = 0.0;
  int multiplicity = 0;
  /// Squared norm of the projection of the all-ones vector onto the
  /// eigenspace.
  double ones_projection = 0.0;
};

/// Groups eigenvalues closer than `group_tol` and reports the projection of
/// the all-ones vector on each group's eigenspace.
std::vector<EigenGroup> eigenspace_ones_projection(const Spectrum& spectrum, double group_tol = 1e-8);

}  // namespace walkspec
