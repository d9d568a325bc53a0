#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "walkspec/graph.hpp"
#include "walkspec/numeric.hpp"

namespace walkspec {

struct CliqueResult {
  int omega = 0;
  /// Vertices of one maximum clique, ascending.
  std::vector<int> witness;
};

/// Exact clique number by branch and bound with a greedy colouring bound.
/// Vertices are branched in descending-degree order; the witness is the first
/// maximum clique met in that order.
CliqueResult clique_number(const Graph& g);

/// Nonnegative vertex weights with a declared normalization.
class SimplexVector {
 public:
  enum class Normalization { sum_one, norm_one };

  static SimplexVector sum_one(std::vector<double> weights);
  static SimplexVector norm_one(std::vector<double> weights);
  /// Rescales nonnegative weights to sum one.
  static SimplexVector normalized(std::vector<double> weights);

  const std::vector<double>& weights() const { return x_; }
  Normalization normalization() const { return normalization_; }
  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }

 private:
  SimplexVector(std::vector<double> x, Normalization normalization);
  std::vector<double> x_;
  Normalization normalization_;
};

/// x^T A x: the sum over ordered adjacent pairs (i, j) of x_i x_j.
/// Throws on negative entries or a size mismatch.
double ms_quadratic_form(const Graph& g, std::span<const double> x);
inline double ms_quadratic_form(const Graph& g, const SimplexVector& x) {
  return ms_quadratic_form(g, x.weights());
}
Rational ms_quadratic_form_exact(const Graph& g, std::span<const Rational> x);

/// (omega - 1) / omega.
Rational ms_cap(int omega);

struct MsOptions {
  int iterations = 2000;
  int restarts = 24;
  std::uint64_t seed = 0x5eedULL;
};

struct MsResult {
  SimplexVector x;
  double value = 0.0;
};

/// Replicator-dynamics ascent x_i <- x_i (Ax)_i / x^T A x from the uniform
/// start and `restarts` random simplex starts. Each end point is also rounded
/// to the clique grown greedily from its heaviest vertices. Only a lower
/// bound on the simplex maximum.
MsResult ms_maximize(const Graph& g, const MsOptions& options = {});

struct MsEqualityVerdict {
  double form = 0.0;
  double cap = 0.0;
  /// Form value equals (omega-1)/omega within 1e-9.
  bool form_at_cap = false;
  /// Support induces a complete omega-partite graph with equal part sums.
  bool support_structured = false;
  std::vector<std::vector<int>> support_parts;
  std::vector<double> part_sums;
  bool agree() const { return form_at_cap == support_structured; }
};

/// Evaluates both sides of the Motzkin-Straus equality characterization for
/// a sum-one vector x.
MsEqualityVerdict ms_equality_witness_check(const Graph& g, std::span<const double> x);

/// Parts of a complete multipartite graph (non-adjacency classes), or an
/// empty vector when g is not complete multipartite.
std::vector<std::vector<int>> multipartite_parts(const Graph& g);

}  // namespace walkspec
