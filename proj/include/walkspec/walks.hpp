#pragma once

#include <string>
#include <vector>

#include "walkspec/graph.hpp"
#include "walkspec/numeric.hpp"

namespace walkspec {

/// Exact counts of k-walks (sequences of k vertices) per start vertex and in
/// total, for k = 1..horizon(). Extending the horizon reuses computed rows.
class WalkTable {
 public:
  WalkTable(Graph g, int horizon);

  const Graph& graph() const { return graph_; }
  int horizon() const { return static_cast<int>(per_vertex_.size()); }
  /// Grows the table to at least `horizon`.
  void extend(int horizon);

  /// w_k(u), 1-based u.
  const BigInt& at(int k, int u) const;
  /// w_k(G).
  const BigInt& total(int k) const;
  /// Row of w_k(u) for u = 1..n (0-based storage).
  const std::vector<BigInt>& row(int k) const;

 private:
  void check_k(int k) const;

  Graph graph_;
  std::vector<std::vector<BigInt>> per_vertex_;
  std::vector<BigInt> totals_;
};

WalkTable walk_table(const Graph& g, int horizon);

/// Square matrix of exact integers with 1-based accessors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  const BigInt& operator()(int u, int v) const { return data_[index(u, v)]; }
  BigInt& operator()(int u, int v) { return data_[index(u, v)]; }
  BigInt trace() const;
  BigInt row_sum(int u) const;
  BigInt total() const;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
  }
  int n_ = 0;
  std::vector<BigInt> data_;
};

/// Matrix of w_r(u, v): r-walks from u to v, i.e. A^{r-1}.
IntMatrix walk_pair_counts(const Graph& g, int r);

/// trace(A^k), which counts closed (k+1)-walks.
BigInt closed_walks(const Graph& g, int k);

struct IdentityCheck {
  std::string name;
  int p = 0, q = 0, r = 0;
  int vertex = 0;  // nonzero for per-vertex identities
  BigInt lhs;
  BigInt rhs;
  bool equal() const { return lhs == rhs; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_equal() const;
  std::size_t failures() const;
};

/// Evaluates the six classical walk identities for every p <= pmax,
/// q <= qmax, r <= rmax. Edge sums run over ordered adjacent pairs.
IdentityReport check_walk_identities(const Graph& g, int pmax, int qmax, int rmax);

}  // namespace walkspec
