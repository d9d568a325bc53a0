#include "walkspec/walks.hpp"

namespace walkspec {

WalkTable::WalkTable(Graph g, int horizon) : graph_(std::move(g)) {
  if (horizon < 1) throw Error("walk horizon must be at least 1");
  per_vertex_.emplace_back(graph_.order(), BigInt(1));
  totals_.emplace_back(graph_.order());
  extend(horizon);
}

void WalkTable::extend(int horizon) {
  const int n = graph_.order();
  while (this->horizon() < horizon) {
    const auto& prev = per_vertex_.back();
    std::vector<BigInt> next(n);
    BigInt sum = 0;
    for (int u = 1; u <= n; ++u) {
      BigInt acc = 0;
      for (int v : graph_.neighbors(u)) acc += prev[v - 1];
      sum += acc;
      next[u - 1] = std::move(acc);
    }
    per_vertex_.push_back(std::move(next));
    totals_.push_back(std::move(sum));
  }
}

void WalkTable::check_k(int k) const {
  if (k < 1 || k > horizon()) {
    throw Error("walk length " + std::to_string(k) + " outside table horizon " +
                std::to_string(horizon()));
  }
}

const BigInt& WalkTable::at(int k, int u) const {
  check_k(k);
  if (u < 1 || u > graph_.order()) throw GraphError("vertex id out of range");
  return per_vertex_[k - 1][u - 1];
}

const BigInt& WalkTable::total(int k) const {
  check_k(k);
  return totals_[k - 1];
}

const std::vector<BigInt>& WalkTable::row(int k) const {
  check_k(k);
  return per_vertex_[k - 1];
}

WalkTable walk_table(const Graph& g, int horizon) { return WalkTable(g, horizon); }

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int u = 1; u <= n; ++u) m(u, u) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (int u = 1; u <= n_; ++u) t += (*this)(u, u);
  return t;
}

BigInt IntMatrix::row_sum(int u) const {
  BigInt s = 0;
  for (int v = 1; v <= n_; ++v) s += (*this)(u, v);
  return s;
}

BigInt IntMatrix::total() const {
  BigInt s = 0;
  for (const auto& x : data_) s += x;
  return s;
}

IntMatrix walk_pair_counts(const Graph& g, int r) {
  if (r < 1) throw Error("walk length must be at least 1");
  const int n = g.order();
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 1; step < r; ++step) {
    IntMatrix next(n);
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        BigInt acc = 0;
        for (int w : g.neighbors(v)) acc += m(u, w);
        next(u, v) = std::move(acc);
      }
    m = std::move(next);
  }
  return m;
}

BigInt closed_walks(const Graph& g, int k) {
  if (k < 1) throw Error("closed walk exponent must be at least 1");
  return walk_pair_counts(g, k + 1).trace();
}

bool IdentityReport::all_equal() const { return failures() == 0; }

std::size_t IdentityReport::failures() const {
  std::size_t bad = 0;
  for (const auto& c : checks)
    if (!c.equal()) ++bad;
  return bad;
}

IdentityReport check_walk_identities(const Graph& g, int pmax, int qmax, int rmax) {
  if (pmax < 1 || qmax < 1 || rmax < 1) throw Error("identity bounds must be at least 1");
  const int n = g.order();
  const int horizon = std::max({2 * pmax - 1, pmax + qmax - 1, pmax + rmax, pmax + qmax + rmax - 2, 4});
  const WalkTable table(g, horizon);
  IdentityReport report;

  {
    IdentityCheck c{"sum_degree_squared", 0, 0, 0, 0, 0, table.total(3)};
    for (int u = 1; u <= n; ++u) c.lhs += BigInt(g.degree(u)) * g.degree(u);
    report.checks.push_back(std::move(c));
  }
  {
    IdentityCheck c{"edge_degree_products", 0, 0, 0, 0, 0, table.total(4)};
    for (int u = 1; u <= n; ++u)
      for (int v : g.neighbors(u)) c.lhs += BigInt(g.degree(u)) * g.degree(v);
    report.checks.push_back(std::move(c));
  }
  for (int p = 1; p <= pmax; ++p) {
    IdentityCheck c{"sum_squares", p, 0, 0, 0, 0, table.total(2 * p - 1)};
    for (int u = 1; u <= n; ++u) c.lhs += table.at(p, u) * table.at(p, u);
    report.checks.push_back(std::move(c));
  }
  for (int p = 1; p <= pmax; ++p)
    for (int q = 1; q <= qmax; ++q) {
      IdentityCheck c{"sum_products", p, q, 0, 0, 0, table.total(p + q - 1)};
      for (int u = 1; u <= n; ++u) c.lhs += table.at(p, u) * table.at(q, u);
      report.checks.push_back(std::move(c));
    }
  for (int r = 1; r <= rmax; ++r) {
    const IntMatrix pairs = walk_pair_counts(g, r);
    for (int p = 1; p <= pmax; ++p) {
      // w_r(u,v) is the (u,v) entry of A^{r-1}, so the walk lengths add to
      // p + r - 1.
      for (int u = 1; u <= n; ++u) {
        IdentityCheck c{"pair_row_extension", p, 0, r, u, 0, table.at(p + r - 1, u)};
        for (int v = 1; v <= n; ++v) c.lhs += pairs(u, v) * table.at(p, v);
        report.checks.push_back(std::move(c));
      }
      for (int q = 1; q <= qmax; ++q) {
        IdentityCheck c{"pair_bilinear", p, q, r, 0, 0, table.total(p + q + r - 2)};
        for (int u = 1; u <= n; ++u)
          for (int v = 1; v <= n; ++v) c.lhs += pairs(u, v) * table.at(p, u) * table.at(q, v);
        report.checks.push_back(std::move(c));
      }
    }
  }
  return report;
}

}  // namespace walkspec
