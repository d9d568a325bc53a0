#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "walkspec/numeric.hpp"

namespace walkspec {

class GraphError : public Error {
 public:
  using Error::Error;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on the vertex set {1, ..., n}.
///
/// All public accessors take and return 1-based vertex ids. Copies share the
/// underlying storage, so passing graphs by value is cheap and safe across
/// threads.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
  /// collapse to one edge; self-loops and out-of-range ids throw GraphError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return impl_->n; }
  std::size_t size() const { return impl_->edges.size(); }

  bool adjacent(int u, int v) const;
  int degree(int u) const;
  std::span<const int> neighbors(int u) const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return impl_->edges; }
  std::vector<int> degrees() const;

  int max_degree() const;
  int min_degree() const;
  bool has_isolated_vertex() const { return min_degree() == 0; }
  bool connected() const;

  /// Graph induced on `vertices` (1-based); vertex i of the result is
  /// vertices[i-1].
  Graph induced(std::span<const int> vertices) const;
  /// Relabels so that new vertex i is old vertex order[i-1].
  Graph relabeled(std::span<const int> order) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges() == b.edges();
  }

 private:
  struct Impl {
    int n = 0;
    std::vector<unsigned char> adjacency;
    std::vector<std::vector<int>> neighbors;
    std::vector<Edge> edges;
  };
  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check_vertex(int u) const;

  std::shared_ptr<const Impl> impl_;
};

/// Vertex sets (1-based, ascending) of the connected components, ordered by
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace walkspec
