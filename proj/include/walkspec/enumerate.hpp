#pragma once

#include <cstdint>
#include <vector>

#include "walkspec/graph.hpp"

namespace walkspec {

inline constexpr int kMaxEnumerationOrder = 8;

/// Canonical form of a graph with at most 8 vertices.
struct CanonicalForm {
  /// Upper-triangle adjacency bits in graph6 order, first bit most
  /// significant; minimal over all relabelings.
  std::uint64_t code = 0;
  /// Relabeling attaining the code: new vertex i is old vertex order[i-1].
  std::vector<int> order;
};

/// Canonical form via colour refinement followed by an exhaustive search over
/// relabelings that respect the refined colour classes. Colour classes are
/// isomorphism invariant, so isomorphic graphs get identical codes.
CanonicalForm canonical_form(const Graph& g);

/// Upper-triangle code of g under its own labeling.
std::uint64_t adjacency_code(const Graph& g);

/// One canonical representative per isomorphism class of graphs on exactly n
/// vertices, ordered by (edge count, canonical code). 1 <= n <= 8.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// Union of enumerate_graphs(k, connected_only) for k = 1..max_n.
std::vector<Graph> enumerate_corpus(int max_n, bool connected_only);

}  // namespace walkspec
