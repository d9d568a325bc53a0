#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "walkspec/graph.hpp"

namespace walkspec {

Graph complete_multipartite(std::span<const int> parts);
inline Graph complete_multipartite(std::initializer_list<int> parts) {
  return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}.
Graph star_graph(int leaves);
Graph empty_graph(int n);
Graph petersen_graph();
/// Triangle with a pendant vertex attached to vertex 1.
Graph paw_graph();

/// A named generator together with its parameters.
struct GraphFamily {
  enum class Kind { complete_multipartite, path, cycle, complete, star, empty, petersen, paw };
  Kind kind;
  std::vector<int> parameters;

  Graph build() const;
  std::string name() const;

  /// Parses "kind" or "kind:a,b,..." e.g. "complete_multipartite:2,2,1",
  /// "cycle:6", "petersen". Short aliases: kmp, P, C, K, star, empty.
  static GraphFamily parse(std::string_view text);
};

}  // namespace walkspec
