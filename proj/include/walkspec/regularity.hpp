#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkspec/graph.hpp"
#include "walkspec/numeric.hpp"
#include "walkspec/spectral.hpp"

namespace walkspec {

/// A connected component with its vertex map back to the parent graph.
struct Component {
  Graph graph;
  /// vertices[i-1] is the parent id of component vertex i.
  std::vector<int> vertices;
  CertifiedInterval mu;
};

std::vector<Component> component_split(const Graph& g, const CertifyOptions& options = {});

/// Structural flags of one connected component. Average-degree flags are
/// undefined (nullopt) on an isolated vertex.
struct ComponentFlags {
  std::vector<int> vertices;
  bool bipartite = false;
  bool regular = false;
  bool semiregular = false;
  std::optional<bool> pseudo_regular;
  std::optional<bool> pseudo_semiregular;
  CertifiedInterval mu;
};

/// Exact degree statistics and regularity flags. "Undefined" flags are
/// represented by nullopt.
struct RegularityProfile {
  std::vector<int> degrees;
  /// sum_{v in N(u)} d(v) / d(u); empty when an isolated vertex exists.
  std::vector<Rational> average_degrees;
  std::optional<Rational> min_average_degree;
  std::optional<Rational> max_average_degree;

  bool is_regular = false;
  bool is_bipartite = false;
  /// Side (0 or 1) per vertex; empty unless bipartite. Each component's
  /// smallest vertex is on side 0.
  std::vector<int> bipartition;
  bool is_semiregular = false;
  std::optional<bool> is_pseudo_regular;
  std::optional<bool> is_pseudo_semiregular;
  bool is_complete_multipartite = false;
  std::vector<std::vector<int>> parts;
  bool is_connected = false;
  std::vector<ComponentFlags> components;
};

RegularityProfile profile(const Graph& g);

/// Individual exact predicates (graph level).
bool is_regular(const Graph& g);
/// 2-colouring; returns the side per vertex or nullopt when an odd cycle
/// exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_semiregular(const Graph& g);
std::optional<bool> is_pseudo_regular(const Graph& g);
std::optional<bool> is_pseudo_semiregular(const Graph& g);

struct OrthogonalityVerdict {
  /// Sum over eigenvalue groups with 0 < |lambda| < mu of the squared
  /// projection of the all-ones vector.
  double projection_mass = 0.0;
  bool projection_zero = false;
  std::optional<bool> pseudo_regular;
  std::optional<bool> pseudo_semiregular;
  bool bipartite = false;
  bool has_bipartite_component = false;
  bool connected = false;
  /// Human-readable list of the implications that applied and held or failed.
  std::vector<std::string> findings;
  bool consistent = true;
};

/// Compares the pseudo-(semi)regularity predicates with the all-ones
/// projections onto eigenspaces strictly inside (0, mu) in absolute value.
OrthogonalityVerdict orthogonality_characterization(const Graph& g, const Spectrum& spectrum,
                                                    double tol = 1e-8);

}  // namespace walkspec
