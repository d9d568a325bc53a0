#include "walkspec/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "walkspec/clique.hpp"

namespace walkspec {

std::vector<Component> component_split(const Graph& g, const CertifyOptions& options) {
  std::vector<Component> parts;
  for (auto& members : connected_components(g)) {
    Graph sub = g.induced(members);
    CertifiedInterval mu = spectral_radius_certified(sub, options);
    parts.push_back({std::move(sub), std::move(members), mu});
  }
  return parts;
}

namespace {

// w_3(u) = sum of neighbour degrees.
std::vector<long> neighbor_degree_sums(const Graph& g) {
  std::vector<long> s(g.order(), 0);
  for (int u = 1; u <= g.order(); ++u)
    for (int v : g.neighbors(u)) s[u - 1] += g.degree(v);
  return s;
}

// Same average degree for u and v, cross-multiplied.
bool same_average(const std::vector<long>& w3, const Graph& g, int u, int v) {
  return w3[u - 1] * g.degree(v) == w3[v - 1] * g.degree(u);
}

// Graph-level "bipartite with one value per side". `key(u)` returns a value
// comparable with ==. Each component contributes its two side-value sets;
// the orientation of every component is free.
template <class Key>
bool sides_constant(const Graph& g, const std::vector<int>& side, Key key) {
  using Value = decltype(key(1));
  struct Sides {
    std::optional<Value> a, b;
    bool ok = true;
  };
  std::vector<Sides> per_component;
  for (const auto& members : connected_components(g)) {
    Sides s;
    for (int u : members) {
      auto& slot = side[u - 1] == 0 ? s.a : s.b;
      const Value value = key(u);
      if (!slot) {
        slot = value;
      } else if (!(*slot == value)) {
        s.ok = false;
      }
    }
    if (!s.ok) return false;
    per_component.push_back(std::move(s));
  }
  auto fits = [](const std::optional<Value>& want, const std::optional<Value>& have) {
    return !have || !want || *want == *have;
  };
  // Try both orientations of the first component as the global sides and
  // greedily widen them; components with an empty side match either way.
  for (int flip = 0; flip < 2; ++flip) {
    std::optional<Value> left = flip == 0 ? per_component[0].a : per_component[0].b;
    std::optional<Value> right = flip == 0 ? per_component[0].b : per_component[0].a;
    bool ok = true;
    for (std::size_t c = 1; c < per_component.size() && ok; ++c) {
      const auto& s = per_component[c];
      if (fits(left, s.a) && fits(right, s.b)) {
        if (!left) left = s.a;
        if (!right) right = s.b;
      } else if (fits(left, s.b) && fits(right, s.a)) {
        if (!left) left = s.b;
        if (!right) right = s.a;
      } else {
        ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_regular(const Graph& g) {
  const auto d = g.degrees();
  return std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); });
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 1; s <= n; ++s) {
    if (side[s - 1] >= 0) continue;
    side[s - 1] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (side[w - 1] < 0) {
          side[w - 1] = 1 - side[u - 1];
          frontier.push(w);
        } else if (side[w - 1] == side[u - 1]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_semiregular(const Graph& g) {
  const auto side = bipartition(g);
  if (!side) return false;
  return sides_constant(g, *side, [&](int u) { return g.degree(u); });
}

std::optional<bool> is_pseudo_regular(const Graph& g) {
  if (g.has_isolated_vertex()) return std::nullopt;
  const auto w3 = neighbor_degree_sums(g);
  for (int u = 2; u <= g.order(); ++u)
    if (!same_average(w3, g, 1, u)) return false;
  return true;
}

std::optional<bool> is_pseudo_semiregular(const Graph& g) {
  if (g.has_isolated_vertex()) return std::nullopt;
  const auto side = bipartition(g);
  if (!side) return false;
  const auto w3 = neighbor_degree_sums(g);
  return sides_constant(g, *side, [&](int u) { return make_rational(w3[u - 1], BigInt(g.degree(u))); });
}

RegularityProfile profile(const Graph& g) {
  RegularityProfile p;
  p.degrees = g.degrees();
  if (!g.has_isolated_vertex()) {
    const auto w3 = neighbor_degree_sums(g);
    for (int u = 1; u <= g.order(); ++u) {
      p.average_degrees.push_back(make_rational(w3[u - 1], g.degree(u)));
    }
    p.min_average_degree = *std::min_element(p.average_degrees.begin(), p.average_degrees.end());
    p.max_average_degree = *std::max_element(p.average_degrees.begin(), p.average_degrees.end());
  }
  p.is_regular = is_regular(g);
  if (auto side = bipartition(g)) {
    p.is_bipartite = true;
    p.bipartition = std::move(*side);
  }
  p.is_semiregular = is_semiregular(g);
  p.is_pseudo_regular = is_pseudo_regular(g);
  p.is_pseudo_semiregular = is_pseudo_semiregular(g);
  p.parts = multipartite_parts(g);
  p.is_complete_multipartite = !p.parts.empty();
  p.is_connected = g.connected();
  for (auto& component : component_split(g)) {
    ComponentFlags flags;
    const Graph& c = component.graph;
    flags.vertices = std::move(component.vertices);
    flags.bipartite = bipartition(c).has_value();
    flags.regular = is_regular(c);
    flags.semiregular = is_semiregular(c);
    flags.pseudo_regular = is_pseudo_regular(c);
    flags.pseudo_semiregular = is_pseudo_semiregular(c);
    flags.mu = component.mu;
    p.components.push_back(std::move(flags));
  }
  return p;
}

OrthogonalityVerdict orthogonality_characterization(const Graph& g, const Spectrum& spectrum, double tol) {
  OrthogonalityVerdict v;
  const double mu = spectrum.spectral_radius();
  for (const auto& group : eigenspace_ones_projection(spectrum, tol)) {
    const double magnitude = std::abs(group.value);
    if (magnitude > tol && magnitude < mu - tol) v.projection_mass += group.ones_projection;
  }
  v.projection_zero = v.projection_mass <= tol;
  v.pseudo_regular = is_pseudo_regular(g);
  v.pseudo_semiregular = is_pseudo_semiregular(g);
  v.bipartite = bipartition(g).has_value();
  v.connected = g.connected();
  for (const auto& members : connected_components(g)) {
    if (bipartition(g.induced(members))) v.has_bipartite_component = true;
  }

  auto check = [&](bool applies, bool holds, const std::string& what) {
    if (!applies) return;
    v.findings.push_back(what + (holds ? ": holds" : ": FAILS"));
    v.consistent = v.consistent && holds;
  };
  check(v.pseudo_regular == true, v.projection_zero,
        "pseudo-regular => all-ones orthogonal to eigenspaces with 0<|lambda|<mu");
  check(!v.has_bipartite_component && v.projection_zero && v.pseudo_regular.has_value(), v.pseudo_regular == true,
        "no bipartite component and orthogonality => pseudo-regular");
  check(v.bipartite && v.pseudo_semiregular == true, v.projection_zero,
        "bipartite pseudo-semiregular => orthogonality");
  check(v.bipartite && v.connected && v.projection_zero && v.pseudo_semiregular.has_value(),
        v.pseudo_semiregular == true,
        "connected bipartite and orthogonality => pseudo-semiregular");
  if (v.findings.empty()) v.findings.push_back("no implication applies");
  return v;
}

}  // namespace walkspec
