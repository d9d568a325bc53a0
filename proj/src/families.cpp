#include "walkspec/families.hpp"

#include <charconv>
#include <map>

namespace walkspec {

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw GraphError("complete multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw GraphError("part sizes must be positive");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (part_of[u - 1] != part_of[v - 1]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw GraphError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (int v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i + 1, (i + 1) % 5 + 1);          // outer cycle
    edges.emplace_back(i + 1, i + 6);                    // spokes
    edges.emplace_back(i + 6, (i + 2) % 5 + 6);          // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph paw_graph() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}}); }

namespace {

const std::map<std::string_view, GraphFamily::Kind>& family_names() {
  using K = GraphFamily::Kind;
  static const std::map<std::string_view, K> names = {
      {"complete_multipartite", K::complete_multipartite},
      {"kmp", K::complete_multipartite},
      {"path", K::path},
      {"P", K::path},
      {"cycle", K::cycle},
      {"C", K::cycle},
      {"complete", K::complete},
      {"K", K::complete},
      {"star", K::star},
      {"empty", K::empty},
      {"petersen", K::petersen},
      {"paw", K::paw},
  };
  return names;
}

std::size_t expected_arity(GraphFamily::Kind kind) {
  switch (kind) {
    case GraphFamily::Kind::petersen:
    case GraphFamily::Kind::paw:
      return 0;
    case GraphFamily::Kind::complete_multipartite:
      return static_cast<std::size_t>(-1);
    default:
      return 1;
  }
}

}  // namespace

Graph GraphFamily::build() const {
  const std::size_t arity = expected_arity(kind);
  if (arity != static_cast<std::size_t>(-1) && parameters.size() != arity) {
    throw GraphError("family " + name() + " expects " + std::to_string(arity) + " parameter(s)");
  }
  switch (kind) {
    case Kind::complete_multipartite: return complete_multipartite(parameters);
    case Kind::path: return path_graph(parameters[0]);
    case Kind::cycle: return cycle_graph(parameters[0]);
    case Kind::complete: return complete_graph(parameters[0]);
    case Kind::star: return star_graph(parameters[0]);
    case Kind::empty: return empty_graph(parameters[0]);
    case Kind::petersen: return petersen_graph();
    case Kind::paw: return paw_graph();
  }
  throw GraphError("unknown family");
}

std::string GraphFamily::name() const {
  std::string base;
  switch (kind) {
    case Kind::complete_multipartite: base = "complete_multipartite"; break;
    case Kind::path: base = "path"; break;
    case Kind::cycle: base = "cycle"; break;
    case Kind::complete: base = "complete"; break;
    case Kind::star: base = "star"; break;
    case Kind::empty: base = "empty"; break;
    case Kind::petersen: base = "petersen"; break;
    case Kind::paw: base = "paw"; break;
  }
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    base += (i == 0 ? ':' : ',');
    base += std::to_string(parameters[i]);
  }
  return base;
}

GraphFamily GraphFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const auto it = family_names().find(head);
  if (it == family_names().end()) throw GraphError("unknown graph family '" + std::string(head) + "'");
  GraphFamily family{it->second, {}};
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw GraphError("bad family parameter '" + std::string(token) + "'");
      }
      family.parameters.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return family;
}

}  // namespace walkspec
