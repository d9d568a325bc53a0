#include "walkspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace walkspec {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("graph must have at least one vertex, got n=" + std::to_string(n));
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->adjacency.assign(static_cast<std::size_t>(n) * n, 0);
  impl->neighbors.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GraphError("vertex id out of range in edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ") for n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    impl->adjacency[static_cast<std::size_t>(u - 1) * n + (v - 1)] = 1;
    impl->adjacency[static_cast<std::size_t>(v - 1) * n + (u - 1)] = 1;
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (impl->adjacency[static_cast<std::size_t>(u - 1) * n + (v - 1)] != 0) {
        impl->neighbors[u - 1].push_back(v);
        if (u < v) impl->edges.emplace_back(u, v);
      }
    }
  }
  return Graph(std::move(impl));
}

void Graph::check_vertex(int u) const {
  if (u < 1 || u > impl_->n) {
    throw GraphError("vertex id " + std::to_string(u) + " out of range 1.." +
                     std::to_string(impl_->n));
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return impl_->adjacency[static_cast<std::size_t>(u - 1) * impl_->n + (v - 1)] != 0;
}

int Graph::degree(int u) const {
  check_vertex(u);
  return static_cast<int>(impl_->neighbors[u - 1].size());
}

std::span<const int> Graph::neighbors(int u) const {
  check_vertex(u);
  return impl_->neighbors[u - 1];
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(impl_->n);
  for (int u = 0; u < impl_->n; ++u) d[u] = static_cast<int>(impl_->neighbors[u].size());
  return d;
}

int Graph::max_degree() const {
  auto d = degrees();
  return *std::max_element(d.begin(), d.end());
}

int Graph::min_degree() const {
  auto d = degrees();
  return *std::min_element(d.begin(), d.end());
}

bool Graph::connected() const {
  std::vector<char> seen(impl_->n, 0);
  std::queue<int> frontier;
  frontier.push(1);
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : impl_->neighbors[u - 1]) {
      if (seen[v - 1] == 0) {
        seen[v - 1] = 1;
        ++count;
        frontier.push(v);
      }
    }
  }
  return count == impl_->n;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> index(impl_->n + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    if (index[vertices[i]] != 0) throw GraphError("repeated vertex in induced subgraph");
    index[vertices[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> sub;
  for (const auto& [u, v] : impl_->edges) {
    if (index[u] != 0 && index[v] != 0) sub.emplace_back(index[u], index[v]);
  }
  return from_edges(static_cast<int>(vertices.size()), sub);
}

Graph Graph::relabeled(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != impl_->n) {
    throw GraphError("relabeling must list every vertex exactly once");
  }
  return induced(order);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

}  // namespace walkspec

namespace walkspec {

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> result;
  for (int s = 1; s <= n; ++s) {
    if (seen[s] != 0) continue;
    std::vector<int> members;
    std::queue<int> frontier;
    frontier.push(s);
    seen[s] = 1;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      members.push_back(u);
      for (int w : g.neighbors(u)) {
        if (seen[w] == 0) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

}  // namespace walkspec
