#include "walkspec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace walkspec {

namespace {

using Masks = std::vector<std::uint32_t>;

Masks neighbor_masks(const Graph& g) {
  Masks masks(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    masks[u - 1] |= 1u << (v - 1);
    masks[v - 1] |= 1u << (u - 1);
  }
  return masks;
}

std::uint64_t code_for_order(const Masks& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint32_t row = adj[order[j]];
    for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> order[i]) & 1u);
  }
  return code;
}

// Iterated degree refinement with canonical relabelling of colours.
std::vector<int> refined_colors(const Masks& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(color[v]);
      std::vector<int> nbr;
      for (int w = 0; w < n; ++w)
        if ((adj[v] >> w) & 1u) nbr.push_back(color[w]);
      std::sort(nbr.begin(), nbr.end());
      signature[v].insert(signature[v].end(), nbr.begin(), nbr.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (int v = 0; v < n; ++v) color[v] = rank[signature[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

void search_cells(const Masks& adj, std::vector<std::vector<int>>& cells, std::size_t cell,
                  std::vector<int>& order, std::uint64_t& best, std::vector<int>& best_order) {
  if (cell == cells.size()) {
    const std::uint64_t code = code_for_order(adj, order);
    if (best_order.empty() || code < best) {
      best = code;
      best_order = order;
    }
    return;
  }
  auto& members = cells[cell];
  std::sort(members.begin(), members.end());
  do {
    const std::size_t base = order.size();
    order.insert(order.end(), members.begin(), members.end());
    search_cells(adj, cells, cell + 1, order, best, best_order);
    order.resize(base);
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  std::vector<int> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return code_for_order(neighbor_masks(g), identity);
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw GraphError("canonical form supports at most 8 vertices");
  }
  const Masks adj = neighbor_masks(g);
  const auto color = refined_colors(adj);
  const int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> cells(classes);
  for (int v = 0; v < g.order(); ++v) cells[color[v]].push_back(v);
  std::vector<int> order;
  std::vector<int> best_order;
  std::uint64_t best = 0;
  search_cells(adj, cells, 0, order, best, best_order);
  CanonicalForm form;
  form.code = best;
  for (int v : best_order) form.order.push_back(v + 1);
  return form;
}

namespace {

std::vector<Graph> all_graphs(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Graph>> found;
  if (n == 1) {
    found.push_back({{0, 0}, Graph::from_edges(1, {})});
  } else {
    // Every graph on n vertices is a graph on n-1 vertices plus one vertex.
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& base : all_graphs(n - 1)) {
      for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
        std::vector<Edge> edges = base.edges();
        for (int v = 0; v < n - 1; ++v)
          if ((subset >> v) & 1u) edges.emplace_back(v + 1, n);
        const Graph candidate = Graph::from_edges(n, edges);
        const CanonicalForm form = canonical_form(candidate);
        if (seen.insert(form.code).second) {
          found.push_back({{candidate.size(), form.code}, candidate.relabeled(form.order)});
        }
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> graphs;
  graphs.reserve(found.size());
  for (auto& entry : found) graphs.push_back(std::move(entry.second));
  std::lock_guard lock(mutex);
  cache.emplace(n, graphs);
  return graphs;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw GraphError("enumeration supports 1 <= n <= 8, got n=" + std::to_string(n));
  }
  std::vector<Graph> graphs = all_graphs(n);
  if (connected_only) {
    std::erase_if(graphs, [](const Graph& g) { return !g.connected(); });
  }
  return graphs;
}

std::vector<Graph> enumerate_corpus(int max_n, bool connected_only) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= max_n; ++n) {
    auto graphs = enumerate_graphs(n, connected_only);
    corpus.insert(corpus.end(), graphs.begin(), graphs.end());
  }
  return corpus;
}

}  // namespace walkspec
