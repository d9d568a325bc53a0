#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "walkspec/graph.hpp"

namespace walkspec {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Edge-list text: an optional header line `n <int>`, then one `u v` pair per
/// line with 1-based ids. Blank lines and lines starting with '#' are skipped.
/// Without a header the order is the largest id seen.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

/// Standard graph6 (orders up to 258047; no sparse6). A leading ">>graph6<<"
/// header is accepted.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// Reads one graph6 graph per non-blank line; errors carry the line number.
std::vector<Graph> parse_graph6_stream(std::istream& in);

enum class GraphFormat { edgelist, graph6 };
GraphFormat parse_format(std::string_view name);
/// Reads every graph in `text` (one for edgelist, one per line for graph6).
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);

}  // namespace walkspec
