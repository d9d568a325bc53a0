#include "walkspec/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace walkspec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed integer '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
  int n = -1;
  int max_id = 0;
  bool seen_content = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two tokens, got " +
                       std::to_string(tokens.size()));
    }
    if (tokens[0] == "n") {
      if (seen_content) throw ParseError("line " + std::to_string(line_no) + ": header 'n' must come first");
      n = parse_int(tokens[1], line_no);
      if (n < 1) throw ParseError("line " + std::to_string(line_no) + ": vertex count must be positive");
      seen_content = true;
      continue;
    }
    seen_content = true;
    const int u = parse_int(tokens[0], line_no);
    const int v = parse_int(tokens[1], line_no);
    if (u < 1 || v < 1) throw ParseError("line " + std::to_string(line_no) + ": vertex ids are 1-based");
    if (n > 0 && (u > n || v > n)) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id exceeds declared n=" +
                       std::to_string(n));
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  if (n < 0) n = max_id;
  if (n < 1) throw ParseError("edge list declares no vertices");
  return Graph::from_edges(n, edges);
}

std::string emit_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError(std::string("invalid graph6 character '") + c + "'");
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() > 1 && line[1] == '~') throw ParseError("graph6 orders above 258047 are not supported");
    if (line.size() < 4) throw ParseError("truncated graph6 order field");
    n = ((line[1] - 63L) << 12) | ((line[2] - 63L) << 6) | (line[3] - 63L);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6 order must be at least 1");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t needed = (bits + 5) / 6;
  if (line.size() - pos != needed) {
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                     std::to_string(needed));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = line[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i + 1, j + 1);
    }
  }
  // Padding bits must be zero for a canonical encoding.
  for (; k < needed * 6; ++k) {
    const int chunk = line[pos + k / 6] - 63;
    if ((chunk >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw GraphError("graph6 output supports orders up to 258047");
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "graph6") return GraphFormat::graph6;
  throw ParseError("unknown format '" + std::string(name) + "' (expected edgelist or graph6)");
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edgelist) return {parse_edgelist(text)};
  std::istringstream in{std::string(text)};
  return parse_graph6_stream(in);
}

}  // namespace walkspec
