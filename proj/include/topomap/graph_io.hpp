#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "topomap/errors.hpp"
#include "topomap/graph.hpp"
#include "topomap/io_util.hpp"

namespace topomap {

// Plain edge-list format: first meaningful line "n=<count>", then one
// "i j" pair per line. Blank lines and '#' comments are tolerated on read;
// the writer emits neither.
inline Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto lines = split_lines(text);
  const std::string name = path.string();

  int n = -1;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    std::string_view line = lines[li];
    // strip leading spaces/tabs
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    if (n < 0) {
      if (line.substr(0, 2) != "n=")
        throw ParseError(name, line_no, "expected 'n=<count>' before any edges");
      long long count = 0;
      if (!parse_int(line.substr(2), count) || count < 1)
        throw ParseError(name, line_no, "bad node count '" + std::string(line.substr(2)) + "'");
      n = static_cast<int>(count);
      continue;
    }

    std::vector<std::string_view> tokens;
    for (const auto& t : split(line, ' '))
      if (!t.empty()) tokens.push_back(t);
    if (tokens.size() != 2)
      throw ParseError(name, line_no, "expected two node indices, got '" + std::string(line) + "'");
    long long a = 0;
    long long b = 0;
    if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b))
      throw ParseError(name, line_no, "bad node index");
    if (a == b) throw ParseError(name, line_no, "self-loop at node " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(name, line_no, "node index out of range for n=" + std::to_string(n));
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw ParseError(name, lines.empty() ? 1 : lines.size(), "missing 'n=<count>' line");
  try {
    return Graph::from_edges(n, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(name, lines.size(), e.what());  // duplicate edges land here
  }
}

inline void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::string out = "n=" + std::to_string(g.n) + '\n';
  for (const auto& [a, b] : g.edges)
    out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
  write_text_file(path, out);
}

}  // namespace topomap
