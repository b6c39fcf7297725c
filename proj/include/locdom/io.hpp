#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locdom/associated_graph.hpp"
#include "locdom/graph.hpp"

namespace locdom {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t location) : std::runtime_error(what), location_(location) {}
  // Byte offset for graph6, 1-based line number for edge lists.
  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

// ---------------------------------------------------------------- graph6

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace detail

// Decodes one graph6 line (an optional ">>graph6<<" prefix is accepted).
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  text = detail::trim(text);
  std::size_t pos = 0;
  if (text.substr(0, header.size()) == header) pos = header.size();

  auto take = [&](const char* what) -> std::uint32_t {
    if (pos >= text.size())
      throw ParseError("graph6: input ends inside the " + std::string(what) + " at byte " + std::to_string(pos), pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) + " at offset " + std::to_string(pos) +
                           " is outside 63..126",
                       pos);
    ++pos;
    return c - 63u;
  };

  std::size_t n = take("size header");
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~')
      throw ParseError("graph6: order above 258047 is not supported", pos);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take("size header");
  }
  if (n > Graph::max_order)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds the supported maximum of " +
                         std::to_string(Graph::max_order),
                     0);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need)
    throw ParseError("graph6: expected " + std::to_string(need) + " adjacency bytes after the header, found " +
                         std::to_string(text.size() - pos),
                     text.size());
  if (text.size() - pos > need)
    throw ParseError("graph6: trailing data at byte " + std::to_string(pos + need), pos + need);

  std::vector<VertexSet> rows(n);
  std::uint32_t chunk = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = take("adjacency");
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1u) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  return Graph::from_rows(std::move(rows));
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  std::uint32_t chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------- edge list

// "n m" on the first line, then m lines "i j" with 0-based endpoints. Blank
// lines are skipped; line numbers in errors count every physical line.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      if (!detail::trim(line).empty()) return line;
    }
    return std::nullopt;
  };
  auto numbers = [&](const std::string& l) {
    std::istringstream fields(l);
    std::vector<long long> out;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value < 0)
        throw ParseError("edge list: '" + tok + "' at line " + std::to_string(lineno) +
                             " is not a non-negative integer",
                         lineno);
      out.push_back(value);
    }
    return out;
  };

  auto head = next_line();
  if (!head) throw ParseError("edge list: missing 'n m' header", lineno + 1);
  const auto nm = numbers(*head);
  if (nm.size() != 2) throw ParseError("edge list: line " + std::to_string(lineno) + " must hold 'n m'", lineno);
  const auto n = static_cast<std::size_t>(nm[0]);
  const auto m = static_cast<std::size_t>(nm[1]);
  if (n > Graph::max_order)
    throw ParseError("edge list: order " + std::to_string(n) + " exceeds the supported maximum of " +
                         std::to_string(Graph::max_order),
                     lineno);

  std::vector<VertexSet> rows(n);
  for (std::size_t e = 0; e < m; ++e) {
    auto l = next_line();
    if (!l)
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e), lineno + 1);
    const auto ij = numbers(*l);
    if (ij.size() != 2)
      throw ParseError("edge list: line " + std::to_string(lineno) + " must hold two endpoints", lineno);
    const auto i = static_cast<std::size_t>(ij[0]);
    const auto j = static_cast<std::size_t>(ij[1]);
    if (i >= n || j >= n)
      throw ParseError("edge list: endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1) + " at line " +
                           std::to_string(lineno),
                       lineno);
    if (i == j) throw ParseError("edge list: self-loop at line " + std::to_string(lineno), lineno);
    rows[i].insert(j);
    rows[j].insert(i);
  }
  if (next_line()) throw ParseError("edge list: unexpected content at line " + std::to_string(lineno), lineno);
  return Graph::from_rows(std::move(rows));
}

inline std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------- documents

enum class GraphFormat { graph6, edge_list };

struct GraphDocument {
  GraphFormat format = GraphFormat::graph6;
  Graph graph;
  std::optional<std::string> name;
};

// An edge list when the first nonblank line is two integers; otherwise one
// graph6 string per nonblank line.
inline std::vector<GraphDocument> parse_documents(std::string_view text) {
  std::vector<GraphDocument> docs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool decided = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = detail::trim(line);
    if (t.empty()) continue;
    if (!decided) {
      decided = true;
      std::istringstream probe{std::string(t)};
      long long a = 0, b = 0;
      std::string rest;
      if ((probe >> a >> b) && !(probe >> rest)) return {{GraphFormat::edge_list, parse_edge_list(text), {}}};
    }
    try {
      docs.push_back({GraphFormat::graph6, parse_graph6(t), std::string(t)});
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")", e.location());
    }
  }
  if (docs.empty()) throw ParseError("no graph found in input", 0);
  return docs;
}

// Reads a file, or standard input when path is "-".
inline std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// ---------------------------------------------------------------- DOT

// G^S drawn bottom-up: one rank per level 0..k anchored by invisible nodes,
// vertices labelled by their bracketed trace, edges by their S-label.
inline std::string export_dot(const AssociatedGraph& ag) {
  std::ostringstream out;
  out << "graph associated {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  const auto levels = ag.levels();
  for (std::size_t j = 0; j < levels.size(); ++j) {
    out << "  { rank=same; level" << j << " [style=invis, label=\"\"];";
    for (Vertex x : levels[j]) out << " v" << x << " [label=\"" << trace_label(ag.trace(x)) << "\"];";
    out << " }\n";
  }
  if (levels.size() > 1) {
    out << "  ";
    for (std::size_t j = 0; j < levels.size(); ++j) out << (j ? " -- " : "") << "level" << j;
    out << " [style=invis];\n";
  }
  for (const LabeledEdge& e : ag.edges())
    out << "  v" << e.x << " -- v" << e.y << " [label=\"" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace locdom
