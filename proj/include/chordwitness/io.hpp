#pragma once

// graph6 and JSON edge-list serialization.
//
// graph6: N(n) followed by the upper triangle of the adjacency matrix taken
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian
// into 6-bit groups, each offset by 63. n <= 62 uses one header byte,
// n <= 258047 uses '~' plus three bytes.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chordwitness/graph.hpp"

namespace chordwitness {

inline constexpr int kGraph6MaxOrder = 258047;

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw Error(ErrorKind::invalid_input, "graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Parses one graph6 string. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::parse, "graph6: empty input");

  auto value = [&](std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Error(ErrorKind::parse, "graph6: byte out of range at offset " + std::to_string(pos));
    return static_cast<int>(c) - 63;
  };

  std::size_t pos = 0;
  int n = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw Error(ErrorKind::parse, "graph6: truncated size header");
    if (value(1) == 63) throw Error(ErrorKind::parse, "graph6: orders above 258047 are not supported");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  }

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw Error(ErrorKind::parse, "graph6: truncated bit vector");
  if (text.size() - pos > bytes) throw Error(ErrorKind::parse, "graph6: trailing data");

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) pairs.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

/// Reads {"n": int, "edges": [[u,v], ...]}.
inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorKind::parse, "graph JSON: expected object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw Error(ErrorKind::parse, "graph JSON: \"n\" must be an integer");
  if (!j["edges"].is_array()) throw Error(ErrorKind::parse, "graph JSON: \"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorKind::parse, "graph JSON: each edge must be a pair of integers");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edge_list(j["n"].get<int>(), pairs);
}

inline Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

}  // namespace chordwitness
