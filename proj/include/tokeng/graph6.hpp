#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tokeng/graph.hpp"

namespace tokeng {

/// Malformed graph6 input; `offset` is the byte position of the first bad
/// byte within the line.
struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& what, std::size_t offset_)
      : std::runtime_error(what + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
  std::size_t offset;
};

/// Short-form graph6: one order byte (order + 63, order <= 62) followed by
/// the upper-triangle adjacency bitmap, column by column, packed into
/// 6-bit groups (most significant bit first) and offset by 63.
inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line", 0);
  const unsigned char first = static_cast<unsigned char>(line[0]);
  if (first == 126) throw Graph6Error("long-form graph6 (order > 62) is not supported", 0);
  if (first < 63 || first > 125) throw Graph6Error("order byte out of range", 0);
  const int order = first - 63;
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t want = 1 + (bits + 5) / 6;
  if (line.size() != want)
    throw Graph6Error("expected " + std::to_string(want) + " bytes for order " +
                          std::to_string(order) + ", got " + std::to_string(line.size()),
                      line.size() < want ? line.size() : want);
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int col = 2; col <= order; ++col) {
    for (int row = 1; row < col; ++row, ++bit) {
      const std::size_t byte_pos = 1 + bit / 6;
      const unsigned char c = static_cast<unsigned char>(line[byte_pos]);
      if (c < 63 || c > 126) throw Graph6Error("data byte out of range", byte_pos);
      if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(row, col);
    }
  }
  return Graph(order, edges);
}

inline std::string emit_graph6(const Graph& g) {
  if (g.order() > 62)
    throw std::invalid_argument("graph6 short form only covers orders up to 62");
  std::string out;
  out.push_back(static_cast<char>(g.order() + 63));
  int acc = 0;
  int filled = 0;
  for (int col = 2; col <= g.order(); ++col) {
    for (int row = 1; row < col; ++row) {
      acc = acc << 1 | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace tokeng
