#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tokeng/fan.hpp"
#include "tokeng/graph.hpp"
#include "tokeng/multiset.hpp"

namespace tokeng {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
  std::size_t line;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t pos = s.find(sep);
    if (pos == std::string_view::npos) {
      out.push_back(s);
      return out;
    }
    out.push_back(s.substr(0, pos));
    s.remove_prefix(pos + 1);
  }
}

inline std::vector<std::string_view> fields(std::string_view s) {
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

inline int parse_int(std::string_view s, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return value;
}

}  // namespace detail

/// Edge-list file:
///   p <order> <edge-count>
///   v <dense-id> <elem,elem,...>     (only for pair/k-set graphs)
///   e <a> <b>
/// Blank lines and '#' comments are skipped on read.
struct EdgeListFile {
  Graph graph = Graph(0, {});
  std::vector<MultisetVertex> vertex_table;  // empty when the file has no v lines
};

inline EdgeListFile read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  int order = -1;
  long long want_edges = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<MultisetVertex> table;
  std::vector<char> table_seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto parts = detail::fields(line);
    if (parts[0] == "p") {
      if (order >= 0) throw ParseError("duplicate p line", line_no);
      if (parts.size() != 3) throw ParseError("p line needs order and edge count", line_no);
      order = detail::parse_int(parts[1], line_no);
      want_edges = detail::parse_int(parts[2], line_no);
      if (order < 0 || want_edges < 0) throw ParseError("negative count in p line", line_no);
      table.assign(static_cast<std::size_t>(order), MultisetVertex{});
      table_seen.assign(static_cast<std::size_t>(order), 0);
    } else if (parts[0] == "v") {
      if (order < 0) throw ParseError("v line before p line", line_no);
      if (parts.size() != 3) throw ParseError("v line needs id and elements", line_no);
      const int id = detail::parse_int(parts[1], line_no);
      if (id < 1 || id > order) throw ParseError("vertex id out of range", line_no);
      if (table_seen[static_cast<std::size_t>(id - 1)])
        throw ParseError("duplicate v line for id " + std::to_string(id), line_no);
      std::vector<int> elems;
      for (auto tok : detail::split(parts[2], ','))
        elems.push_back(detail::parse_int(detail::trim(tok), line_no));
      table[static_cast<std::size_t>(id - 1)] = make_multiset(std::move(elems));
      table_seen[static_cast<std::size_t>(id - 1)] = 1;
    } else if (parts[0] == "e") {
      if (order < 0) throw ParseError("e line before p line", line_no);
      if (parts.size() != 3) throw ParseError("e line needs two endpoints", line_no);
      const int a = detail::parse_int(parts[1], line_no);
      const int b = detail::parse_int(parts[2], line_no);
      if (a < 1 || a > order || b < 1 || b > order)
        throw ParseError("edge endpoint out of range", line_no);
      edges.emplace_back(a, b);
    } else {
      throw ParseError("unknown record '" + std::string(parts[0]) + "'", line_no);
    }
  }
  if (order < 0) throw ParseError("missing p line", line_no == 0 ? 1 : line_no);
  if (static_cast<long long>(edges.size()) != want_edges)
    throw ParseError("p line promises " + std::to_string(want_edges) + " edges, file has " +
                         std::to_string(edges.size()),
                     line_no);
  const bool any_v =
      std::any_of(table_seen.begin(), table_seen.end(), [](char c) { return c != 0; });
  if (any_v &&
      !std::all_of(table_seen.begin(), table_seen.end(), [](char c) { return c != 0; }))
    throw ParseError("vertex table is incomplete", line_no);
  EdgeListFile out;
  out.graph = Graph(order, edges);
  if (any_v) out.vertex_table = std::move(table);
  return out;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
}

inline void write_big_graph(std::ostream& out, const LabeledBigGraph& big) {
  out << "p " << big.graph.order() << ' ' << big.graph.edge_count() << '\n';
  for (int id = 1; id <= big.graph.order(); ++id)
    out << "v " << id << ' ' << big.vertex(id).to_string() << '\n';
  for (const auto& [a, b] : big.graph.edges()) out << "e " << a << ' ' << b << '\n';
}

/// DOT output; `labels` (1-based by vertex id) decorate the nodes when
/// given.
inline void write_dot(std::ostream& out, const Graph& g,
                      const std::vector<std::string>& labels = {}) {
  if (!labels.empty() && static_cast<int>(labels.size()) != g.order())
    throw std::invalid_argument("label table size must match the graph order");
  out << "graph G {\n";
  for (int v = 1; v <= g.order(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[static_cast<std::size_t>(v - 1)] << "\"]";
    out << ";\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
}

/// Reads the DOT subset write_dot emits: integer node ids, optional
/// [..] attribute blocks, `--` edge chains, `;`-separated statements.
inline Graph read_dot(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t open = text.find('{');
  const std::size_t close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("missing braces around the graph body", 1);
  std::string body = text.substr(open + 1, close - open - 1);
  // attribute blocks carry no structure we keep
  while (true) {
    const std::size_t lb = body.find('[');
    if (lb == std::string::npos) break;
    const std::size_t rb = body.find(']', lb);
    if (rb == std::string::npos) throw ParseError("unclosed attribute block", 1);
    body.erase(lb, rb - lb + 1);
  }
  for (char& c : body)
    if (c == '\n' || c == '\t') c = ' ';
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  for (auto stmt_raw : detail::split(body, ';')) {
    auto stmt = detail::trim(stmt_raw);
    if (stmt.empty()) continue;
    std::vector<int> chain;
    std::string_view rest = stmt;
    while (true) {
      const std::size_t dash = rest.find("--");
      auto tok = detail::trim(dash == std::string_view::npos ? rest : rest.substr(0, dash));
      chain.push_back(detail::parse_int(tok, 1));
      if (dash == std::string_view::npos) break;
      rest.remove_prefix(dash + 2);
    }
    for (int id : chain) {
      if (id < 1) throw ParseError("node ids must be positive", 1);
      order = std::max(order, id);
    }
    for (std::size_t i = 1; i < chain.size(); ++i) edges.emplace_back(chain[i - 1], chain[i]);
  }
  return Graph(order, edges);
}

/// Cycle file: "# M2 <fan|join> m=<m> n=<n>" then one vertex per line as
/// "a,b" (fan files use v/w labels, join files plain join ids). The
/// closing edge back to the first line is implicit.
struct CycleFile {
  std::string kind;  // "fan" or "join"
  int m = 0;
  int n = 0;
  CycleSeq cycle;
};

inline void write_cycle_file(std::ostream& out, const std::string& kind, int m, int n,
                             const CycleSeq& c) {
  if (kind != "fan" && kind != "join") throw std::invalid_argument("kind must be fan or join");
  FanLabeling lab{n, m};
  out << "# M2 " << kind << " m=" << m << " n=" << n << '\n';
  for (const auto& v : c.seq) {
    if (kind == "fan")
      out << lab.label(v.elems[0]) << ',' << lab.label(v.elems[1]) << '\n';
    else
      out << v.elems[0] << ',' << v.elems[1] << '\n';
  }
}

namespace detail {

inline int parse_cycle_token(std::string_view tok, int n, std::size_t line) {
  tok = trim(tok);
  if (tok.empty()) throw ParseError("empty vertex token", line);
  if (tok.front() == 'v' || tok.front() == 'w') {
    const int idx = parse_int(tok.substr(1), line);
    if (idx < 1) throw ParseError("label subscript must be positive", line);
    return tok.front() == 'v' ? idx : n + idx;
  }
  return parse_int(tok, line);
}

}  // namespace detail

inline CycleFile read_cycle_file(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  CycleFile out;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (have_header) continue;  // later comments are just comments
      auto parts = detail::fields(line.substr(1));
      if (parts.size() != 4 || parts[0] != "M2" || (parts[1] != "fan" && parts[1] != "join") ||
          parts[2].substr(0, 2) != "m=" || parts[3].substr(0, 2) != "n=")
        throw ParseError("header must be '# M2 <fan|join> m=<m> n=<n>'", line_no);
      out.kind = std::string(parts[1]);
      out.m = detail::parse_int(parts[2].substr(2), line_no);
      out.n = detail::parse_int(parts[3].substr(2), line_no);
      if (out.m < 1 || out.n < 1) throw ParseError("m and n must be positive", line_no);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("vertex line before the header", line_no);
    auto pair = detail::split(line, ',');
    if (pair.size() != 2) throw ParseError("vertex line must be 'a,b'", line_no);
    out.cycle.seq.push_back(make_pair_vertex(detail::parse_cycle_token(pair[0], out.n, line_no),
                                             detail::parse_cycle_token(pair[1], out.n, line_no)));
  }
  if (!have_header) throw ParseError("missing header line", line_no == 0 ? 1 : line_no);
  if (out.cycle.seq.empty()) throw ParseError("cycle file lists no vertices", line_no);
  out.cycle.closed = true;
  return out;
}

/// Certificate file: header, one "S <pair>" line per removed vertex, and
/// the component-count trailer.
inline void write_certificate(std::ostream& out, int m, int n,
                              const std::vector<MultisetVertex>& cut,
                              unsigned long long components) {
  FanLabeling lab{n, m};
  out << "# M2 fan cut m=" << m << " n=" << n << '\n';
  for (const auto& v : cut)
    out << "S " << lab.label(v.elems[0]) << ',' << lab.label(v.elems[1]) << '\n';
  out << "components=" << components << " |S|=" << cut.size() << '\n';
}

enum class GraphFormat { edge_list, graph6, dot };

/// Guesses the format from the first significant line: "p ..." is an edge
/// list, "graph"/"strict" opens DOT, anything else is graph6.
inline GraphFormat detect_graph_format(const std::string& content) {
  std::istringstream in(content);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 2) == "p " || line == "p") return GraphFormat::edge_list;
    if (line.substr(0, 5) == "graph" || line.substr(0, 6) == "strict") return GraphFormat::dot;
    return GraphFormat::graph6;
  }
  throw ParseError("no graph content found", 1);
}

}  // namespace tokeng
