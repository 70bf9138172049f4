#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tokeng {

/// Simple undirected graph on 1-based vertex ids 1..order().
/// Edges are stored canonically as (min,max) pairs in sorted order, so equal
/// graphs serialize identically. Values are immutable after construction and
/// safe to share across threads.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  Graph(int order, std::vector<Edge> edges) : order_(order) {
    if (order < 0) throw std::invalid_argument("graph order must be >= 0");
    for (auto& [a, b] : edges) {
      if (a > b) std::swap(a, b);
      if (a < 1 || b > order)
        throw std::invalid_argument("edge endpoint out of range: {" +
                                    std::to_string(a) + "," + std::to_string(b) + "}");
      if (a == b) throw std::invalid_argument("loops are not allowed");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(order) + 1, {});
    for (auto [a, b] : edges_) {
      adj_[static_cast<std::size_t>(a)].push_back(b);
      adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int order() const { return order_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& nb = adj_[static_cast<std::size_t>(a)];
    return a != b && std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Neighbor ids in ascending order.
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > order_)
      throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
  }

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

enum class BaseKind { path, cycle, empty, complete };

inline Graph make_base_graph(BaseKind kind, int size) {
  if (size < 1) throw std::invalid_argument("graph size must be >= 1");
  std::vector<Graph::Edge> edges;
  switch (kind) {
    case BaseKind::path:
      for (int i = 1; i < size; ++i) edges.emplace_back(i, i + 1);
      break;
    case BaseKind::cycle:
      if (size < 3) throw std::invalid_argument("a cycle graph needs size >= 3");
      for (int i = 1; i < size; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, size);
      break;
    case BaseKind::empty:
      break;
    case BaseKind::complete:
      for (int a = 1; a <= size; ++a)
        for (int b = a + 1; b <= size; ++b) edges.emplace_back(a, b);
      break;
  }
  return Graph(size, std::move(edges));
}

/// Join of two graphs: disjoint union (g2's ids shifted by g1.order()) plus
/// every edge between the two sides.
inline Graph join(const Graph& g1, const Graph& g2) {
  if (g1.order() < 1 || g2.order() < 1)
    throw std::invalid_argument("join needs two nonempty graphs");
  const int shift = g1.order();
  std::vector<Graph::Edge> edges = g1.edges();
  for (auto [a, b] : g2.edges()) edges.emplace_back(a + shift, b + shift);
  for (int a = 1; a <= g1.order(); ++a)
    for (int b = 1; b <= g2.order(); ++b) edges.emplace_back(a, b + shift);
  return Graph(g1.order() + g2.order(), std::move(edges));
}

/// Vertex-id convention for fan graphs: ids 1..n are the path vertices
/// v_1..v_n, ids n+1..n+m are the independent vertices w_1..w_m. The path
/// part comes first so path formulas read off the raw ids.
struct FanLabeling {
  int n = 0;  // path-part size
  int m = 0;  // empty-part size

  int order() const { return n + m; }

  int v(int j) const {
    if (j < 1 || j > n) throw std::invalid_argument("v subscript out of range");
    return j;
  }

  int w(int i) const {
    if (i < 1 || i > m) throw std::invalid_argument("w subscript out of range");
    return n + i;
  }

  bool is_path_vertex(int id) const { return id >= 1 && id <= n; }

  /// "v3" or "w1" for a raw vertex id.
  std::string label(int id) const {
    if (id < 1 || id > order())
      throw std::invalid_argument("vertex id out of range: " + std::to_string(id));
    return is_path_vertex(id) ? "v" + std::to_string(id)
                              : "w" + std::to_string(id - n);
  }
};

struct FanGraph {
  Graph graph;
  FanLabeling labeling;
};

/// Generalized fan F_{m,n}: the join of the empty graph on m vertices with
/// the path on n vertices, labeled per FanLabeling.
inline FanGraph fan_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("fan_graph needs m >= 1 and n >= 1");
  std::vector<Graph::Edge> edges;
  for (int j = 1; j < n; ++j) edges.emplace_back(j, j + 1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) edges.emplace_back(j, n + i);
  return {Graph(n + m, std::move(edges)), FanLabeling{n, m}};
}

/// Partition into maximal connected vertex sets, ordered by smallest member;
/// members ascending.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<int> stack;
  for (int s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int x : g.neighbors(u)) {
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

/// Induced subgraph after removing a vertex set, together with the bijection
/// from the new dense ids back to the original ones.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_id;  // dense id i corresponds to original_id[i-1]
};

inline InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& s) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int v : s) {
    if (v < 1 || v > g.order())
      throw std::invalid_argument("delete_vertices: id out of range: " + std::to_string(v));
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> dense(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<int> kept;
  for (int v = 1; v <= g.order(); ++v) {
    if (!drop[static_cast<std::size_t>(v)]) {
      kept.push_back(v);
      dense[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
    }
  }
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (!drop[static_cast<std::size_t>(a)] && !drop[static_cast<std::size_t>(b)])
      edges.emplace_back(dense[static_cast<std::size_t>(a)], dense[static_cast<std::size_t>(b)]);
  }
  return {Graph(static_cast<int>(kept.size()), std::move(edges)), std::move(kept)};
}

}  // namespace tokeng
