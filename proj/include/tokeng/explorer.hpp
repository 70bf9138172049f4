#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tokeng/graph.hpp"
#include "tokeng/graph6.hpp"
#include "tokeng/multiset.hpp"
#include "tokeng/oracle.hpp"

namespace tokeng {

enum class TriState { yes, no, inconclusive };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "inconclusive";
  }
}

inline TriState tri_state_of(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return TriState::yes;
    case SearchStatus::none: return TriState::no;
    default: return TriState::inconclusive;
  }
}

/// One scanned graph: Hamiltonicity of the base graph and of its
/// k-multiset graph. `graph` is the graph6 line (round-trips through
/// parse_graph6).
struct SearchRecord {
  std::string graph;
  int order = 0;
  int k = 0;
  TriState ham_g = TriState::inconclusive;
  TriState ham_mk = TriState::inconclusive;
  std::int64_t elapsed_ms = 0;
  bool budget_hit = false;
};

namespace detail {

inline void append_json_string(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

}  // namespace detail

/// Field order is part of the record format: graph, order, k, ham_g,
/// ham_mk, elapsed_ms, budget_hit. One line, no trailing newline.
inline std::string to_json_line(const SearchRecord& r) {
  std::string out = "{\"graph\":";
  detail::append_json_string(out, r.graph);
  out += ",\"order\":" + std::to_string(r.order);
  out += ",\"k\":" + std::to_string(r.k);
  out += ",\"ham_g\":\"" + std::string(to_string(r.ham_g)) + "\"";
  out += ",\"ham_mk\":\"" + std::string(to_string(r.ham_mk)) + "\"";
  out += ",\"elapsed_ms\":" + std::to_string(r.elapsed_ms);
  out += ",\"budget_hit\":";
  out += r.budget_hit ? "true" : "false";
  out += "}";
  return out;
}

struct EnumerateOptions {
  bool connected_only = false;
  int order_cap = 6;  // 2^15 labeled graphs; raise deliberately to go past it
};

/// All labeled simple graphs on {1..order}, in ascending edge-mask order.
/// Bit t of the mask is the t-th edge of the lexicographic edge list
/// (1,2),(1,3),...,(1,order),(2,3),...
template <typename F>
void for_each_labeled_graph(int order, const EnumerateOptions& opt, F&& fn) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (order > opt.order_cap)
    throw std::invalid_argument("order " + std::to_string(order) + " exceeds the cap of " +
                                std::to_string(opt.order_cap));
  std::vector<std::pair<int, int>> slots;
  for (int a = 1; a <= order; ++a)
    for (int b = a + 1; b <= order; ++b) slots.emplace_back(a, b);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t t = 0; t < slots.size(); ++t)
      if (mask >> t & 1) edges.push_back(slots[t]);
    Graph g(order, edges);
    if (opt.connected_only && !is_connected(g)) continue;
    fn(g);
  }
}

inline std::vector<Graph> enumerate_labeled_graphs(int order, const EnumerateOptions& opt = {}) {
  std::vector<Graph> out;
  for_each_labeled_graph(order, opt, [&out](const Graph& g) { out.push_back(g); });
  return out;
}

/// Cheap isomorphism-ish key: order, sorted degree sequence, and the
/// sorted multiset of endpoint-degree pairs. Collisions across true
/// isomorphism classes are possible; equal keys are only a heuristic.
inline std::string approx_iso_key(const Graph& g) {
  std::vector<int> degs;
  for (int v = 1; v <= g.order(); ++v) degs.push_back(g.degree(v));
  std::sort(degs.begin(), degs.end());
  std::vector<std::pair<int, int>> edge_keys;
  for (const auto& [a, b] : g.edges()) {
    int da = g.degree(a), db = g.degree(b);
    edge_keys.emplace_back(std::min(da, db), std::max(da, db));
  }
  std::sort(edge_keys.begin(), edge_keys.end());
  std::string key = "n" + std::to_string(g.order()) + ";d";
  for (int d : degs) key += std::to_string(d) + ",";
  key += ";e";
  for (const auto& [a, b] : edge_keys)
    key += std::to_string(a) + "-" + std::to_string(b) + ",";
  return key;
}

/// Keeps the first graph of each approx_iso_key class, preserving order.
inline std::vector<Graph> dedup_by_approx_key(const std::vector<Graph>& graphs) {
  std::vector<Graph> out;
  std::vector<std::string> seen;
  for (const auto& g : graphs) {
    std::string key = approx_iso_key(g);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(std::move(key));
      out.push_back(g);
    }
  }
  return out;
}

struct ScanOptions {
  SearchOptions search;
  BigGraphLimits limits;
  int jobs = 1;
};

inline SearchRecord scan_one(const Graph& g, int k, const ScanOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord rec;
  rec.graph = emit_graph6(g);
  rec.order = g.order();
  rec.k = k;
  SearchResult on_g = find_hamiltonian_cycle(g, opt.search);
  LabeledBigGraph big = build_big_graph(g, k, BigKind::multiset, opt.limits);
  SearchResult on_mk = find_hamiltonian_cycle(big.graph, opt.search);
  rec.ham_g = tri_state_of(on_g.status);
  rec.ham_mk = tri_state_of(on_mk.status);
  rec.budget_hit =
      on_g.status == SearchStatus::inconclusive || on_mk.status == SearchStatus::inconclusive;
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

/// One record per input graph, in input order regardless of worker count.
/// Inconclusive searches become records, never dropped. The first worker
/// exception is rethrown after all workers stop.
inline std::vector<SearchRecord> scan(const std::vector<Graph>& graphs, int k,
                                      const ScanOptions& opt = {}) {
  std::vector<SearchRecord> out(graphs.size());
  if (graphs.empty()) return out;
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(graphs.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = scan_one(graphs[i], k, opt);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= graphs.size()) return;
      try {
        out[idx] = scan_one(graphs[idx], k, opt);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        next.store(graphs.size());
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace tokeng
