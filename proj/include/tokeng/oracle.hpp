#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tokeng/graph.hpp"

namespace tokeng {

/// Verdict of a cycle/path check. On reject, `reason` names the first
/// violated condition and `position` the offending index (-1 for
/// whole-sequence conditions).
struct SequenceCheck {
  bool ok = false;
  std::string reason;
  int position = -1;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline SequenceCheck check_hamiltonian_walk(const Graph& g, const std::vector<int>& seq,
                                            bool closed) {
  if (seq.empty()) return {false, "sequence is empty", -1};
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int p = 0; p < static_cast<int>(seq.size()); ++p) {
    const int v = seq[static_cast<std::size_t>(p)];
    if (v < 1 || v > g.order())
      return {false, "vertex id " + std::to_string(v) + " out of range", p};
    if (seen[static_cast<std::size_t>(v)])
      return {false, "vertex " + std::to_string(v) + " visited twice", p};
    seen[static_cast<std::size_t>(v)] = 1;
    if (p > 0 && !g.has_edge(seq[static_cast<std::size_t>(p - 1)], v))
      return {false,
              "pair (" + std::to_string(seq[static_cast<std::size_t>(p - 1)]) + "," +
                  std::to_string(v) + ") is not an edge",
              p};
  }
  if (static_cast<int>(seq.size()) != g.order())
    return {false,
            "sequence covers " + std::to_string(seq.size()) + " of " +
                std::to_string(g.order()) + " vertices",
            -1};
  if (closed) {
    if (seq.size() < 3) return {false, "a cycle needs at least 3 vertices", -1};
    if (!g.has_edge(seq.back(), seq.front()))
      return {false,
              "closing edge {" + std::to_string(seq.back()) + "," +
                  std::to_string(seq.front()) + "} missing",
              static_cast<int>(seq.size()) - 1};
  }
  return {true, "", -1};
}

}  // namespace detail

/// Accepts iff seq lists every vertex exactly once, consecutive pairs are
/// edges, and the last-first pair is an edge.
inline SequenceCheck is_hamiltonian_cycle(const Graph& g, const std::vector<int>& seq) {
  return detail::check_hamiltonian_walk(g, seq, true);
}

inline SequenceCheck is_hamiltonian_path(const Graph& g, const std::vector<int>& seq) {
  return detail::check_hamiltonian_walk(g, seq, false);
}

enum class SearchStatus { found, none, inconclusive };

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
};

/// `none` is a definitive answer; `inconclusive` means the node budget ran
/// out first. The two are never conflated.
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::vector<int> sequence;
  std::uint64_t expansions = 0;

  bool found() const { return status == SearchStatus::found; }
};

namespace detail {

class HamiltonianSearch {
 public:
  HamiltonianSearch(const Graph& g, std::uint64_t budget, bool want_cycle)
      : g_(g),
        budget_(budget),
        want_cycle_(want_cycle),
        visited_(static_cast<std::size_t>(g.order()) + 1, 0),
        reached_(static_cast<std::size_t>(g.order()) + 1, 0) {}

  enum class Step { found, exhausted, aborted };

  Step run_from(int start) {
    path_.assign(1, start);
    std::fill(visited_.begin(), visited_.end(), 0);
    visited_[static_cast<std::size_t>(start)] = 1;
    return extend();
  }

  const std::vector<int>& path() const { return path_; }
  std::uint64_t expansions() const { return expansions_; }

 private:
  Step extend() {
    if (++expansions_ > budget_) return Step::aborted;
    const int u = path_.back();
    if (static_cast<int>(path_.size()) == g_.order()) {
      if (!want_cycle_) return Step::found;
      return g_.has_edge(u, path_.front()) ? Step::found : Step::exhausted;
    }
    if (pruned(u)) return Step::exhausted;
    for (int y : g_.neighbors(u)) {  // ascending: deterministic output
      if (visited_[static_cast<std::size_t>(y)]) continue;
      visited_[static_cast<std::size_t>(y)] = 1;
      path_.push_back(y);
      Step s = extend();
      if (s != Step::exhausted) return s;
      path_.pop_back();
      visited_[static_cast<std::size_t>(y)] = 0;
    }
    return Step::exhausted;
  }

  // Sound prunes only: a branch is cut when no completion can exist.
  //  (1) every unvisited vertex must be reachable from the endpoint through
  //      unvisited vertices;
  //  (2) an unvisited vertex's remaining cycle/path neighbors can only be
  //      unvisited vertices, the endpoint, or (cycles) the anchor; a cycle
  //      needs two of them per vertex, a path tolerates a single vertex of
  //      usable degree one (the far end);
  //  (3) cycles: the anchor must keep at least one unvisited neighbor.
  bool pruned(int endpoint) {
    const int anchor = path_.front();
    const int unvisited = g_.order() - static_cast<int>(path_.size());

    std::fill(reached_.begin(), reached_.end(), 0);
    stack_.clear();
    int hit = 0;
    for (int y : g_.neighbors(endpoint)) {
      if (!visited_[static_cast<std::size_t>(y)] && !reached_[static_cast<std::size_t>(y)]) {
        reached_[static_cast<std::size_t>(y)] = 1;
        ++hit;
        stack_.push_back(y);
      }
    }
    while (!stack_.empty()) {
      int x = stack_.back();
      stack_.pop_back();
      for (int y : g_.neighbors(x)) {
        if (!visited_[static_cast<std::size_t>(y)] && !reached_[static_cast<std::size_t>(y)]) {
          reached_[static_cast<std::size_t>(y)] = 1;
          ++hit;
          stack_.push_back(y);
        }
      }
    }
    if (hit != unvisited) return true;

    bool anchor_reachable = false;
    int weak = 0;  // unvisited vertices with a single usable neighbor
    for (int x = 1; x <= g_.order(); ++x) {
      if (visited_[static_cast<std::size_t>(x)]) continue;
      int usable = 0;
      bool adj_anchor = false;
      for (int y : g_.neighbors(x)) {
        if (!visited_[static_cast<std::size_t>(y)] || y == endpoint) ++usable;
        if (y == anchor) adj_anchor = true;
      }
      if (want_cycle_) {
        if (adj_anchor) {
          anchor_reachable = true;
          if (anchor != endpoint) ++usable;
        }
        if (usable < 2) return true;
      } else {
        if (usable == 0) return true;
        if (usable == 1 && ++weak > 1) return true;
      }
    }
    if (want_cycle_ && !anchor_reachable) return true;
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  bool want_cycle_;
  std::uint64_t expansions_ = 0;
  std::vector<char> visited_;
  std::vector<char> reached_;
  std::vector<int> path_;
  std::vector<int> stack_;
};

}  // namespace detail

/// Exhaustive backtracking search for a Hamiltonian cycle, anchored at
/// vertex 1, neighbors in ascending id order.
inline SearchResult find_hamiltonian_cycle(const Graph& g, const SearchOptions& opt = {}) {
  SearchResult out;
  if (g.order() < 3) return out;  // no cycle can exist
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) < 2) return out;
  }
  detail::HamiltonianSearch search(g, opt.node_budget, /*want_cycle=*/true);
  auto step = search.run_from(1);
  out.expansions = search.expansions();
  if (step == detail::HamiltonianSearch::Step::found) {
    out.status = SearchStatus::found;
    out.sequence = search.path();
  } else if (step == detail::HamiltonianSearch::Step::aborted) {
    out.status = SearchStatus::inconclusive;
  }
  return out;
}

/// Exhaustive Hamiltonian-path search over all start vertices, sharing one
/// node budget.
inline SearchResult find_hamiltonian_path(const Graph& g, const SearchOptions& opt = {}) {
  SearchResult out;
  if (g.order() < 1) return out;
  if (g.order() == 1) {
    out.status = SearchStatus::found;
    out.sequence = {1};
    out.expansions = 1;
    return out;
  }
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) < 1) return out;
  }
  detail::HamiltonianSearch search(g, opt.node_budget, /*want_cycle=*/false);
  for (int start = 1; start <= g.order(); ++start) {
    auto step = search.run_from(start);
    out.expansions = search.expansions();
    if (step == detail::HamiltonianSearch::Step::found) {
      out.status = SearchStatus::found;
      out.sequence = search.path();
      return out;
    }
    if (step == detail::HamiltonianSearch::Step::aborted) {
      out.status = SearchStatus::inconclusive;
      return out;
    }
  }
  return out;
}

struct CutCheck {
  std::size_t components = 0;
  std::size_t cut_size = 0;
  bool refutes_hamiltonicity = false;
};

/// Counts components of g - s. More components than |s| refutes
/// Hamiltonicity (removing |s| vertices from a cycle leaves at most |s|
/// pieces).
inline CutCheck check_cut_certificate(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("cut certificate needs a nonempty vertex set");
  auto sub = delete_vertices(g, s);
  auto dedup = s;
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  CutCheck out;
  out.components = connected_components(sub.graph).size();
  out.cut_size = dedup.size();
  out.refutes_hamiltonicity = out.components > out.cut_size;
  return out;
}

}  // namespace tokeng
