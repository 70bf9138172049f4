#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tokeng/graph.hpp"
#include "tokeng/multiset.hpp"
#include "tokeng/oracle.hpp"

namespace tokeng {

/// An internal consistency check failed while assembling a cycle. This
/// signals a construction bug, never bad user input.
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Ordered pair-vertex sequence; `closed` distinguishes cycles from open
/// segments. Closure is implicit: the last vertex connects back to the
/// first, which is not repeated.
struct CycleSeq {
  std::vector<MultisetVertex> seq;
  bool closed = false;
};

/// Checks a claimed cycle against a freshly built pair graph of the fan.
/// Rejections carry the first failing condition.
inline SequenceCheck verify_fan_cycle(int m, int n, const CycleSeq& c) {
  auto big = build_big_graph(fan_graph(m, n).graph, 2, BigKind::multiset);
  std::vector<int> dense;
  try {
    dense = to_dense(big, c.seq);
  } catch (const std::invalid_argument& e) {
    return {false, e.what(), -1};
  }
  if (!c.closed) return {false, "sequence is not marked closed", -1};
  return is_hamiltonian_cycle(big.graph, dense);
}

namespace detail {

inline void self_verify_fan_cycle(int m, int n, const CycleSeq& c) {
  auto chk = verify_fan_cycle(m, n, c);
  if (!chk.ok)
    throw IntegrityError("constructed cycle rejected by verifier: " + chk.reason +
                         (chk.position >= 0 ? " at position " + std::to_string(chk.position)
                                            : std::string()));
}

}  // namespace detail

/// Segment of the single-hub cycle: {v_i,w_1},{v_i,v_i},{v_i,v_{i+1}},...,
/// {v_i,v_n}. For i = n this is the 2-vertex segment {v_n,w_1},{v_n,v_n}.
/// Fan ids: v_j = j, w_i = n + i.
inline CycleSeq m1_segment(int i, int n) {
  if (n < 1) throw std::invalid_argument("path part must be nonempty");
  if (i < 1 || i > n) throw std::invalid_argument("segment index must lie in 1..n");
  CycleSeq out;
  out.seq.push_back(make_pair_vertex(i, n + 1));
  out.seq.push_back(make_pair_vertex(i, i));
  for (int j = i + 1; j <= n; ++j) out.seq.push_back(make_pair_vertex(i, j));
  return out;
}

/// Hamiltonian cycle of the pair graph of the one-hub fan. Segments are
/// chained with every second one reversed; the lone {w_1,w_1} vertex sits
/// after the last segment (even n) or right after the reversed first
/// segment (odd n).
inline CycleSeq cycle_m1(int n) {
  if (n < 2) throw std::invalid_argument("cycle construction needs a path part of size >= 2");
  std::vector<MultisetVertex> seq;
  auto push = [&seq](CycleSeq part, bool reversed) {
    if (reversed) std::reverse(part.seq.begin(), part.seq.end());
    seq.insert(seq.end(), part.seq.begin(), part.seq.end());
  };
  const MultisetVertex hub_pair = make_pair_vertex(n + 1, n + 1);
  if (n % 2 == 0) {
    for (int i = 1; i <= n; ++i) push(m1_segment(i, n), i % 2 == 0);
    seq.push_back(hub_pair);
  } else {
    push(m1_segment(1, n), true);
    seq.push_back(hub_pair);
    for (int i = 2; i <= n; ++i) push(m1_segment(i, n), i % 2 == 1);
  }
  CycleSeq c{std::move(seq), true};
  detail::self_verify_fan_cycle(1, n, c);
  return c;
}

/// The opening segment of the many-hub cycle: the one-hub cycle cut at the
/// {v_n,v_n}-{v_n,w_1} edge and rotated to run {v_n,w_1} ... {v_n,v_n}.
inline CycleSeq p1_segment(int n) {
  CycleSeq c = cycle_m1(n);
  const MultisetVertex head = make_pair_vertex(n, n + 1);
  const MultisetVertex tail = make_pair_vertex(n, n);
  auto it = std::find(c.seq.begin(), c.seq.end(), head);
  if (it == c.seq.end()) throw IntegrityError("{v_n,w_1} missing from the base cycle");
  const std::size_t pos = static_cast<std::size_t>(it - c.seq.begin());
  const std::size_t prev = (pos + c.seq.size() - 1) % c.seq.size();
  if (!(c.seq[prev] == tail))
    throw IntegrityError("{v_n,v_n} is not the predecessor of {v_n,w_1} in the base cycle");
  std::rotate(c.seq.begin(), it, c.seq.end());
  return {std::move(c.seq), false};
}

/// Segment i of the saturated regime m_eff = 2(n-1), computed at the full
/// modulus. Subscript sums reduce into representatives 1..m_eff (so a
/// multiple of m_eff reads as m_eff, never 0). Two patterns:
///   short index (i <= n-1):  {w_i,v_n},{w_i,w_i},{w_i,v_{n-1}},{w_i,w_1},
///                            then {w_i,v_j},{w_i,w_{i+j}} for j = n-2..1;
///   long index  (i >= n):    {w_i,v_n},{w_i,w_i},
///                            then {w_i,v_j},{w_i,w_{i+j}} for j = n-1..1.
/// Contract: length 2n, starts {v_n,w_i}, ends {w_i,w_{i+1}}.
inline CycleSeq mmax_segment(int i, int m_eff, int n) {
  if (n < 2) throw std::invalid_argument("path part must have size >= 2");
  if (m_eff != 2 * (n - 1))
    throw std::invalid_argument("segments are defined at the full modulus 2(n-1)");
  if (i < 2 || i > m_eff) throw std::invalid_argument("segment index must lie in 2..2(n-1)");
  auto wrap = [m_eff](int x) { return (x - 1) % m_eff + 1; };
  const int wi = n + i;
  CycleSeq out;
  out.seq.push_back(make_pair_vertex(n, wi));
  out.seq.push_back(make_pair_vertex(wi, wi));
  if (i <= n - 1) {
    out.seq.push_back(make_pair_vertex(n - 1, wi));
    out.seq.push_back(make_pair_vertex(n + 1, wi));
    for (int j = n - 2; j >= 1; --j) {
      // i + j <= 2n-3 < m_eff, so the short pattern never wraps
      if (wrap(i + j) != i + j) throw IntegrityError("short-index subscript wrapped");
      out.seq.push_back(make_pair_vertex(j, wi));
      out.seq.push_back(make_pair_vertex(n + i + j, wi));
    }
  } else {
    for (int j = n - 1; j >= 1; --j) {
      out.seq.push_back(make_pair_vertex(j, wi));
      out.seq.push_back(make_pair_vertex(n + wrap(i + j), wi));
    }
  }
  if (static_cast<int>(out.seq.size()) != 2 * n)
    throw IntegrityError("hub segment must have exactly 2n vertices");
  if (!(out.seq.front() == make_pair_vertex(n, wi)))
    throw IntegrityError("hub segment must start at {v_n,w_i}");
  if (!(out.seq.back() == make_pair_vertex(wi, n + wrap(i + 1))))
    throw IntegrityError("hub segment must end at {w_i,w_{i+1}}");
  return out;
}

/// Hamiltonian cycle for the saturated regime m = 2(n-1): the opened
/// one-hub cycle followed by the hub segments 2..m; the last segment ends
/// at {w_m,w_1}, adjacent to the opening {v_n,w_1}.
inline CycleSeq cycle_mmax(int n) {
  if (n < 2) throw std::invalid_argument("cycle construction needs a path part of size >= 2");
  const int m = 2 * (n - 1);
  std::vector<MultisetVertex> seq = p1_segment(n).seq;
  for (int i = 2; i <= m; ++i) {
    CycleSeq part = mmax_segment(i, m, n);
    seq.insert(seq.end(), part.seq.begin(), part.seq.end());
  }
  CycleSeq c{std::move(seq), true};
  detail::self_verify_fan_cycle(m, n, c);
  return c;
}

/// Cuts a saturated-regime segment down to an actual hub count m: deletes
/// every {w_i,w_j} with j > m, after first trading the positions of
/// {w_m,w_{m+1}} and {w_m,w_1} when i = m (so the surviving endpoint is
/// {w_m,w_1}, which closes back to the opening segment). Swap partners are
/// located by value; both are always present.
inline CycleSeq prune_segment(const CycleSeq& p, int m, int n) {
  if (n < 3 || m < 2 || m >= 2 * (n - 1))
    throw std::invalid_argument("pruning applies for 1 < m < 2(n-1)");
  if (p.closed) throw IntegrityError("pruning expects an open segment");
  std::vector<MultisetVertex> seq = p.seq;
  if (static_cast<int>(seq.size()) != 2 * n)
    throw IntegrityError("pruning expects a segment of length 2n");
  const int wi = seq.front().elems[1];
  const int i = wi - n;
  if (seq.front().elems[0] != n || i < 2 || i > 2 * (n - 1))
    throw IntegrityError("segment must start at {v_n,w_i}");
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const auto& e = seq[t].elems;
    const bool has_wi = e[0] == wi || e[1] == wi;
    const bool v_pair = e[0] <= n && e[1] > n;
    const bool w_pair = e[0] > n;
    if (!has_wi || (t % 2 == 0 ? !v_pair : !w_pair))
      throw IntegrityError("segment must alternate {w_i,v_j} and {w_i,w_l} vertices");
  }
  if (i > m) throw std::invalid_argument("segment index exceeds the hub count");
  if (i == m) {
    auto doomed = std::find(seq.begin(), seq.end(), make_pair_vertex(wi, n + m + 1));
    auto kept = std::find(seq.begin(), seq.end(), make_pair_vertex(wi, n + 1));
    if (doomed == seq.end() || kept == seq.end())
      throw IntegrityError("swap partners {w_m,w_{m+1}} and {w_m,w_1} must both be present");
    std::iter_swap(doomed, kept);
  }
  std::erase_if(seq, [limit = n + m](const MultisetVertex& v) { return v.elems[1] > limit; });
  const MultisetVertex want_back =
      i == m ? make_pair_vertex(wi, n + 1) : make_pair_vertex(wi, n + i + 1);
  if (!(seq.front() == make_pair_vertex(n, wi)) || !(seq.back() == want_back))
    throw IntegrityError("pruned segment endpoints drifted");
  return {std::move(seq), false};
}

/// Hamiltonian cycle for the middle regime 1 < m < 2(n-1): saturated
/// segments computed at the full modulus, then pruned to the actual hub
/// count.
inline CycleSeq cycle_mid(int m, int n) {
  if (n < 3 || m <= 1 || m >= 2 * (n - 1))
    throw std::invalid_argument("middle regime needs n >= 3 and 1 < m < 2(n-1)");
  const int m_eff = 2 * (n - 1);
  std::vector<MultisetVertex> seq = p1_segment(n).seq;
  for (int i = 2; i <= m; ++i) {
    CycleSeq part = prune_segment(mmax_segment(i, m_eff, n), m, n);
    seq.insert(seq.end(), part.seq.begin(), part.seq.end());
  }
  CycleSeq c{std::move(seq), true};
  detail::self_verify_fan_cycle(m, n, c);
  return c;
}

/// Non-Hamiltonicity certificate for m > 2(n-1): removing the m*n mixed
/// pairs {w_i,v_j} leaves every two-hub pair isolated, giving
/// C(m+1,2) + 1 components, more than the m*n vertices removed.
struct CutCertificate {
  std::vector<MultisetVertex> cut;
  unsigned long long predicted_components = 0;
};

inline CutCertificate cut_certificate(int m, int n) {
  if (n < 2 || m <= 2 * (n - 1))
    throw std::invalid_argument("cut certificate applies for n >= 2 and m > 2(n-1)");
  CutCertificate out;
  out.cut.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= m; ++i) out.cut.push_back(make_pair_vertex(j, n + i));
  std::sort(out.cut.begin(), out.cut.end());
  out.predicted_components = binomial(m + 1, 2) + 1;
  return out;
}

struct Hamiltonian {
  CycleSeq cycle;
};

/// The pair {w_1,w_1} has the lone neighbor class {w_1,v_1} when n = 1, so
/// no cycle can pass through it.
struct NotHamiltonianDegreeOne {
  MultisetVertex witness;
};

struct NotHamiltonianCutSet {
  std::vector<MultisetVertex> cut;
  unsigned long long component_count = 0;
};

using Decision = std::variant<Hamiltonian, NotHamiltonianDegreeOne, NotHamiltonianCutSet>;

/// Full trichotomy for the pair graph of a fan: Hamiltonian exactly when
/// n >= 2 and m <= 2(n-1), with an explicit verified cycle; otherwise a
/// degree-one witness (n = 1) or a cut-set certificate (oversized m).
inline Decision decide_fan(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("both fan parts must be nonempty");
  if (n == 1) return NotHamiltonianDegreeOne{make_pair_vertex(n + 1, n + 1)};
  if (m > 2 * (n - 1)) {
    CutCertificate cert = cut_certificate(m, n);
    return NotHamiltonianCutSet{std::move(cert.cut), cert.predicted_components};
  }
  if (m == 1) return Hamiltonian{cycle_m1(n)};
  if (m == 2 * (n - 1)) return Hamiltonian{cycle_mmax(n)};
  return Hamiltonian{cycle_mid(m, n)};
}

/// Hamiltonian cycle of the pair graph of g1 + g2, given a Hamiltonian
/// path of g2 and |V(g1)| <= 2(|V(g2)|-1). The fan construction transfers
/// because relabeling the path as the fan's path part embeds the fan as a
/// spanning subgraph of the join, and pair-graph adjacency is monotone in
/// the base edge set. The mapped cycle is re-verified all the same.
inline CycleSeq join_cycle(const Graph& g1, const Graph& g2, const std::vector<int>& ham_path) {
  const int m = g1.order();
  const int n = g2.order();
  if (n < 2) throw std::invalid_argument("second part must have at least 2 vertices");
  if (m < 1 || m > 2 * (n - 1))
    throw std::invalid_argument("no construction when the first part exceeds 2(n-1) vertices");
  auto path_chk = is_hamiltonian_path(g2, ham_path);
  if (!path_chk.ok)
    throw std::invalid_argument("not a Hamiltonian path of the second part: " + path_chk.reason);
  Decision decision = decide_fan(m, n);
  auto* ham = std::get_if<Hamiltonian>(&decision);
  if (ham == nullptr) throw IntegrityError("constructive regime produced a non-cycle verdict");
  // fan id j (path position) -> join id of the j-th path vertex; hub i -> i
  auto map_id = [&](int id) {
    return id <= n ? m + ham_path[static_cast<std::size_t>(id - 1)] : id - n;
  };
  CycleSeq out{{}, true};
  out.seq.reserve(ham->cycle.seq.size());
  for (const auto& v : ham->cycle.seq)
    out.seq.push_back(make_pair_vertex(map_id(v.elems[0]), map_id(v.elems[1])));
  auto big = build_big_graph(join(g1, g2), 2, BigKind::multiset);
  std::vector<int> dense;
  try {
    dense = to_dense(big, out.seq);
  } catch (const std::invalid_argument& e) {
    throw IntegrityError(std::string("mapped cycle left the vertex set: ") + e.what());
  }
  auto cyc_chk = is_hamiltonian_cycle(big.graph, dense);
  if (!cyc_chk.ok) throw IntegrityError("mapped cycle rejected by verifier: " + cyc_chk.reason);
  return out;
}

}  // namespace tokeng
