// The smallest member of an infinite family: fan(4,3) has no Hamiltonian
// cycle, yet its pair graph does. The cycle is produced constructively and
// double-checked by the exhaustive oracle.

#include <iostream>

#include "tokeng/fan.hpp"
#include "tokeng/graph.hpp"
#include "tokeng/multiset.hpp"
#include "tokeng/oracle.hpp"

int main() {
  auto fan = tokeng::fan_graph(4, 3);
  auto base = tokeng::find_hamiltonian_cycle(fan.graph);
  std::cout << "fan(4,3) itself: "
            << (base.status == tokeng::SearchStatus::none ? "no Hamiltonian cycle"
                                                          : "unexpected result")
            << '\n';

  auto decision = tokeng::decide_fan(4, 3);
  auto& cycle = std::get<tokeng::Hamiltonian>(decision).cycle;
  std::cout << "its pair graph: Hamiltonian, cycle on " << cycle.seq.size() << " vertices\n";

  auto big = tokeng::build_big_graph(fan.graph, 2, tokeng::BigKind::multiset);
  auto oracle = tokeng::find_hamiltonian_cycle(big.graph);
  std::cout << "oracle agrees: " << (oracle.found() ? "found a cycle independently" : "mismatch")
            << '\n';

  for (const auto& v : cycle.seq)
    std::cout << fan.labeling.label(v.elems[0]) << ',' << fan.labeling.label(v.elems[1]) << ' ';
  std::cout << '\n';
  return 0;
}
