// Builds the fan with 2 hubs on a 2-path, its pair graph, and writes both
// as DOT next to the working directory.

#include <fstream>
#include <iostream>

#include "tokeng/fan.hpp"
#include "tokeng/graph.hpp"
#include "tokeng/io.hpp"
#include "tokeng/multiset.hpp"

int main() {
  auto fan = tokeng::fan_graph(2, 2);
  auto big = tokeng::build_big_graph(fan.graph, 2, tokeng::BigKind::multiset);

  std::vector<std::string> base_labels;
  for (int id = 1; id <= fan.graph.order(); ++id) base_labels.push_back(fan.labeling.label(id));
  std::ofstream base_out("fan_2_2.dot");
  tokeng::write_dot(base_out, fan.graph, base_labels);

  std::vector<std::string> big_labels;
  for (int id = 1; id <= big.graph.order(); ++id) big_labels.push_back(big.vertex(id).to_string());
  std::ofstream big_out("fan_2_2_pairs.dot");
  tokeng::write_dot(big_out, big.graph, big_labels);

  std::cout << "fan(2,2): " << fan.graph.order() << " vertices, " << fan.graph.edge_count()
            << " edges -> fan_2_2.dot\n";
  std::cout << "pair graph: " << big.graph.order() << " vertices, " << big.graph.edge_count()
            << " edges -> fan_2_2_pairs.dot\n";

  auto decision = tokeng::decide_fan(2, 2);
  auto& cycle = std::get<tokeng::Hamiltonian>(decision).cycle;
  std::cout << "Hamiltonian cycle of the pair graph:";
  for (const auto& v : cycle.seq) std::cout << ' ' << v.to_string();
  std::cout << '\n';
  return 0;
}
