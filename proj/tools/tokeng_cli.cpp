#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tokeng/explorer.hpp"
#include "tokeng/fan.hpp"
#include "tokeng/graph.hpp"
#include "tokeng/graph6.hpp"
#include "tokeng/io.hpp"
#include "tokeng/multiset.hpp"
#include "tokeng/oracle.hpp"

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 inconclusive search.

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
  f << content;
}

tokeng::EdgeListFile load_graph(const std::string& content) {
  switch (tokeng::detect_graph_format(content)) {
    case tokeng::GraphFormat::edge_list: {
      std::istringstream in(content);
      return tokeng::read_edge_list(in);
    }
    case tokeng::GraphFormat::dot: {
      std::istringstream in(content);
      return {tokeng::read_dot(in), {}};
    }
    default: {
      std::istringstream in(content);
      std::string line;
      while (std::getline(in, line)) {
        auto t = tokeng::detail::trim(line);
        if (!t.empty() && t.front() != '#') return {tokeng::parse_graph6(t), {}};
      }
      throw std::invalid_argument("no graph6 line found");
    }
  }
}

std::string emit_graph(const tokeng::Graph& g, const std::vector<tokeng::MultisetVertex>& table,
                       const std::string& format) {
  std::ostringstream out;
  if (format == "g6") {
    out << tokeng::emit_graph6(g) << '\n';
  } else if (format == "dot") {
    std::vector<std::string> labels;
    for (const auto& v : table) labels.push_back(v.to_string());
    tokeng::write_dot(out, g, labels);
  } else if (table.empty()) {
    tokeng::write_edge_list(out, g);
  } else {
    out << "p " << g.order() << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < table.size(); ++i)
      out << "v " << i + 1 << ' ' << table[i].to_string() << '\n';
    for (const auto& [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
  }
  return out.str();
}

struct BuildArgs {
  std::string family;
  int m = 0, n = 0;
  std::string format = "el", out;
};

struct BigArgs {
  std::string input, out, format = "el";
  int k = 0;
};

struct FanArgs {
  int m = 0, n = 0;
  std::string out;
  bool json = false;
};

struct JoinArgs {
  std::string g1, g2, out;
  std::uint64_t budget = tokeng::SearchOptions{}.node_budget;
};

struct VerifyArgs {
  std::string graph, input, out;
  bool json = false;
};

struct BruteArgs {
  std::string input, out;
  bool path = false, json = false;
  std::uint64_t budget = tokeng::SearchOptions{}.node_budget;
};

struct ScanArgs {
  std::string input, out;
  int k = 0, order = 0, jobs = 1, max_order = 6;
  bool connected = false, allow_inconclusive = false;
  std::uint64_t budget = tokeng::SearchOptions{}.node_budget;
};

struct ConvertArgs {
  std::string input, out, format;
};

int run_build(const BuildArgs& a) {
  tokeng::Graph g;
  std::vector<tokeng::MultisetVertex> no_table;
  std::vector<std::string> labels;
  if (a.family == "fan") {
    auto fan = tokeng::fan_graph(a.m, a.n);
    g = fan.graph;
    if (a.format == "dot") {
      std::ostringstream out;
      for (int id = 1; id <= g.order(); ++id) labels.push_back(fan.labeling.label(id));
      tokeng::write_dot(out, g, labels);
      write_output(a.out, out.str());
      return 0;
    }
  } else {
    static const std::map<std::string, tokeng::BaseKind> kinds = {
        {"path", tokeng::BaseKind::path},
        {"cycle", tokeng::BaseKind::cycle},
        {"empty", tokeng::BaseKind::empty},
        {"complete", tokeng::BaseKind::complete}};
    g = tokeng::make_base_graph(kinds.at(a.family), a.n);
  }
  write_output(a.out, emit_graph(g, no_table, a.format));
  return 0;
}

int run_big(const BigArgs& a, tokeng::BigKind kind) {
  auto in = load_graph(read_input(a.input));
  auto big = tokeng::build_big_graph(in.graph, a.k, kind);
  write_output(a.out, emit_graph(big.graph, big.vertex_of, a.format));
  return 0;
}

int run_fan_cycle(const FanArgs& a) {
  tokeng::Decision d = tokeng::decide_fan(a.m, a.n);
  auto* ham = std::get_if<tokeng::Hamiltonian>(&d);
  if (ham == nullptr) {
    std::cerr << "error: the pair graph of fan(m=" << a.m << ", n=" << a.n
              << ") is not Hamiltonian; see decide-fan\n";
    return 1;
  }
  std::ostringstream out;
  tokeng::write_cycle_file(out, "fan", a.m, a.n, ham->cycle);
  write_output(a.out, out.str());
  return 0;
}

int run_decide_fan(const FanArgs& a) {
  tokeng::Decision d = tokeng::decide_fan(a.m, a.n);
  json j;
  if (auto* ham = std::get_if<tokeng::Hamiltonian>(&d)) {
    j["verdict"] = "hamiltonian";
    j["cycle_length"] = ham->cycle.seq.size();
  } else if (auto* deg = std::get_if<tokeng::NotHamiltonianDegreeOne>(&d)) {
    tokeng::FanLabeling lab{a.n, a.m};
    j["verdict"] = "not_hamiltonian_degree_one";
    j["witness"] = lab.label(deg->witness.elems[0]) + "," + lab.label(deg->witness.elems[1]);
  } else {
    auto& cut = std::get<tokeng::NotHamiltonianCutSet>(d);
    j["verdict"] = "not_hamiltonian_cutset";
    j["cut_size"] = cut.cut.size();
    j["components"] = cut.component_count;
  }
  write_output(a.out, j.dump() + "\n");
  return 0;
}

int run_join_cycle(const JoinArgs& a) {
  auto g1 = load_graph(read_input(a.g1)).graph;
  auto g2 = load_graph(read_input(a.g2)).graph;
  auto path = tokeng::find_hamiltonian_path(g2, {a.budget});
  if (path.status == tokeng::SearchStatus::inconclusive) {
    std::cerr << "inconclusive: Hamiltonian-path search on the second part ran out of budget\n";
    return 3;
  }
  if (path.status == tokeng::SearchStatus::none)
    throw std::invalid_argument("the second part has no Hamiltonian path");
  auto cycle = tokeng::join_cycle(g1, g2, path.sequence);
  std::ostringstream out;
  tokeng::write_cycle_file(out, "join", g1.order(), g2.order(), cycle);
  write_output(a.out, out.str());
  return 0;
}

int run_verify(const VerifyArgs& a) {
  auto graph_file = load_graph(read_input(a.graph));
  if (graph_file.vertex_table.empty())
    throw std::invalid_argument(
        "the graph file has no vertex table; pass the output of mk or tk");
  std::istringstream cin_stream(read_input(a.input));
  tokeng::CycleFile cf = tokeng::read_cycle_file(cin_stream);
  std::vector<std::pair<tokeng::MultisetVertex, int>> index;
  index.reserve(graph_file.vertex_table.size());
  for (std::size_t i = 0; i < graph_file.vertex_table.size(); ++i)
    index.emplace_back(graph_file.vertex_table[i], static_cast<int>(i) + 1);
  std::sort(index.begin(), index.end());
  tokeng::SequenceCheck chk{true, "", -1};
  std::vector<int> dense;
  for (std::size_t p = 0; p < cf.cycle.seq.size(); ++p) {
    const auto& v = cf.cycle.seq[p];
    auto it = std::lower_bound(index.begin(), index.end(),
                               std::make_pair(v, std::numeric_limits<int>::min()));
    if (it == index.end() || !(it->first == v)) {
      chk = {false, "vertex " + v.to_string() + " is not in the graph's vertex table",
             static_cast<int>(p)};
      break;
    }
    dense.push_back(it->second);
  }
  if (chk.ok) chk = tokeng::is_hamiltonian_cycle(graph_file.graph, dense);
  if (a.json) {
    json j;
    j["ok"] = chk.ok;
    if (!chk.ok) {
      j["reason"] = chk.reason;
      j["position"] = chk.position;
    }
    write_output(a.out, j.dump() + "\n");
  } else if (chk.ok) {
    write_output(a.out, "accepted: Hamiltonian cycle on " + std::to_string(dense.size()) +
                            " vertices\n");
  } else {
    std::cerr << "rejected: " << chk.reason;
    if (chk.position >= 0) std::cerr << " (position " << chk.position << ")";
    std::cerr << '\n';
  }
  return chk.ok ? 0 : 1;
}

int run_certify(const FanArgs& a) {
  auto cert = tokeng::cut_certificate(a.m, a.n);
  auto big = tokeng::build_big_graph(tokeng::fan_graph(a.m, a.n).graph, 2,
                                     tokeng::BigKind::multiset);
  auto cut_dense = tokeng::to_dense(big, cert.cut);
  auto chk = tokeng::check_cut_certificate(big.graph, cut_dense);
  if (!chk.refutes_hamiltonicity || chk.components != cert.predicted_components)
    throw tokeng::IntegrityError("certificate check disagrees with the predicted count");
  if (a.json) {
    json j;
    j["verdict"] = "not_hamiltonian_cutset";
    j["cut_size"] = chk.cut_size;
    j["components"] = chk.components;
    write_output(a.out, j.dump() + "\n");
    return 0;
  }
  std::ostringstream out;
  tokeng::write_certificate(out, a.m, a.n, cert.cut, chk.components);
  write_output(a.out, out.str());
  return 0;
}

int run_brute(const BruteArgs& a) {
  auto g = load_graph(read_input(a.input)).graph;
  tokeng::SearchResult res = a.path ? tokeng::find_hamiltonian_path(g, {a.budget})
                                    : tokeng::find_hamiltonian_cycle(g, {a.budget});
  if (a.json) {
    json j;
    j["status"] = res.status == tokeng::SearchStatus::found          ? "found"
                  : res.status == tokeng::SearchStatus::none         ? "none"
                                                                     : "inconclusive";
    if (res.found()) j["sequence"] = res.sequence;
    j["expansions"] = res.expansions;
    write_output(a.out, j.dump() + "\n");
  } else if (res.found()) {
    std::string line = a.path ? "hamiltonian path:" : "hamiltonian cycle:";
    for (int v : res.sequence) line += " " + std::to_string(v);
    write_output(a.out, line + "\n");
  } else if (res.status == tokeng::SearchStatus::none) {
    write_output(a.out, "none\n");
  } else {
    write_output(a.out, "inconclusive after " + std::to_string(res.expansions) +
                            " expansions\n");
  }
  return res.status == tokeng::SearchStatus::inconclusive ? 3 : 0;
}

int run_scan(const ScanArgs& a) {
  std::vector<tokeng::Graph> graphs;
  if (a.order > 0) {
    graphs = tokeng::enumerate_labeled_graphs(a.order, {a.connected, a.max_order});
  } else {
    std::istringstream in(read_input(a.input));
    std::string line;
    while (std::getline(in, line)) {
      auto t = tokeng::detail::trim(line);
      if (!t.empty() && t.front() != '#') graphs.push_back(tokeng::parse_graph6(t));
    }
    if (graphs.empty()) throw std::invalid_argument("no graph6 lines in the input");
  }
  tokeng::ScanOptions opt;
  opt.search.node_budget = a.budget;
  opt.jobs = a.jobs;
  auto records = tokeng::scan(graphs, a.k, opt);
  std::string out;
  bool any_inconclusive = false;
  for (const auto& r : records) {
    out += tokeng::to_json_line(r);
    out += '\n';
    any_inconclusive = any_inconclusive || r.budget_hit;
  }
  write_output(a.out, out);
  if (any_inconclusive && !a.allow_inconclusive) {
    std::cerr << "inconclusive: some searches ran out of budget\n";
    return 3;
  }
  return 0;
}

int run_convert(const ConvertArgs& a) {
  auto in = load_graph(read_input(a.input));
  write_output(a.out, emit_graph(in.graph, in.vertex_table, a.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"token-graph and multiset-graph toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  const auto format_check = CLI::IsMember({"el", "g6", "dot"});

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "emit a base graph (fan, path, cycle, empty, complete)");
  build->add_option("family", build_args.family, "graph family")
      ->required()
      ->check(CLI::IsMember({"fan", "path", "cycle", "empty", "complete"}));
  build->add_option("--m", build_args.m, "fan empty-part size");
  build->add_option("--n", build_args.n, "size / fan path-part size")->required();
  build->add_option("--format", build_args.format, "output format")->check(format_check);
  build->add_option("--out", build_args.out, "output path (default stdout)");
  build->callback([&] {
    if (build_args.family == "fan" && build_args.m < 1)
      throw CLI::ValidationError("build", "fan needs --m >= 1");
    exit_code = run_build(build_args);
  });

  BigArgs mk_args;
  auto* mk = app.add_subcommand("mk", "build the k-multiset graph of a graph");
  mk->add_option("input", mk_args.input, "graph file (default stdin)");
  mk->add_option("--k", mk_args.k, "multiset size")->required()->check(CLI::PositiveNumber);
  mk->add_option("--format", mk_args.format, "output format")->check(format_check);
  mk->add_option("--out", mk_args.out, "output path");
  mk->callback([&] { exit_code = run_big(mk_args, tokeng::BigKind::multiset); });

  BigArgs tk_args;
  auto* tk = app.add_subcommand("tk", "build the k-token graph of a graph");
  tk->add_option("input", tk_args.input, "graph file (default stdin)");
  tk->add_option("--k", tk_args.k, "token count")->required()->check(CLI::PositiveNumber);
  tk->add_option("--format", tk_args.format, "output format")->check(format_check);
  tk->add_option("--out", tk_args.out, "output path");
  tk->callback([&] { exit_code = run_big(tk_args, tokeng::BigKind::subset); });

  FanArgs fc_args;
  auto* fc = app.add_subcommand("fan-cycle",
                                "emit an explicit Hamiltonian cycle of the fan's pair graph");
  fc->add_option("--m", fc_args.m, "empty-part size")->required();
  fc->add_option("--n", fc_args.n, "path-part size")->required();
  fc->add_option("--out", fc_args.out, "output path");
  fc->callback([&] { exit_code = run_fan_cycle(fc_args); });

  FanArgs df_args;
  auto* df = app.add_subcommand("decide-fan",
                                "decide Hamiltonicity of the fan's pair graph (JSON verdict)");
  df->add_option("--m", df_args.m, "empty-part size")->required();
  df->add_option("--n", df_args.n, "path-part size")->required();
  df->add_flag("--json", df_args.json, "JSON output (always on)");
  df->add_option("--out", df_args.out, "output path");
  df->callback([&] { exit_code = run_decide_fan(df_args); });

  JoinArgs jc_args;
  auto* jc = app.add_subcommand("join-cycle",
                                "Hamiltonian cycle of the pair graph of a join g1 + g2");
  jc->add_option("--g1", jc_args.g1, "first part graph file")->required();
  jc->add_option("--g2", jc_args.g2, "second part graph file")->required();
  jc->add_option("--budget", jc_args.budget, "node budget for the path search");
  jc->add_option("--out", jc_args.out, "output path");
  jc->callback([&] { exit_code = run_join_cycle(jc_args); });

  VerifyArgs v_args;
  auto* verify = app.add_subcommand("verify", "check a cycle file against a pair/token graph");
  verify->add_option("--graph", v_args.graph, "graph file with vertex table (mk/tk output)")
      ->required();
  verify->add_option("input", v_args.input, "cycle file (default stdin)");
  verify->add_flag("--json", v_args.json, "JSON verdict");
  verify->add_option("--out", v_args.out, "output path");
  verify->callback([&] { exit_code = run_verify(v_args); });

  FanArgs ct_args;
  auto* ct = app.add_subcommand("certify",
                                "emit a checked cut-set certificate for an oversized fan");
  ct->add_option("--m", ct_args.m, "empty-part size")->required();
  ct->add_option("--n", ct_args.n, "path-part size")->required();
  ct->add_flag("--json", ct_args.json, "JSON verdict instead of the certificate file");
  ct->add_option("--out", ct_args.out, "output path");
  ct->callback([&] { exit_code = run_certify(ct_args); });

  BruteArgs br_args;
  auto* br = app.add_subcommand("brute", "exhaustive Hamiltonian cycle/path search");
  br->add_option("input", br_args.input, "graph file (default stdin)");
  br->add_flag("--path", br_args.path, "search for a Hamiltonian path instead of a cycle");
  br->add_option("--budget", br_args.budget, "node budget");
  br->add_flag("--json", br_args.json, "JSON output");
  br->add_option("--out", br_args.out, "output path");
  br->callback([&] { exit_code = run_brute(br_args); });

  ScanArgs sc_args;
  auto* sc = app.add_subcommand("scan", "Hamiltonicity records for a family of graphs");
  sc->add_option("input", sc_args.input, "file of graph6 lines (default stdin)");
  sc->add_option("--order", sc_args.order, "scan all labeled graphs of this order instead");
  sc->add_flag("--connected", sc_args.connected, "restrict --order enumeration to connected graphs");
  sc->add_option("--max-order", sc_args.max_order, "raise the --order enumeration cap");
  sc->add_option("--k", sc_args.k, "multiset size")->required()->check(CLI::PositiveNumber);
  sc->add_option("--jobs", sc_args.jobs, "worker threads")->check(CLI::PositiveNumber);
  sc->add_option("--budget", sc_args.budget, "node budget per search");
  sc->add_flag("--allow-inconclusive", sc_args.allow_inconclusive,
               "exit 0 even when some searches hit the budget");
  sc->add_option("--out", sc_args.out, "output path");
  sc->callback([&] { exit_code = run_scan(sc_args); });

  ConvertArgs cv_args;
  auto* cv = app.add_subcommand("convert", "convert between edge-list, graph6 and DOT");
  cv->add_option("input", cv_args.input, "graph file (default stdin)");
  cv->add_option("--format", cv_args.format, "target format")->required()->check(format_check);
  cv->add_option("--out", cv_args.out, "output path");
  cv->callback([&] { exit_code = run_convert(cv_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const tokeng::IntegrityError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
