// bpm: command-line front end for the allowed-edge toolkit.
//
//   bpm matching  <file>
//   bpm classify  <file> [--matching-from-file]
//   bpm verify    <file>
//   bpm decompose <file>
//   bpm extend    <file> --edges 2:3,1:4
//   bpm bench     --n <nodes> --m <edges> --seed <s>
//   bpm serve     --port <p>
//
// Exit status: 0 success, 1 parse or validation error, 2 verification mismatch.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpm/allowed.hpp"
#include "bpm/extensions.hpp"
#include "bpm/generate.hpp"
#include "bpm/graph_io.hpp"
#include "bpm/matching.hpp"
#include "bpm/oracle.hpp"
#include "bpm/server.hpp"

namespace {

using namespace bpm;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kMismatch = 2;

void print_pairs(const Matching& m) {
  for (const auto& p : m.pairs()) std::cout << p.left + 1 << ' ' << p.right + 1 << '\n';
}

int cmd_matching(const std::string& path) {
  const auto file = read_graph_file(path);
  const Matching m = hopcroft_karp(file.graph);
  print_pairs(m);
  std::cout << "t " << m.size() << '\n';
  return kOk;
}

int cmd_classify(const std::string& path, bool trust_file_matching) {
  const auto file = read_graph_file(path);
  Matching m;
  if (trust_file_matching && file.matching) {
    if (!verify_matching(file.graph, *file.matching)) {
      std::cerr << "error: the m lines do not form a matching of the graph\n";
      return kInvalid;
    }
    if (!is_maximum(file.graph, *file.matching)) {
      std::cerr << "error: the m lines are not a maximum matching (an augmenting path exists)\n";
      return kInvalid;
    }
    m = *file.matching;
  } else {
    m = hopcroft_karp(file.graph);
  }
  write_classification(std::cout, file.graph, classify_general(file.graph, m), m.size());
  return kOk;
}

int cmd_verify(const std::string& path) {
  const auto file = read_graph_file(path);
  const auto expected = oracle::brute_force_allowed(file.graph);
  const auto [m, labels] = classify_all(file.graph);

  std::vector<bool> want(static_cast<std::size_t>(file.graph.edge_count()), false);
  for (const auto& e : expected) want[static_cast<std::size_t>(file.graph.find_edge(e.left, e.right))] = true;
  int mismatches = 0;
  for (Index id = 0; id < file.graph.edge_count(); ++id) {
    if (labels.allowed(id) == want[static_cast<std::size_t>(id)]) continue;
    const auto& e = file.graph.edge(id);
    std::cout << "mismatch " << e.left + 1 << ' ' << e.right + 1 << " classified " << to_string(labels[id])
              << " oracle " << (want[static_cast<std::size_t>(id)] ? "allowed" : "not_allowed") << '\n';
    ++mismatches;
  }
  std::cout << "s edges " << file.graph.edge_count() << " allowed " << expected.size() << " mismatches "
            << mismatches << '\n';
  return mismatches == 0 ? kOk : kMismatch;
}

int cmd_decompose(const std::string& path) {
  const auto file = read_graph_file(path);
  const auto d = is_regular(file.graph);
  if (!d || *d == 0) {
    // Let decompose_regular name the offending node.
    decompose_regular(file.graph, file.graph.left_count() > 0 ? file.graph.left_degree(0) : 0);
  }
  const auto parts = decompose_regular(file.graph, *d);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& p : parts[k].pairs()) std::cout << k + 1 << ' ' << p.left + 1 << ' ' << p.right + 1 << '\n';
  }
  std::cout << "s degree " << *d << " matchings " << parts.size() << '\n';
  return kOk;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "expected i:j, got '" + item + "'");
    try {
      const int i = std::stoi(item.substr(0, colon));
      const int j = std::stoi(item.substr(colon + 1));
      out.push_back({i - 1, j - 1});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "expected i:j, got '" + item + "'");
    }
  }
  return out;
}

int cmd_extend(const std::string& path, const std::string& edges) {
  const auto file = read_graph_file(path);
  const Matching m = file.matching ? *file.matching : hopcroft_karp(file.graph);
  if (file.matching && !is_maximum(file.graph, m)) {
    std::cerr << "error: the m lines are not a maximum matching\n";
    return kInvalid;
  }
  const auto ext = extend_partial_matching(file.graph, m, parse_edge_list(edges));
  print_pairs(ext.matching);
  std::cout << "s size " << ext.matching.size() << " bound " << ext.bound() << " k " << ext.k << " t " << ext.t
            << '\n';
  return kOk;
}

int cmd_bench(std::int64_t n, std::int64_t m, std::uint64_t seed) {
  if (n < 2 || n > INT32_MAX) {
    std::cerr << "error: --n must be in [2, 2^31)\n";
    return kInvalid;
  }
  std::mt19937_64 rng(seed);
  const auto n1 = static_cast<Index>(n / 2);
  const auto n2 = static_cast<Index>(n - n / 2);
  BipartiteGraph g;
  try {
    g = random_graph(n1, n2, m, rng);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const Matching matching = hopcroft_karp(g);
  const auto t1 = clock::now();
  const auto labels = classify_general(g, matching);
  const auto t2 = clock::now();
  const auto ms = [](auto d) { return std::chrono::duration<double, std::milli>(d).count(); };
  std::cout << "n,m,t,matching_ms,classify_ms\n"
            << n << ',' << m << ',' << matching.size() << ',' << ms(t1 - t0) << ',' << ms(t2 - t1) << '\n';
  (void)labels;
  return kOk;
}

int cmd_serve(int port) {
  service::GameService svc;
  service::HttpServer server(svc);
  const int bound = server.bind("0.0.0.0", port);
  if (bound < 0) {
    std::cerr << "error: cannot bind port " << port << '\n';
    return kInvalid;
  }
  std::cerr << "listening on port " << bound << " (sessions are kept in memory only)\n";
  return server.listen() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Allowed edges in bipartite graphs"};
  app.require_subcommand(1);

  std::string file;
  bool from_file = false;
  std::string edges;
  std::int64_t n = 0, m = 0;
  std::uint64_t seed = 1;
  int port = 8080;

  auto* matching = app.add_subcommand("matching", "Print a maximum matching");
  matching->add_option("file", file, "Graph file")->required();
  auto* classify = app.add_subcommand("classify", "Label every edge");
  classify->add_option("file", file, "Graph file")->required();
  classify->add_flag("--matching-from-file", from_file, "Use the file's m lines instead of Hopcroft-Karp");
  auto* verify = app.add_subcommand("verify", "Compare against the brute-force oracle");
  verify->add_option("file", file, "Graph file")->required();
  auto* decompose = app.add_subcommand("decompose", "Split a regular graph into perfect matchings");
  decompose->add_option("file", file, "Graph file")->required();
  auto* extend = app.add_subcommand("extend", "Extend non-adjacent edges to a matching");
  extend->add_option("file", file, "Graph file")->required();
  extend->add_option("--edges", edges, "Comma-separated i:j pairs, 1-based")->required();
  auto* bench = app.add_subcommand("bench", "Time matching and classification on a random graph");
  bench->add_option("--n", n, "Total node count")->required();
  bench->add_option("--m", m, "Edge count")->required();
  bench->add_option("--seed", seed, "RNG seed");
  auto* serve = app.add_subcommand("serve", "Start the domino game HTTP service");
  serve->add_option("--port", port, "Port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*matching) return cmd_matching(file);
    if (*classify) return cmd_classify(file, from_file);
    if (*verify) return cmd_verify(file);
    if (*decompose) return cmd_decompose(file);
    if (*extend) return cmd_extend(file, edges);
    if (*bench) return cmd_bench(n, m, seed);
    if (*serve) return cmd_serve(port);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
