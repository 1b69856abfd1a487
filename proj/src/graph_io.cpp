#include "bpm/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bpm {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

long long number(std::string_view tok, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected integer, got '" + std::string(tok) + "'");
  return v;
}

Edge one_based_pair(const std::vector<std::string_view>& f, Index n1, Index n2, std::size_t line) {
  if (f.size() != 3) fail(line, "expected '" + std::string(f[0]) + " <i> <j>'");
  const long long i = number(f[1], line);
  const long long j = number(f[2], line);
  if (i < 1 || i > n1 || j < 1 || j > n2) fail(line, "node index out of range");
  return {static_cast<Index>(i - 1), static_cast<Index>(j - 1)};
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  Index n1 = 0, n2 = 0;
  long long declared = 0;
  std::vector<Edge> edges;
  std::vector<Edge> matched;
  bool any_matching = false;

  while (std::getline(in, text)) {
    ++line_no;
    const auto f = split(text);
    if (f.empty()) continue;
    const auto tag = f[0];
    if (tag == "c") continue;
    if (!have_header) {
      if (tag != "p") fail(line_no, "expected 'p bpm <n1> <n2> <m>' header");
      if (f.size() != 5 || f[1] != "bpm") fail(line_no, "malformed header");
      const long long a = number(f[2], line_no), b = number(f[3], line_no), c = number(f[4], line_no);
      if (a < 0 || b < 0 || c < 0 || a > INT32_MAX || b > INT32_MAX || c > INT32_MAX) fail(line_no, "bad header counts");
      n1 = static_cast<Index>(a);
      n2 = static_cast<Index>(b);
      declared = c;
      edges.reserve(static_cast<std::size_t>(c));
      have_header = true;
      continue;
    }
    if (tag == "p") fail(line_no, "second header");
    if (tag == "e") {
      if (static_cast<long long>(edges.size()) == declared) fail(line_no, "more edges than declared");
      edges.push_back(one_based_pair(f, n1, n2, line_no));
    } else if (tag == "m") {
      matched.push_back(one_based_pair(f, n1, n2, line_no));
      any_matching = true;
    } else {
      fail(line_no, "unknown line tag '" + std::string(tag) + "'");
    }
  }
  if (!have_header) fail(line_no, "missing header");
  if (static_cast<long long>(edges.size()) != declared) {
    fail(line_no, "declared " + std::to_string(declared) + " edges, found " + std::to_string(edges.size()));
  }

  GraphFile out;
  out.graph = build_graph(n1, n2, std::move(edges));
  if (any_matching) out.matching = Matching(n1, n2, std::move(matched));
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const BipartiteGraph& g, const Matching* m) {
  out << "p bpm " << g.left_count() << ' ' << g.right_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.left + 1 << ' ' << e.right + 1 << '\n';
  if (m != nullptr) {
    for (const auto& p : m->pairs()) out << "m " << p.left + 1 << ' ' << p.right + 1 << '\n';
  }
}

void write_classification(std::ostream& out, const BipartiteGraph& g, const EdgeClassification& c, Index t) {
  for (Index id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    out << e.left + 1 << ' ' << e.right + 1 << ' ' << to_string(c[id]) << '\n';
  }
  out << "s allowed " << c.allowed_count() << " matching " << t << '\n';
}

}  // namespace bpm
