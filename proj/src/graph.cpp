#include "fastcon/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "fastcon/errors.hpp"

namespace fastcon {

void validate(const Graph& g) {
  if (g.node_count < 1) throw InvalidOptions("graph needs at least one node");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.i < 0 || e.i >= g.node_count || e.j < 0 || e.j >= g.node_count) {
      throw InvalidOptions("edge endpoint out of range");
    }
    if (e.i == e.j) throw InvalidOptions("self-loops are not allowed");
    if (!(e.weight > 0.0)) throw InvalidOptions("edge weight must be positive");
    auto key = std::minmax(e.i, e.j);
    if (!seen.insert(key).second) {
      throw InvalidOptions("duplicate edge between nodes " +
                           std::to_string(key.first + 1) + " and " +
                           std::to_string(key.second + 1));
    }
  }
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidOptions("cycle graph needs at least 3 nodes");
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1.0});
  return g;
}

Graph path_graph(int n) {
  if (n < 2) throw InvalidOptions("path graph needs at least 2 nodes");
  Graph g{n, {}};
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, 1.0});
  return g;
}

Graph star_graph(int n) {
  if (n < 2) throw InvalidOptions("star graph needs at least 2 nodes");
  Graph g{n, {}};
  for (int i = 1; i < n; ++i) g.edges.push_back({0, i, 1.0});
  return g;
}

Graph complete_graph(int n) {
  if (n < 2) throw InvalidOptions("complete graph needs at least 2 nodes");
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, 1.0});
  }
  return g;
}

Graph complete_bipartite_graph(int p, int q) {
  if (p < 1 || q < 1) throw InvalidOptions("bipartite parts must be nonempty");
  Graph g{p + q, {}};
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) g.edges.push_back({i, p + j, 1.0});
  }
  return g;
}

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  Graph g;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string tag;
      fields >> tag;
      if (tag != "N" && tag != "n") {
        parse_fail(line_no, "expected header 'N <node_count>'");
      }
      if (!(fields >> g.node_count) || g.node_count < 1) {
        parse_fail(line_no, "invalid node count");
      }
      have_header = true;
    } else {
      int i = 0;
      int j = 0;
      double w = 1.0;
      if (!(fields >> i >> j)) parse_fail(line_no, "expected '<i> <j> [weight]'");
      if (!(fields >> w)) w = 1.0;
      if (i < 1 || i > g.node_count || j < 1 || j > g.node_count) {
        parse_fail(line_no, "node index out of range 1.." +
                                std::to_string(g.node_count));
      }
      if (i == j) parse_fail(line_no, "self-loop");
      if (!(w > 0.0)) parse_fail(line_no, "weight must be positive");
      g.edges.push_back({i - 1, j - 1, w});
    }
    std::string extra;
    if (fields >> extra) parse_fail(line_no, "trailing tokens '" + extra + "'");
  }
  if (!have_header) throw ParseError("missing 'N <node_count>' header");
  try {
    validate(g);
  } catch (const InvalidOptions& e) {
    throw ParseError(e.what());
  }
  return g;
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "N " << g.node_count << "\n";
  for (const Edge& e : g.edges) {
    out << e.i + 1 << " " << e.j + 1 << " " << e.weight << "\n";
  }
}

Matrix laplacian(const Graph& g) {
  validate(g);
  const int n = g.node_count;
  Matrix l(n, n);
  for (const Edge& e : g.edges) {
    l(e.i, e.j) = -e.weight;
    l(e.j, e.i) = -e.weight;
  }
  // Diagonal as the ascending-index sum of the row's weights, matching the
  // order a row-sum test folds the off-diagonal entries in.
  for (int i = 0; i < n; ++i) {
    double d = 0.0;
    for (int j = 0; j < n; ++j) d += -l(i, j);
    l(i, i) = d;
  }
  return l;
}

std::vector<double> degrees(const Graph& g) {
  std::vector<double> d(g.node_count, 0.0);
  for (const Edge& e : g.edges) {
    d[e.i] += e.weight;
    d[e.j] += e.weight;
  }
  return d;
}

}  // namespace fastcon
