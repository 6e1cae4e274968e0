#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fastcon/matrix.hpp"

namespace fastcon {

// One undirected weighted edge; node indices are 0-based in memory.
struct Edge {
  int i = 0;
  int j = 0;
  double weight = 1.0;
};

// Weighted undirected graph: the adjacency it implies is symmetric with a
// zero diagonal, each unordered pair appears at most once.
struct Graph {
  int node_count = 0;
  std::vector<Edge> edges;
};

// Throws InvalidOptions when the edge list violates the Graph invariants
// (index out of range, self-loop, nonpositive weight, duplicate pair).
void validate(const Graph& g);

Graph cycle_graph(int n);
Graph path_graph(int n);
// Star K_{1,n-1}: node 0 is the hub.
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);

// Edge-list text format: '#' starts a comment, the first data line is
// "N <node_count>", every following data line is "<i> <j> [weight]" with
// 1-based node indices and default weight 1. Throws ParseError with the
// offending line number.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

// L = D - A. Each diagonal entry is computed as the ascending-index sum of
// the adjacency weights in its row, so it equals the negated ascending-index
// sum of the off-diagonal row entries exactly and every row sums to zero.
Matrix laplacian(const Graph& g);

std::vector<double> degrees(const Graph& g);

}  // namespace fastcon
