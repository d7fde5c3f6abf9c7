// Copyright 2026 The qlab Authors
#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qlab/search.hpp"

namespace qlab {

enum class GraphRep { list, matrix };

GraphRep parse_graph_rep(const std::string& name);

inline constexpr double kNoEdge = std::numeric_limits<double>::infinity();
inline constexpr int64_t kUnreachable = -1;

// Vertices are 0..n-1. The representation decides what one query reads:
// list rows hold the L_v neighbors of v, matrix rows hold n 0/1 entries.
class Graph {
 public:
  Graph(int n, bool directed, GraphRep rep = GraphRep::list);

  void add_edge(int u, int v, double w = 1.0);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  GraphRep rep() const { return rep_; }
  bool weighted() const { return weighted_; }
  // Directed edges count once, undirected edges once per pair.
  int64_t m() const { return m_; }

  bool has_edge(int u, int v) const { return weight(u, v) != kNoEdge; }
  double weight(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // Row access as seen by the query model.
  uint64_t row_length(int v) const;
  // Vertex behind entry i of row v, or -1 for a matrix zero.
  int row_entry(int v, uint64_t i) const;

  Graph with_rep(GraphRep rep) const;

 private:
  int n_;
  bool directed_;
  GraphRep rep_;
  bool weighted_ = false;
  int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<double> w_;  // n*n, kNoEdge when absent
};

// "u v [w]" lines after an optional "n <count>" header; '#' starts a comment.
Graph parse_edge_list(const std::string& text, bool directed, GraphRep rep = GraphRep::list);
// n lines of n whitespace-separated 0/1 entries.
Graph parse_adjacency_matrix(const std::string& text, bool directed);

bool is_acyclic(const Graph& g);

struct OrderResult {
  std::vector<int> order;
  CostReport cost;
};

struct DistanceResult {
  std::vector<int64_t> dist;  // kUnreachable for vertices not reached
  CostReport cost;
};

struct GameResult {
  std::vector<bool> win;
  CostReport cost;
};

struct LengthResult {
  int64_t length = 0;
  CostReport cost;
};

// DFS preorder from start. The next unvisited neighbor of the top vertex is
// found with the bounded first-one search over its row.
OrderResult qdfs(const Graph& g, int start, Backend& backend);
// Reverse DFS postorder over all roots. Requires an acyclic directed graph.
OrderResult qtopsort(const Graph& g, Backend& backend);
// BFS layer distances; each dequeued row is scanned with all_ones.
DistanceResult qbfs(const Graph& g, int start, Backend& backend);
// Win(v) for the two-player stone game on a DAG: v wins iff some move leads
// to a losing vertex. Each row search is repeated 2*ceil(log2 n) times.
GameResult dag_game_solve(const Graph& g, Backend& backend);
// Number of edges on the longest path starting at `source`.
LengthResult dag_longest_path(const Graph& g, int source, Backend& backend);

// Classical baselines with the same accounting (one query per row entry).
OrderResult dfs_classical(const Graph& g, int start);
DistanceResult bfs_classical(const Graph& g, int start);

enum class HamVariant { brute, dp, quantum_bf, quantum_dp };
enum class TspVariant { dp, quantum_dp };

HamVariant parse_ham_variant(const std::string& name);
TspVariant parse_tsp_variant(const std::string& name);

struct PathResult {
  std::optional<std::vector<int>> path;
  double weight = 0.0;  // sum of edge weights along path
  CostReport cost;
};

bool check_path(const Graph& g, const std::vector<int>& path);
// i-th permutation of 0..n-1 in lexicographic order.
std::vector<int> permutation_at(int n, uint64_t i);

PathResult hamiltonian_path(const Graph& g, HamVariant variant, Backend& backend);
// Minimum-weight Hamiltonian path; absent edges are never used.
PathResult tsp(const Graph& g, TspVariant variant, Backend& backend);

}  // namespace qlab
