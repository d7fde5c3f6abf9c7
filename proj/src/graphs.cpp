// Copyright 2026 The qlab Authors
#include "qlab/graphs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qlab {

GraphRep parse_graph_rep(const std::string& name) {
  if (name == "list") return GraphRep::list;
  if (name == "matrix") return GraphRep::matrix;
  throw ValidationError("unknown graph representation '" + name + "'");
}

Graph::Graph(int n, bool directed, GraphRep rep)
    : n_(n), directed_(directed), rep_(rep) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  if (static_cast<uint64_t>(n) * n > (uint64_t{1} << 26))
    throw ResourceError("graph too large for the dense weight table");
  adj_.resize(n);
  w_.assign(static_cast<size_t>(n) * n, kNoEdge);
}

void Graph::add_edge(int u, int v, double w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ValidationError("edge endpoint out of range");
  if (!(w >= 0.0)) throw ValidationError("edge weights must be non-negative");
  if (w != 1.0) weighted_ = true;
  auto set = [&](int a, int b) {
    double& slot = w_[static_cast<size_t>(a) * n_ + b];
    if (slot == kNoEdge) adj_[a].push_back(b);
    slot = w;
  };
  if (!has_edge(u, v)) ++m_;
  set(u, v);
  if (!directed_) set(v, u);
}

double Graph::weight(int u, int v) const { return w_[static_cast<size_t>(u) * n_ + v]; }

uint64_t Graph::row_length(int v) const {
  return rep_ == GraphRep::list ? adj_[v].size() : static_cast<uint64_t>(n_);
}

int Graph::row_entry(int v, uint64_t i) const {
  if (rep_ == GraphRep::list) return adj_[v][i];
  const int x = static_cast<int>(i);
  return has_edge(v, x) ? x : -1;
}

Graph Graph::with_rep(GraphRep rep) const {
  Graph g = *this;
  g.rep_ = rep;
  return g;
}

Graph parse_edge_list(const std::string& text, bool directed, GraphRep rep) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  struct E {
    int u, v;
    double w;
  };
  std::vector<E> edges;
  int max_v = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> n) || n < 1) throw ValidationError("bad vertex count on line " + std::to_string(lineno));
      continue;
    }
    E e{};
    try {
      e.u = std::stoi(first);
    } catch (const std::exception&) {
      throw ValidationError("bad edge on line " + std::to_string(lineno));
    }
    if (!(ls >> e.v)) throw ValidationError("bad edge on line " + std::to_string(lineno));
    if (!(ls >> e.w)) e.w = 1.0;
    if (e.u < 0 || e.v < 0) throw ValidationError("negative vertex on line " + std::to_string(lineno));
    max_v = std::max({max_v, e.u, e.v});
    edges.push_back(e);
  }
  if (n < 0) n = max_v + 1;
  if (n < 1) throw ValidationError("empty graph");
  Graph g(n, directed, rep);
  for (const E& e : edges) g.add_edge(e.u, e.v, e.w);
  return g;
}

Graph parse_adjacency_matrix(const std::string& text, bool directed) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<double> row;
    double x;
    while (ls >> x) row.push_back(x);
    if (!ls.eof()) throw ValidationError("bad matrix entry");
    if (!row.empty()) rows.push_back(row);
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ValidationError("empty matrix");
  Graph g(n, directed, GraphRep::matrix);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(rows[u].size()) != n) throw ValidationError("matrix is not square");
    for (int v = 0; v < n; ++v) {
      if (!directed && rows[u][v] != rows[v][u])
        throw ValidationError("undirected matrix must be symmetric");
      if (rows[u][v] != 0.0 && (directed || u <= v)) g.add_edge(u, v, rows[u][v]);
    }
  }
  return g;
}

bool is_acyclic(const Graph& g) {
  if (!g.directed()) return false;
  std::vector<int> indeg(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int x : g.neighbors(v)) ++indeg[x];
  std::vector<int> ready;
  for (int v = 0; v < g.n(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int x : g.neighbors(v))
      if (--indeg[x] == 0) ready.push_back(x);
  }
  return seen == g.n();
}

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw ValidationError("vertex out of range");
}

// Entries of row v that are edges to vertices with keep(x) true.
Predicate row_predicate(const Graph& g, int v, std::function<bool(int)> keep) {
  return simple_predicate([&g, v, keep = std::move(keep)](uint64_t i) {
    const int x = g.row_entry(v, i);
    return x >= 0 && keep(x);
  });
}

// Iterative DFS from root with NEXT_NOT_VISITED_Neighbor as a bounded
// first-one search after the last explored entry.
void dfs_visit(const Graph& g, int root, std::vector<char>& visited, Backend& backend,
               CostReport& cost, std::vector<int>* pre, std::vector<int>* post) {
  struct Frame {
    int v;
    uint64_t next;  // first row entry not yet examined
  };
  std::vector<Frame> stack{{root, 0}};
  visited[root] = 1;
  if (pre) pre->push_back(root);
  while (!stack.empty()) {
    const Frame top = stack.back();
    const uint64_t len = g.row_length(top.v);
    std::optional<uint64_t> found;
    if (top.next < len) {
      const Predicate p = row_predicate(g, top.v, [&visited](int x) { return !visited[x]; });
      IndexResult r = bounded_first_one(p, top.next, len - 1, backend);
      cost.merge(r.cost);
      found = r.index;
    }
    if (!found) {
      if (post) post->push_back(top.v);
      stack.pop_back();
      continue;
    }
    stack.back().next = *found + 1;
    const int x = g.row_entry(top.v, *found);
    visited[x] = 1;
    if (pre) pre->push_back(x);
    stack.push_back({x, 0});
  }
}

std::vector<int> topological_order(const Graph& g, Backend& backend, CostReport& cost) {
  if (!is_acyclic(g)) throw ValidationError("graph must be a directed acyclic graph");
  std::vector<char> visited(g.n(), 0);
  std::vector<int> post;
  for (int v = 0; v < g.n(); ++v)
    if (!visited[v]) dfs_visit(g, v, visited, backend, cost, nullptr, &post);
  std::reverse(post.begin(), post.end());
  return post;
}

}  // namespace

OrderResult qdfs(const Graph& g, int start, Backend& backend) {
  check_vertex(g, start);
  WallTimer timer;
  OrderResult res;
  std::vector<char> visited(g.n(), 0);
  dfs_visit(g, start, visited, backend, res.cost, &res.order, nullptr);
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

OrderResult qtopsort(const Graph& g, Backend& backend) {
  WallTimer timer;
  OrderResult res;
  res.order = topological_order(g, backend, res.cost);
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

DistanceResult qbfs(const Graph& g, int start, Backend& backend) {
  check_vertex(g, start);
  WallTimer timer;
  DistanceResult res;
  res.dist.assign(g.n(), kUnreachable);
  res.dist[start] = 0;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const uint64_t len = g.row_length(v);
    if (len == 0) continue;
    const Predicate p =
        row_predicate(g, v, [&res](int x) { return res.dist[x] == kUnreachable; });
    AllOnesResult r = all_ones(p, 0, len - 1, backend);
    res.cost.merge(r.cost);
    for (uint64_t i : r.indices) {
      const int x = g.row_entry(v, i);
      if (res.dist[x] != kUnreachable) continue;
      res.dist[x] = res.dist[v] + 1;
      queue.push_back(x);
    }
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

GameResult dag_game_solve(const Graph& g, Backend& backend) {
  WallTimer timer;
  GameResult res;
  const std::vector<int> order = topological_order(g, backend, res.cost);
  const int reps = 2 * ceil_log2(std::max(g.n(), 2));
  res.win.assign(g.n(), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const uint64_t len = g.row_length(v);
    if (len == 0) continue;
    const Predicate p = row_predicate(g, v, [&res](int x) { return !res.win[x]; });
    SearchResult s = repeated_search(p, 0, len - 1, reps, backend, "game");
    res.cost.merge(s.cost);
    res.win[v] = s.index.has_value();
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

LengthResult dag_longest_path(const Graph& g, int source, Backend& backend) {
  check_vertex(g, source);
  WallTimer timer;
  LengthResult res;
  const std::vector<int> order = topological_order(g, backend, res.cost);
  // Boosting to error O(1/n) per vertex.
  const int boost = ceil_log2(std::max(g.n(), 2)) + 1;
  std::vector<int64_t> longest(g.n(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const uint64_t len = g.row_length(v);
    if (len == 0) continue;
    // Non-edges carry 0, which is also the MAX of an empty set.
    auto key = [&g, &longest, v](uint64_t i) {
      const int x = g.row_entry(v, i);
      return RankedValue{x >= 0 ? -(longest[x] + 1) : 0, static_cast<int64_t>(i)};
    };
    RankedValue best{1, 0};
    for (int k = 0; k < boost; ++k) {
      MinSearchResult m = minimum_search(len, key, backend);
      res.cost.merge(m.cost);
      best = std::min(best, key(m.index));
    }
    longest[v] = -best.value;
  }
  res.length = longest[source];
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

OrderResult dfs_classical(const Graph& g, int start) {
  check_vertex(g, start);
  OrderResult res;
  std::vector<char> visited(g.n(), 0);
  std::vector<std::pair<int, uint64_t>> stack{{start, 0}};
  visited[start] = 1;
  res.order.push_back(start);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i == g.row_length(v)) {
      stack.pop_back();
      continue;
    }
    res.cost.charge("dfs.read", 1);
    const int x = g.row_entry(v, i++);
    if (x >= 0 && !visited[x]) {
      visited[x] = 1;
      res.order.push_back(x);
      stack.push_back({x, 0});
    }
  }
  return res;
}

DistanceResult bfs_classical(const Graph& g, int start) {
  check_vertex(g, start);
  DistanceResult res;
  res.dist.assign(g.n(), kUnreachable);
  res.dist[start] = 0;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (uint64_t i = 0; i < g.row_length(v); ++i) {
      res.cost.charge("bfs.read", 1);
      const int x = g.row_entry(v, i);
      if (x >= 0 && res.dist[x] == kUnreachable) {
        res.dist[x] = res.dist[v] + 1;
        queue.push_back(x);
      }
    }
  }
  return res;
}

}  // namespace qlab
