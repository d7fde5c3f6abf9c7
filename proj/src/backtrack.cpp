// Copyright 2026 The qlab Authors
#include "qlab/backtrack.hpp"

#include <cmath>
#include <sstream>

namespace qlab {

namespace {

constexpr int kMaxNodes = 31;

struct Shape {
  std::vector<std::vector<int>> children;
  std::vector<int> level;
  int depth = 0;
};

Shape validate(const BacktrackTree& t) {
  const int n = static_cast<int>(t.parent.size());
  if (n < 1) throw ValidationError("tree needs a root");
  if (n > kMaxNodes) throw ResourceError("backtracking detector limited to 31 nodes");
  if (static_cast<int>(t.marked.size()) != n) throw ValidationError("marked flags size mismatch");
  if (t.parent[0] != -1) throw ValidationError("node 0 must be the root");
  Shape s;
  s.children.resize(n);
  for (int v = 1; v < n; ++v) {
    if (t.parent[v] < 0 || t.parent[v] >= n || t.parent[v] == v)
      throw ValidationError("invalid parent");
    s.children[t.parent[v]].push_back(v);
  }
  s.level.assign(n, -1);
  s.level[0] = 0;
  std::vector<int> stack{0};
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int c : s.children[v]) {
      s.level[c] = s.level[v] + 1;
      s.depth = std::max(s.depth, s.level[c]);
      stack.push_back(c);
    }
  }
  if (seen != n) throw ValidationError("parent array is not a tree rooted at 0");
  return s;
}

}  // namespace

BacktrackTree parse_backtrack_tree(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> marks;
  int max_v = 0, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    int a, b;
    if (first == "m") {
      if (!(ls >> a)) throw ValidationError("bad mark on line " + std::to_string(lineno));
      marks.push_back(a);
      max_v = std::max(max_v, a);
      continue;
    }
    try {
      a = std::stoi(first);
    } catch (const std::exception&) {
      throw ValidationError("bad edge on line " + std::to_string(lineno));
    }
    if (!(ls >> b)) throw ValidationError("bad edge on line " + std::to_string(lineno));
    edges.emplace_back(a, b);
    max_v = std::max({max_v, a, b});
  }
  if (max_v + 1 > kMaxNodes) throw ResourceError("backtracking detector limited to 31 nodes");
  BacktrackTree t;
  t.parent.assign(max_v + 1, -2);
  t.parent[0] = -1;
  t.marked.assign(max_v + 1, 0);
  for (auto [p, c] : edges) {
    if (c <= 0 || p < 0 || t.parent[c] != -2) throw ValidationError("invalid tree edge");
    t.parent[c] = p;
  }
  for (int m : marks) {
    if (m < 0) throw ValidationError("invalid mark");
    t.marked[m] = 1;
  }
  for (int v = 1; v <= max_v; ++v)
    if (t.parent[v] == -2) throw ValidationError("node " + std::to_string(v) + " has no parent");
  validate(t);
  return t;
}

BacktrackTree random_backtrack_tree(int nodes, double p_marked, Rng& rng) {
  if (nodes < 1 || nodes > kMaxNodes) throw ValidationError("tree size must lie in [1, 31]");
  BacktrackTree t;
  t.parent.assign(nodes, -1);
  t.marked.assign(nodes, 0);
  std::vector<char> is_leaf(nodes, 1);
  for (int v = 1; v < nodes; ++v) {
    t.parent[v] = static_cast<int>(uniform_index(rng, v));
    is_leaf[t.parent[v]] = 0;
  }
  if (bernoulli(rng, p_marked)) {
    std::vector<int> leaves;
    for (int v = 0; v < nodes; ++v)
      if (is_leaf[v]) leaves.push_back(v);
    const size_t count = 1 + uniform_index(rng, leaves.size());
    std::shuffle(leaves.begin(), leaves.end(), rng);
    for (size_t i = 0; i < count; ++i) t.marked[leaves[i]] = 1;
  }
  return t;
}

std::vector<cplx> backtracking_walk_matrix(const BacktrackTree& tree, double C1) {
  if (!(C1 > 0)) throw ValidationError("C1 must be positive");
  const Shape s = validate(tree);
  const int n = static_cast<int>(tree.parent.size());
  const double beta = 1.0 / std::sqrt(C1 * std::max(s.depth, 1));
  // Reflections for one part; state 0 is the root, state v > 0 the edge to v.
  auto part = [&](int parity) {
    std::vector<cplx> m(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1.0;
    for (int x = 0; x < n; ++x) {
      if (s.level[x] % 2 != parity || tree.marked[x]) continue;
      std::vector<int> idx{x};
      std::vector<double> amp{x == 0 ? beta : 1.0};
      for (int c : s.children[x]) {
        idx.push_back(c);
        amp.push_back(1.0);
      }
      double norm2 = 0;
      for (double a : amp) norm2 += a * a;
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
          m[static_cast<size_t>(idx[i]) * n + idx[j]] -= 2.0 * amp[i] * amp[j] / norm2;
    }
    return m;
  };
  const std::vector<cplx> ra = part(0), rb = part(1);
  std::vector<cplx> u(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx b = rb[static_cast<size_t>(i) * n + k];
      if (b == 0.0) continue;
      for (int j = 0; j < n; ++j)
        u[static_cast<size_t>(i) * n + j] += b * ra[static_cast<size_t>(k) * n + j];
    }
  return u;
}

BacktrackResult backtracking_detect(const BacktrackTree& tree, Rng& rng,
                                    const BacktrackOptions& opt) {
  if (opt.precision_bits < 0 || opt.precision_bits > 12)
    throw ValidationError("precision bits must lie in [0, 12]");
  if (!(opt.C > 0)) throw ValidationError("C must be positive");
  WallTimer timer;
  const int n = static_cast<int>(tree.parent.size());
  std::vector<cplx> m = backtracking_walk_matrix(tree, opt.C1);
  if (n == 1) m = {m[0], 0.0, 0.0, 1.0};  // at least one system qubit
  const DenseUnitary u = embed_unitary(std::max(n, 2), m);
  BacktrackResult res;
  res.bits = opt.precision_bits > 0
                 ? opt.precision_bits
                 : static_cast<int>(std::ceil(std::log2(opt.C * std::sqrt(static_cast<double>(n))))) + 2;
  const StateVector root(u.num_qubits(), 0);
  const std::vector<double> dist = phase_estimate_distribution(u, root, res.bits);
  res.p_zero = dist[0];
  std::discrete_distribution<uint64_t> pick(dist.begin(), dist.end());
  res.estimate = pick(rng);
  res.exists = res.estimate == 0;
  res.cost.charge("walk.step", (int64_t{1} << res.bits) - 1);
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

}  // namespace qlab
