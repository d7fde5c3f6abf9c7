// Copyright 2026 The qlab Authors
#include "qlab/electric.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

namespace qlab {

ElectricNetwork parse_network(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ElectricNetwork net;
  int n = -1, max_v = -1, lineno = 0;
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
    int u, v;
    double w = 1.0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw ValidationError("bad edge on line " + std::to_string(lineno));
    }
    if (!(ls >> v)) throw ValidationError("bad edge on line " + std::to_string(lineno));
    if (!(ls >> w)) w = 1.0;
    net.edges.emplace_back(u, v, w);
    max_v = std::max({max_v, u, v});
  }
  net.n = n < 0 ? max_v + 1 : n;
  return net;
}

namespace {

void validate(const ElectricNetwork& net) {
  if (net.n < 1) throw ValidationError("network needs a vertex");
  if (net.n > 5000) throw ResourceError("network too large for the dense solver");
  for (const auto& [u, v, w] : net.edges) {
    if (u < 0 || v < 0 || u >= net.n || v >= net.n || u == v)
      throw ValidationError("invalid network edge");
    if (!(w > 0)) throw ValidationError("edge weights must be positive");
  }
  if (net.marked.empty()) throw ValidationError("marked set must be non-empty");
  for (int m : net.marked)
    if (m < 0 || m >= net.n) throw ValidationError("marked vertex out of range");
  if (!net.sigma.empty()) {
    if (static_cast<int>(net.sigma.size()) != net.n) throw ValidationError("sigma size mismatch");
    double s = 0;
    for (double x : net.sigma) {
      if (x < 0) throw ValidationError("sigma must be non-negative");
      s += x;
    }
    if (std::abs(s - 1) > 1e-9) throw ValidationError("sigma must sum to 1");
  }
  // Connectivity by union-find.
  std::vector<int> root(net.n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](int a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  int parts = net.n;
  for (const auto& [u, v, w] : net.edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      root[a] = b;
      --parts;
    }
  }
  if (parts != 1) throw ValidationError("network must be connected");
}

void check_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& x, const Eigen::VectorXd& b) {
  const double scale = std::max(b.norm(), 1e-300);
  if (!x.allFinite() || (a * x - b).norm() / scale > 1e-10)
    throw ResourceError("linear system is singular or ill-conditioned");
}

}  // namespace

std::vector<double> stationary_distribution(const ElectricNetwork& net) {
  std::vector<double> xi(net.n, 0.0);
  double total = 0.0;
  for (const auto& [u, v, w] : net.edges) {
    xi[u] += w;
    xi[v] += w;
    total += w;
  }
  if (total <= 0) throw ValidationError("network has no edges");
  for (double& x : xi) x /= 2 * total;
  return xi;
}

HittingResistance hitting_resistance_check(const ElectricNetwork& net) {
  validate(net);
  HittingResistance res;
  const std::vector<double> sigma = net.sigma.empty() ? stationary_distribution(net) : net.sigma;
  std::vector<char> is_marked(net.n, 0);
  for (int m : net.marked) is_marked[m] = 1;
  std::vector<int> free_idx(net.n, -1);
  int k = 0;
  for (int v = 0; v < net.n; ++v)
    if (!is_marked[v]) free_idx[v] = k++;
  for (const auto& [u, v, w] : net.edges) res.total_weight += w;
  if (k == 0) return res;

  std::vector<double> deg(net.n, 0.0);
  for (const auto& [u, v, w] : net.edges) {
    deg[u] += w;
    deg[v] += w;
  }
  // Hitting times: h_u = 1 + sum_v P(u, v) h_v, h = 0 on M.
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(k, k);
  for (const auto& [u, v, w] : net.edges) {
    if (free_idx[u] >= 0 && free_idx[v] >= 0) {
      a(free_idx[u], free_idx[v]) -= w / deg[u];
      a(free_idx[v], free_idx[u]) -= w / deg[v];
    }
  }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(k);
  const Eigen::VectorXd h = a.partialPivLu().solve(ones);
  check_residual(a, h, ones);
  for (int v = 0; v < net.n; ++v)
    if (free_idx[v] >= 0) res.hitting += sigma[v] * h(free_idx[v]);

  // Potentials with sigma injected and M grounded: L_UU p = sigma_U.
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(k, k);
  for (const auto& [u, v, w] : net.edges) {
    const int iu = free_idx[u], iv = free_idx[v];
    if (iu >= 0) lap(iu, iu) += w;
    if (iv >= 0) lap(iv, iv) += w;
    if (iu >= 0 && iv >= 0) {
      lap(iu, iv) -= w;
      lap(iv, iu) -= w;
    }
  }
  Eigen::VectorXd inject(k);
  for (int v = 0; v < net.n; ++v)
    if (free_idx[v] >= 0) inject(free_idx[v]) = sigma[v];
  const Eigen::VectorXd p = lap.ldlt().solve(inject);
  check_residual(lap, p, inject);
  auto potential = [&](int v) { return free_idx[v] >= 0 ? p(free_idx[v]) : 0.0; };
  // Energy of the flow f = w (p_u - p_v), i.e. sum f^2 / w.
  for (const auto& [u, v, w] : net.edges) {
    const double f = w * (potential(u) - potential(v));
    res.resistance += f * f / w;
  }
  res.two_wr = 2 * res.total_weight * res.resistance;
  if (res.hitting > 0 || res.two_wr > 0)
    res.relative_gap = std::abs(res.hitting - res.two_wr) / std::max(res.hitting, 1e-300);
  return res;
}

}  // namespace qlab
