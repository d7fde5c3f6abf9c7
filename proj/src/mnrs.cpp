// Copyright 2026 The qlab Authors
#include "qlab/mnrs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace qlab {

MnrsRegime parse_mnrs_regime(const std::string& name) {
  if (name == "classical") return MnrsRegime::classical;
  if (name == "quantum") return MnrsRegime::quantum;
  throw ValidationError("unknown regime '" + name + "'");
}

double mnrs_cost(const MnrsCosts& c, int solution, MnrsRegime regime) {
  if (c.S < 0 || c.U < 0 || c.C < 0) throw ValidationError("costs must be non-negative");
  if (!(c.eps > 0 && c.eps <= 1)) throw ValidationError("eps must lie in (0, 1]");
  if (!(c.delta > 0 && c.delta <= 1)) throw ValidationError("delta must lie in (0, 1]");
  const bool q = regime == MnrsRegime::quantum;
  const double ie = q ? std::sqrt(1 / c.eps) : 1 / c.eps;
  const double ied = q ? std::sqrt(1 / (c.eps * c.delta)) : 1 / (c.eps * c.delta);
  switch (solution) {
    case 1:
      return ie * (c.S + c.C);
    case 2:
      return c.S + ied * c.U + ie * c.C;
    case 3:
      return c.S + ied * (c.U + c.C);
    default:
      throw ValidationError("solution must be 1, 2 or 3");
  }
}

MnrsCosts distinctness_costs(double n, double r) {
  if (!(r >= 1 && r < n)) throw ValidationError("need 1 <= r < n");
  MnrsCosts c;
  c.S = r;
  c.U = 1;
  c.C = 0;
  c.eps = r * r / (n * n);
  c.delta = std::min(1.0, n / (r * (n - r)));
  return c;
}

namespace {

void check_johnson(int n, int r) {
  if (r < 1 || r >= n) throw ValidationError("need 1 <= r < n");
  if (n > 16) throw ResourceError("Johnson transition matrix limited to n <= 16");
}

}  // namespace

Eigen::MatrixXd johnson_transition_matrix(int n, int r) {
  check_johnson(n, r);
  std::vector<uint32_t> subsets;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == r) subsets.push_back(m);
  std::map<uint32_t, int> index;
  for (size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);
  const double p = 1.0 / (static_cast<double>(r) * (n - r));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(subsets.size(), subsets.size());
  for (size_t a = 0; a < subsets.size(); ++a)
    for (int i = 0; i < n; ++i) {
      if (!((subsets[a] >> i) & 1)) continue;
      for (int j = 0; j < n; ++j) {
        if ((subsets[a] >> j) & 1) continue;
        m(a, index[(subsets[a] & ~(1u << i)) | (1u << j)]) += p;
      }
    }
  return m;
}

double johnson_spectral_gap(int n, int r) {
  const Eigen::MatrixXd m = johnson_transition_matrix(n, r);
  if (m.rows() == 1) return 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  return 1.0 - ev(ev.size() - 2);
}

JohnsonWalkResult johnson_walk_distinctness(const std::vector<int64_t>& x, int r, Rng& rng) {
  const int n = static_cast<int>(x.size());
  if (n > 200) throw ResourceError("Johnson walk limited to n <= 200");
  if (r < 2 || r >= n) throw ValidationError("need 2 <= r < n");
  WallTimer timer;
  JohnsonWalkResult res;
  res.eps = static_cast<double>(r) * (r - 1) / (static_cast<double>(n) * (n - 1));
  res.delta = static_cast<double>(n) / (static_cast<double>(r) * (n - r));
  res.move_budget = static_cast<int64_t>(std::ceil(20.0 / (res.eps * res.delta)));
  if (n <= 12) res.numeric_delta = johnson_spectral_gap(n, r);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  // perm[0..r) is the current subset, perm[r..n) its complement.
  std::map<int64_t, std::vector<int>> held;
  auto find_pair = [&]() -> std::optional<std::pair<int, int>> {
    for (const auto& [value, idx] : held)
      if (idx.size() > 1) return std::make_pair(std::min(idx[0], idx[1]), std::max(idx[0], idx[1]));
    return std::nullopt;
  };
  for (int k = 0; k < r; ++k) held[x[perm[k]]].push_back(perm[k]);
  res.cost.charge("johnson.query", r);
  std::optional<int64_t> dup;
  for (const auto& [value, idx] : held)
    if (idx.size() > 1) dup = value;
  while (!dup && res.moves < res.move_budget) {
    const size_t a = uniform_index(rng, r);
    const size_t b = r + uniform_index(rng, n - r);
    auto& out = held[x[perm[a]]];
    out.erase(std::find(out.begin(), out.end(), perm[a]));
    if (out.empty()) held.erase(x[perm[a]]);
    std::swap(perm[a], perm[b]);
    res.cost.charge("johnson.query", 1);
    ++res.moves;
    auto& in = held[x[perm[a]]];
    in.push_back(perm[a]);
    if (in.size() > 1) dup = x[perm[a]];
  }
  if (dup) res.pair = find_pair();
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

double johnson_marked_rate(const std::vector<int64_t>& x, int r, int samples, Rng& rng) {
  const int n = static_cast<int>(x.size());
  if (r < 2 || r >= n) throw ValidationError("need 2 <= r < n");
  if (samples < 1) throw ValidationError("samples must be positive");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int hits = 0;
  std::vector<int64_t> vals(r);
  for (int s = 0; s < samples; ++s) {
    // Partial Fisher-Yates for the first r positions.
    for (int k = 0; k < r; ++k) std::swap(perm[k], perm[k + uniform_index(rng, n - k)]);
    for (int k = 0; k < r; ++k) vals[k] = x[perm[k]];
    std::sort(vals.begin(), vals.end());
    hits += std::adjacent_find(vals.begin(), vals.end()) != vals.end();
  }
  return static_cast<double>(hits) / samples;
}

}  // namespace qlab
