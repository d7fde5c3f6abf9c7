// Copyright 2026 The qlab Authors
#include "qlab/nand.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace qlab {

namespace {

void check_leaves(size_t n) {
  if (n < 2 || !is_pow2(n)) throw ValidationError("NAND tree must be balanced: n a power of two");
  if (n > 64) throw ResourceError("NAND walk limited to 64 leaves");
}

std::vector<double> state_distribution(const NandWalk& w, int64_t steps) {
  std::vector<cplx> amps(w.walk.num_states(), 0.0);
  amps[w.start_state()] = 1.0;
  for (int64_t t = 0; t < steps; ++t) w.walk.step(amps);
  std::vector<double> p(amps.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amps[i]);
  return p;
}

// P(Binomial(runs, p) > runs / 2).
double majority_probability(double p, int runs) {
  double total = 0.0;
  for (int k = runs / 2 + 1; k <= runs; ++k)
    total += std::exp(std::lgamma(runs + 1.0) - std::lgamma(k + 1.0) -
                      std::lgamma(runs - k + 1.0)) *
             std::pow(p, k) * std::pow(1 - p, runs - k);
  return total;
}

}  // namespace

bool nand_classical(const BitString& x) {
  check_leaves(x.size());
  std::vector<uint8_t> level(x.begin(), x.end());
  while (level.size() > 1) {
    std::vector<uint8_t> up(level.size() / 2);
    for (size_t i = 0; i < up.size(); ++i) up[i] = !(level[2 * i] && level[2 * i + 1]);
    level.swap(up);
  }
  return level[0];
}

size_t NandWalk::start_state() const { return walk.state(tail - 1, 0); }

NandWalk make_nand_walk(const BitString& x) {
  check_leaves(x.size());
  const int n = static_cast<int>(x.size());
  const int tail = 2 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  // heap node h in [1, 2n) is vertex tail + h - 1
  std::vector<std::vector<int>> adj(tail + 2 * n - 1);
  auto link = [&adj](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int i = tail - 1; i > 0; --i) link(i, i - 1);
  link(0, tail);
  for (int h = 1; h < n; ++h) {
    link(tail + h - 1, tail + 2 * h - 1);
    link(tail + h - 1, tail + 2 * h);
  }
  NandWalk w{n, tail, CoinedGraphWalk(adj), {}};
  w.marked_state.assign(w.walk.num_states(), 0);
  for (int j = 0; j < n; ++j) {
    if (!x[j]) continue;
    const int v = tail + n + j - 1;
    w.walk.set_marked(v);
    for (int p = 0; p < w.walk.degree(v); ++p) w.marked_state[w.walk.state(v, p)] = 1;
  }
  return w;
}

double nand_one_probability(const BitString& x, int64_t steps) {
  if (steps < 0) throw ValidationError("steps must be non-negative");
  const NandWalk w = make_nand_walk(x);
  const std::vector<double> p = state_distribution(w, steps);
  double one = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    if (w.marked_state[i]) one += p[i];
  return one;
}

NandResult nand_evaluate(const BitString& x, Rng& rng, int runs, int64_t steps) {
  if (runs < 1 || runs % 2 == 0) throw ValidationError("runs must be a positive odd number");
  WallTimer timer;
  NandResult res;
  const NandWalk w = make_nand_walk(x);
  res.steps = steps > 0 ? steps : nand_pinned_steps(w.n);
  res.runs = runs;
  // Every run evolves the same state; simulate once and measure it `runs` times.
  const std::vector<double> p = state_distribution(w, res.steps);
  for (size_t i = 0; i < p.size(); ++i)
    if (w.marked_state[i]) res.p_one += p[i];
  std::discrete_distribution<size_t> measure(p.begin(), p.end());
  for (int r = 0; r < runs; ++r) {
    res.cost.charge("nand.query", res.steps);
    res.ones += w.marked_state[measure(rng)];
  }
  res.value = 2 * res.ones > runs;
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

int64_t nand_pinned_steps(int n) {
  check_leaves(static_cast<size_t>(n));
  // nand_calibrate(n, 200, 2026) for n = 2 .. 64.
  static constexpr int64_t kPinned[] = {7, 6, 21, 12, 17, 26};
  return kPinned[std::countr_zero(static_cast<unsigned>(n)) - 1];
}

NandCalibration nand_calibrate(int n, int held_out, uint64_t seed, int runs) {
  check_leaves(static_cast<size_t>(n));
  if (held_out < 1) throw ValidationError("held-out set must be non-empty");
  Rng rng(seed);
  std::vector<BitString> inputs(held_out, BitString(n));
  std::vector<bool> truth(held_out);
  std::vector<NandWalk> walks;
  for (int k = 0; k < held_out; ++k) {
    for (auto& b : inputs[k]) b = static_cast<uint8_t>(uniform_index(rng, 2));
    truth[k] = nand_classical(inputs[k]);
    walks.push_back(make_nand_walk(inputs[k]));
  }
  const double rn = std::sqrt(static_cast<double>(n));
  const int64_t lo = static_cast<int64_t>(std::ceil(rn));
  const int64_t hi = static_cast<int64_t>(std::floor(10 * rn));
  std::vector<double> acc(hi + 1, 0.0);
  for (int k = 0; k < held_out; ++k) {
    const NandWalk& w = walks[k];
    std::vector<cplx> amps(w.walk.num_states(), 0.0);
    amps[w.start_state()] = 1.0;
    for (int64_t t = 1; t <= hi; ++t) {
      w.walk.step(amps);
      if (t < lo) continue;
      double one = 0.0;
      for (size_t i = 0; i < amps.size(); ++i)
        if (w.marked_state[i]) one += std::norm(amps[i]);
      acc[t] += majority_probability(truth[k] ? one : 1 - one, runs) / held_out;
    }
  }
  NandCalibration best;
  for (int64_t t = lo; t <= hi; ++t)
    if (acc[t] > best.accuracy) best = {t, acc[t]};
  return best;
}

}  // namespace qlab
