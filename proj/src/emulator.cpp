// Copyright 2026 The qlab Authors
#include "qlab/emulator.hpp"

#include <cmath>

namespace qlab {

BackendKind parse_backend(const std::string& name) {
  if (name == "statevector") return BackendKind::statevector;
  if (name == "analytic") return BackendKind::analytic;
  if (name == "analytic-ideal" || name == "ideal") return BackendKind::analytic_ideal;
  throw ValidationError("unknown backend '" + name + "'");
}

std::string backend_name(BackendKind k) {
  switch (k) {
    case BackendKind::statevector:
      return "statevector";
    case BackendKind::analytic:
      return "analytic";
    case BackendKind::analytic_ideal:
      return "analytic-ideal";
  }
  return "?";
}

Predicate oracle_predicate(BooleanOracle& f) {
  Predicate p;
  p.exact = [&f](uint64_t i) { return f.peek(i); };
  p.evaluate = [&f](uint64_t i, CostReport& c) {
    c.charge("verify", 1);
    return f.query(i);
  };
  return p;
}

Predicate simple_predicate(std::function<bool(uint64_t)> f, int64_t unit_cost) {
  Predicate p;
  p.exact = f;
  p.evaluate = [f, unit_cost](uint64_t i, CostReport& c) {
    c.charge("verify", unit_cost);
    return f(i);
  };
  p.unit_cost = unit_cost;
  return p;
}

bool evaluate_predicate(const Predicate& p, uint64_t i, CostReport& cost) {
  if (p.reject_cost && !p.exact(i)) {
    cost.charge("verify", *p.reject_cost);
    return false;
  }
  return p.evaluate(i, cost);
}

namespace {

struct Scan {
  std::vector<uint64_t> marked;
  uint64_t size = 0;
};

Scan scan_range(const Predicate& p, uint64_t l, uint64_t r) {
  Scan s;
  s.size = r - l + 1;
  for (uint64_t i = l; i <= r; ++i)
    if (p.exact(i)) s.marked.push_back(i);
  return s;
}

uint64_t pick_unmarked(const Predicate& p, uint64_t l, const Scan& s, Rng& rng) {
  // Rejection sampling is fine while unmarked indices are common; fall back
  // to enumeration when they are rare.
  if (2 * s.marked.size() <= s.size) {
    for (;;) {
      const uint64_t i = l + uniform_index(rng, s.size);
      if (!p.exact(i)) return i;
    }
  }
  std::vector<uint64_t> free;
  size_t k = 0;
  for (uint64_t i = l; i < l + s.size; ++i) {
    if (k < s.marked.size() && s.marked[k] == i) {
      ++k;
      continue;
    }
    free.push_back(i);
  }
  return free[uniform_index(rng, free.size())];
}

// One Grover run of `iters` iterations followed by measurement; returns the
// measured index.
uint64_t run_stage(const Predicate& p, uint64_t l, const Scan& s, int64_t iters,
                   Backend& b, bool ideal_hit) {
  const uint64_t t = s.marked.size();
  if (b.kind == BackendKind::statevector) {
    StateVector st = uniform_live_state(s.size);
    auto& a = st.mutable_amps();
    for (int64_t k = 0; k < iters; ++k) {
      for (uint64_t idx : s.marked) a[idx - l] = -a[idx - l];
      apply_diffusion(st, s.size);
    }
    return l + sample_index(st, b.rng);
  }
  bool success;
  if (t == 0) {
    success = false;
  } else if (b.kind == BackendKind::analytic_ideal) {
    success = ideal_hit;
  } else {
    success = bernoulli(b.rng, analytic_success(s.size, t, iters));
  }
  if (success) return s.marked[uniform_index(b.rng, t)];
  if (t == s.size) return s.marked[uniform_index(b.rng, t)];
  return pick_unmarked(p, l, s, b.rng);
}

}  // namespace

SearchResult emulated_search(const Predicate& p, uint64_t l, uint64_t r,
                             SearchMode mode, Backend& b, const std::string& label,
                             std::optional<uint64_t> schedule_n) {
  if (l > r) throw ValidationError("empty search range");
  WallTimer timer;
  SearchResult res;
  const Scan s = scan_range(p, l, r);
  if (b.kind == BackendKind::statevector && s.size > kStatevectorMaxSpace)
    throw ResourceError("statevector backend refuses search spaces above 2^20");
  if (b.kind != BackendKind::statevector) res.cost.privileged_scan = true;
  const uint64_t t = s.marked.size();
  const std::string verify_label = label + ".verify";
  auto verify = [&](uint64_t i) {
    CostReport c;
    const bool ok = evaluate_predicate(p, i, c);
    res.cost.charge(verify_label, c.queries);
    return ok;
  };

  if (mode == SearchMode::known_t && t > 0) {
    const GroverPlan plan = GroverPlan::make(s.size, t);
    res.cost.charge(label, plan.L * p.unit_cost);
    const uint64_t i = run_stage(p, l, s, plan.L, b, true);
    if (verify(i)) res.index = i;
  } else {
    // Staged schedule; also used for known_t when t = 0.
    const int stages = unknown_t_stages(schedule_n.value_or(s.size));
    int ideal_stage = stages;
    if (t > 0) {
      const int64_t lopt = GroverPlan::make(s.size, t).L;
      for (int j = 1; j <= stages; ++j)
        if ((int64_t{1} << (j - 1)) >= lopt) {
          ideal_stage = j;
          break;
        }
    }
    for (int j = 1; j <= stages; ++j) {
      const int64_t iters = int64_t{1} << (j - 1);
      res.cost.charge(label, iters * p.unit_cost);
      const uint64_t i = run_stage(p, l, s, iters, b, j == ideal_stage);
      if (verify(i)) {
        res.index = i;
        break;
      }
    }
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

SearchResult fixed_iteration_search(const Predicate& p, uint64_t l, uint64_t r, int64_t iters,
                                    Backend& b, const std::string& label) {
  if (l > r) throw ValidationError("empty search range");
  if (iters < 0) throw ValidationError("iteration count must be non-negative");
  WallTimer timer;
  SearchResult res;
  const Scan s = scan_range(p, l, r);
  if (b.kind == BackendKind::statevector && s.size > kStatevectorMaxSpace)
    throw ResourceError("statevector backend refuses search spaces above 2^20");
  if (b.kind != BackendKind::statevector) res.cost.privileged_scan = true;
  res.cost.charge(label, iters * p.unit_cost);
  // The ideal backend hits whenever the run succeeds with probability >= 1/2
  // (up to rounding: sin^2(3 pi / 4) evaluates just below 1/2).
  const bool ideal_hit =
      !s.marked.empty() && analytic_success(s.size, s.marked.size(), iters) >= 0.5 - 1e-12;
  const uint64_t i = run_stage(p, l, s, iters, b, ideal_hit);
  CostReport c;
  if (evaluate_predicate(p, i, c)) res.index = i;
  res.cost.charge(label + ".verify", c.queries);
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

SearchResult emulated_search(BooleanOracle& f, uint64_t l, uint64_t r,
                             SearchMode mode, Backend& b) {
  if (r >= f.size()) throw ValidationError("search range exceeds oracle domain");
  const Predicate p = oracle_predicate(f);
  SearchResult res = emulated_search(p, l, r, mode, b, f.label());
  // Keep the oracle's own ledger in step with the superposed applications.
  f.charge_superposed(res.cost.by_label(f.label()));
  return res;
}

EquivalenceReport backend_equivalence_check(BooleanOracle& f, SearchMode mode,
                                            int64_t trials, uint64_t seed) {
  if (f.size() > 1024) throw ValidationError("equivalence check supports n <= 1024");
  EquivalenceReport rep;
  rep.trials = trials;
  Backend sv(BackendKind::statevector, derive_seed(seed, 0));
  Backend an(BackendKind::analytic, derive_seed(seed, 1));
  const Predicate p = oracle_predicate(f);
  const uint64_t n = f.size();
  if (mode == SearchMode::known_t && !f.marked().empty()) {
    // The state before measurement is deterministic; sample it directly.
    const uint64_t t = f.marked().size();
    const TrialStats st = grover_known_t_trials(f, n, t, trials, sv.rng);
    rep.statevector_rate = static_cast<double>(st.successes) / static_cast<double>(trials);
  } else {
    int64_t ok = 0;
    for (int64_t k = 0; k < trials; ++k)
      if (emulated_search(p, 0, n - 1, mode, sv).index) ++ok;
    rep.statevector_rate = static_cast<double>(ok) / static_cast<double>(trials);
  }
  int64_t ok = 0;
  for (int64_t k = 0; k < trials; ++k)
    if (emulated_search(p, 0, n - 1, mode, an).index) ++ok;
  rep.analytic_rate = static_cast<double>(ok) / static_cast<double>(trials);
  const double pbar = 0.5 * (rep.statevector_rate + rep.analytic_rate);
  rep.sigma = std::sqrt(std::max(pbar * (1 - pbar), 1e-12) * 2.0 / static_cast<double>(trials));
  rep.within_3sigma = std::abs(rep.statevector_rate - rep.analytic_rate) <= 3 * rep.sigma + 1e-12;
  return rep;
}

}  // namespace qlab
