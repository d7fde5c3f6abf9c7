// Copyright 2026 The qlab Authors
#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "qlab/graphs.hpp"

namespace qlab {

HamVariant parse_ham_variant(const std::string& name) {
  if (name == "brute") return HamVariant::brute;
  if (name == "dp") return HamVariant::dp;
  if (name == "quantum-bf") return HamVariant::quantum_bf;
  if (name == "quantum-dp") return HamVariant::quantum_dp;
  throw ValidationError("unknown hamiltonian variant '" + name + "'");
}

TspVariant parse_tsp_variant(const std::string& name) {
  if (name == "dp") return TspVariant::dp;
  if (name == "quantum-dp") return TspVariant::quantum_dp;
  throw ValidationError("unknown tsp variant '" + name + "'");
}

bool check_path(const Graph& g, const std::vector<int>& path) {
  if (static_cast<int>(path.size()) != g.n()) return false;
  std::vector<char> seen(g.n(), 0);
  for (int v : path) {
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = 1;
  }
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  return true;
}

std::vector<int> permutation_at(int n, uint64_t i) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<uint64_t> fact(n + 1, 1);
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
  if (i >= fact[n]) throw ValidationError("permutation index out of range");
  std::vector<int> out;
  for (int k = n - 1; k >= 0; --k) {
    const uint64_t d = i / fact[k];
    i %= fact[k];
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<int64_t>(d));
  }
  return out;
}

namespace {

using Mask = uint32_t;

int popcount(Mask m) { return std::popcount(m); }
bool in(Mask m, int v) { return (m >> v) & 1; }

// h(mask, v, u) for every mask with |V(mask)| <= max_size. For weighted
// tables the value is the least path weight, otherwise 0 or kNoEdge.
// F-hat (pred) holds the vertex preceding u on the recorded path.
class PathTable {
 public:
  PathTable(const Graph& g, int max_size, bool weighted, CostReport* cost)
      : n_(g.n()), max_size_(max_size) {
    const size_t masks = size_t{1} << n_;
    val_.assign(masks * n_ * n_, kNoEdge);
    pred_.assign(masks * n_ * n_, -1);
    for (Mask mask = 1; mask < masks; ++mask) {
      const int size = popcount(mask);
      if (size > max_size) continue;
      for (int u = 0; u < n_; ++u) {
        if (!in(mask, u)) continue;
        if (size == 1) {
          at(mask, u, u) = 0.0;
          continue;
        }
        const Mask rest = mask ^ (Mask{1} << u);
        for (int t = 0; t < n_; ++t) {
          if (!in(rest, t)) continue;
          if (cost) cost->charge("ham.read", 1);
          const double w = g.weight(t, u);
          if (w == kNoEdge) continue;
          for (int v = 0; v < n_; ++v) {
            if (!in(rest, v)) continue;
            const double cand = at(rest, v, t) + (weighted ? w : 0.0);
            if (cand < at(mask, v, u)) {
              at(mask, v, u) = cand;
              pred_[idx(mask, v, u)] = static_cast<int8_t>(t);
            }
          }
        }
      }
    }
  }

  double value(Mask mask, int v, int u) const { return val_[idx(mask, v, u)]; }
  bool exists(Mask mask, int v, int u) const { return value(mask, v, u) != kNoEdge; }

  // Walks F-hat back from u to v.
  std::vector<int> path(Mask mask, int v, int u) const {
    std::vector<int> out{u};
    int cur = u;
    while (popcount(mask) > 1) {
      const int t = pred_[idx(mask, v, cur)];
      mask ^= Mask{1} << cur;
      cur = t;
      out.push_back(cur);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  int max_size() const { return max_size_; }

 private:
  size_t idx(Mask mask, int v, int u) const {
    return (static_cast<size_t>(mask) * n_ + v) * n_ + u;
  }
  double& at(Mask mask, int v, int u) { return val_[idx(mask, v, u)]; }

  int n_;
  int max_size_;
  std::vector<double> val_;
  std::vector<int8_t> pred_;
};

std::vector<Mask> subsets_of_size(Mask mask, int size) {
  std::vector<Mask> out;
  for (Mask sub = mask;; sub = (sub - 1) & mask) {
    if (popcount(sub) == size) out.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

double path_weight(const Graph& g, const std::vector<int>& path) {
  double w = 0.0;
  for (size_t i = 0; i + 1 < path.size(); ++i) w += g.weight(path[i], path[i + 1]);
  return w;
}

void guard(const Graph& g, int limit, const std::string& what) {
  if (g.n() > limit)
    throw ResourceError(what + " is limited to n <= " + std::to_string(limit));
}

PathResult single_vertex() {
  PathResult r;
  r.path = std::vector<int>{0};
  return r;
}

PathResult ham_brute(const Graph& g) {
  PathResult res;
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < g.n() && ok; ++i) {
      res.cost.charge("ham.read", 1);
      ok = g.has_edge(perm[i], perm[i + 1]);
    }
    if (ok) {
      res.path = perm;
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

PathResult ham_quantum_bf(const Graph& g, Backend& backend) {
  PathResult res;
  uint64_t space = 1;
  for (int k = 2; k <= g.n(); ++k) space *= k;
  const int n = g.n();
  Predicate p = simple_predicate(
      [&g, n](uint64_t i) { return check_path(g, permutation_at(n, i)); }, n - 1);
  SearchResult s = repeated_search(p, 0, space - 1, backend.nested_reps, backend, "ham.perm");
  res.cost = s.cost;
  if (s.index) res.path = permutation_at(n, *s.index);
  return res;
}

PathResult ham_dp(const Graph& g) {
  PathResult res;
  PathTable table(g, g.n(), false, &res.cost);
  const Mask full = (Mask{1} << g.n()) - 1;
  for (int v = 0; v < g.n(); ++v)
    for (int u = 0; u < g.n(); ++u)
      if (table.exists(full, v, u)) {
        res.path = table.path(full, v, u);
        return res;
      }
  return res;
}

// The two-level split: h on the full set from h on halves (M2 / M2'), and
// h on a half from h on quarters (M4 / M4') precomputed classically. Every
// level is an emulated search whose verification runs the level below and
// records the witness it found.
class QuantumHamSolver {
 public:
  QuantumHamSolver(const Graph& g, Backend& backend)
      : g_(g),
        n_(g.n()),
        b_(backend),
        reps_(backend.nested_reps),
        s2_((n_ + 1) / 2),
        s2p_(n_ / 2),
        s4_((n_ + 3) / 4),
        s4p_(n_ / 4),
        truth_(g, n_, false, nullptr),
        pre_(g, s4_, false, &precompute_cost_) {
    bz_ = reps_ * staged_search_budget(n_, 1, 1);
    bh_ = half_budget(s2_, s4_);
    bhp_ = half_budget(s2p_, s4p_);
    const int64_t bg = 1 + bhp_;
    bf_ = bh_ + reps_ * staged_search_budget(n_, bg, bg);
    const uint64_t top_space = subsets_of_size(full(), s2_).size() * n_;
    bfull_ = reps_ * staged_search_budget(top_space, bf_, bf_);
  }

  PathResult run() {
    PathResult res;
    res.cost.merge(precompute_cost_);
    const Mask all = full();
    Predicate pairs;
    pairs.exact = [this, all](uint64_t i) { return truth_.exists(all, i / n_, i % n_); };
    pairs.evaluate = [this](uint64_t i, CostReport& c) { return top(i / n_, i % n_, c); };
    pairs.unit_cost = bfull_;
    pairs.reject_cost = bfull_;
    const uint64_t space = static_cast<uint64_t>(n_) * n_;
    SearchResult s = repeated_search(pairs, 0, space - 1, reps_, b_, "ham.pair");
    res.cost.merge(s.cost);
    if (s.index) res.path = assemble(all, *s.index / n_, *s.index % n_);
    return res;
  }

 private:
  struct Split {
    Mask part;  // first part, holding the start vertex
    int t;      // last vertex of the first part
    int z;      // first vertex of the second part
  };
  using Key = std::tuple<Mask, int, int>;

  Mask full() const { return (Mask{1} << n_) - 1; }

  int64_t half_budget(int size, int quarter) const {
    if (size <= pre_.max_size()) return 0;
    const uint64_t space = subsets_of_size((Mask{1} << size) - 1, quarter).size() * n_;
    return reps_ * staged_search_budget(space, bz_, bz_);
  }

  // Search z in `rest` with an edge (t, z) and accept(z); one query per
  // edge read, plus the inner cost of accept.
  std::optional<int> find_z(Mask rest, int t, int64_t inner_budget,
                            const std::function<bool(int)>& exact,
                            const std::function<bool(int, CostReport&)>& accept, CostReport& c) {
    Predicate p;
    p.exact = [this, rest, t, exact](uint64_t z) {
      return in(rest, z) && g_.has_edge(t, z) && exact(z);
    };
    p.evaluate = [this, rest, t, accept](uint64_t z, CostReport& cc) {
      cc.charge("ham.edge", 1);
      return in(rest, z) && g_.has_edge(t, z) && accept(z, cc);
    };
    p.unit_cost = 1 + inner_budget;
    p.reject_cost = p.unit_cost;
    SearchResult s = repeated_search(p, 0, n_ - 1, reps_, b_, "ham.z");
    c.merge(s.cost);
    if (!s.index) return std::nullopt;
    return static_cast<int>(*s.index);
  }

  // h(mask, u, v) for a half-size mask, split into a quarter of `quarter`
  // vertices and the precomputed remainder.
  bool half(Mask mask, int u, int v, int quarter, CostReport& c) {
    if (popcount(mask) <= pre_.max_size()) return pre_.exists(mask, u, v);
    const std::vector<Mask> subs = subsets_of_size(mask, quarter);
    std::map<uint64_t, int> found_z;
    Predicate p;
    p.exact = [this, &subs, mask, u, v](uint64_t i) {
      const Mask sub = subs[i / n_], rest = mask ^ sub;
      const int t = static_cast<int>(i % n_);
      if (!in(sub, u) || !in(sub, t) || !truth_.exists(sub, u, t)) return false;
      for (int z = 0; z < n_; ++z)
        if (in(rest, z) && g_.has_edge(t, z) && truth_.exists(rest, z, v)) return true;
      return false;
    };
    p.evaluate = [this, &subs, &found_z, mask, u, v](uint64_t i, CostReport& cc) {
      const Mask sub = subs[i / n_], rest = mask ^ sub;
      const int t = static_cast<int>(i % n_);
      if (!in(sub, u) || !in(sub, t) || !pre_.exists(sub, u, t)) return false;
      auto tail = [this, rest, v](int z) { return pre_.exists(rest, z, v); };
      auto z = find_z(rest, t, 0, tail, [tail](int zz, CostReport&) { return tail(zz); }, cc);
      if (z) found_z[i] = *z;
      return z.has_value();
    };
    p.unit_cost = bz_;
    p.reject_cost = bz_;
    SearchResult s = repeated_search(p, 0, subs.size() * n_ - 1, reps_, b_, "ham.quarter");
    c.merge(s.cost);
    if (!s.index) return false;
    splits_[Key{mask, u, v}] = Split{subs[*s.index / n_], static_cast<int>(*s.index % n_),
                                     found_z.at(*s.index)};
    return true;
  }

  // h(full, u, v) via a half of size ceil(n/2) holding u.
  bool top(int u, int v, CostReport& c) {
    const Mask all = full();
    const std::vector<Mask> subs = subsets_of_size(all, s2_);
    std::map<uint64_t, int> found_z;
    Predicate p;
    p.exact = [this, &subs, all, u, v](uint64_t i) {
      const Mask sub = subs[i / n_], rest = all ^ sub;
      const int t = static_cast<int>(i % n_);
      if (!in(sub, u) || !in(sub, t) || !truth_.exists(sub, u, t)) return false;
      for (int z = 0; z < n_; ++z)
        if (in(rest, z) && g_.has_edge(t, z) && truth_.exists(rest, z, v)) return true;
      return false;
    };
    p.evaluate = [this, &subs, &found_z, all, u, v](uint64_t i, CostReport& cc) {
      const Mask sub = subs[i / n_], rest = all ^ sub;
      const int t = static_cast<int>(i % n_);
      if (!in(sub, u) || !in(sub, t) || !half(sub, u, t, s4_, cc)) return false;
      auto z = find_z(
          rest, t, bhp_, [this, rest, v](int zz) { return truth_.exists(rest, zz, v); },
          [this, rest, v](int zz, CostReport& c2) { return half(rest, zz, v, s4p_, c2); }, cc);
      if (z) found_z[i] = *z;
      return z.has_value();
    };
    p.unit_cost = bf_;
    p.reject_cost = bf_;
    SearchResult s = repeated_search(p, 0, subs.size() * n_ - 1, reps_, b_, "ham.half");
    c.merge(s.cost);
    if (!s.index) return false;
    splits_[Key{all, u, v}] = Split{subs[*s.index / n_], static_cast<int>(*s.index % n_),
                                    found_z.at(*s.index)};
    return true;
  }

  // Path for a verified (mask, u, v) from the recorded splits and F-hat.
  std::vector<int> assemble(Mask mask, int u, int v) const {
    if (popcount(mask) <= pre_.max_size()) return pre_.path(mask, u, v);
    const Split& s = splits_.at(Key{mask, u, v});
    std::vector<int> out = assemble(s.part, u, s.t);
    const std::vector<int> tail = assemble(mask ^ s.part, s.z, v);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }

  const Graph& g_;
  int n_;
  Backend& b_;
  int reps_;
  int s2_, s2p_, s4_, s4p_;
  CostReport precompute_cost_;
  PathTable truth_;
  PathTable pre_;
  int64_t bz_ = 0, bh_ = 0, bhp_ = 0, bf_ = 0, bfull_ = 0;
  std::map<Key, Split> splits_;
};

// Worst-case charge of one minimum search over `space` keys: each of at
// most ceil(log2 space) + 1 improvements runs inner_reps staged searches.
int64_t min_search_budget(uint64_t space, int64_t unit) {
  const MinSearchOptions opt;
  return opt.inner_reps * (ceil_log2(std::max<uint64_t>(space, 2)) + 1) *
             staged_search_budget(space, unit, unit) +
         unit;
}

// Dense ranks of real keys, so that minimum_search can compare them.
std::vector<int64_t> ranks_of(const std::vector<double>& vals) {
  std::vector<double> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int64_t> out(vals.size());
  for (size_t i = 0; i < vals.size(); ++i)
    out[i] = std::lower_bound(sorted.begin(), sorted.end(), vals[i]) - sorted.begin();
  return out;
}

// The same split as QuantumHamSolver with minimum search in place of
// Grover search. Each level picks its candidate by minimum search over
// exact keys (charged at the worst-case cost of the level below) and the
// chosen candidate's sub-levels are then run for real to produce the path.
class QuantumTspSolver {
 public:
  QuantumTspSolver(const Graph& g, Backend& backend)
      : g_(g),
        n_(g.n()),
        b_(backend),
        s2_((n_ + 1) / 2),
        s2p_(n_ / 2),
        s4_((n_ + 3) / 4),
        s4p_(n_ / 4),
        truth_(g, n_, true, nullptr),
        pre_(g, s4_, true, &precompute_cost_) {
    bz_ = min_search_budget(n_, 1);
    bh_ = half_budget(s2_, s4_);
    bhp_ = half_budget(s2p_, s4p_);
    bf_ = bh_ + min_search_budget(n_, 1 + bhp_);
    const uint64_t top_space = subsets_of_size(full(), s2_).size() * n_;
    bfull_ = min_search_budget(top_space, bf_);
  }

  PathResult run() {
    PathResult res;
    res.cost.merge(precompute_cost_);
    const Mask all = full();
    std::vector<double> vals(static_cast<size_t>(n_) * n_);
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = truth_.value(all, i / n_, i % n_);
    const size_t i = pick(vals, bfull_, "tsp.pair", res.cost);
    if (vals[i] == kNoEdge) return res;
    auto path = top(static_cast<int>(i / n_), static_cast<int>(i % n_), res.cost);
    if (path && check_path(g_, *path)) {
      res.weight = path_weight(g_, *path);
      res.path = std::move(path);
    }
    return res;
  }

 private:
  Mask full() const { return (Mask{1} << n_) - 1; }

  int64_t half_budget(int size, int quarter) const {
    if (size <= pre_.max_size()) return 0;
    const uint64_t space = subsets_of_size((Mask{1} << size) - 1, quarter).size() * n_;
    return min_search_budget(space, bz_);
  }

  size_t pick(const std::vector<double>& vals, int64_t unit, const std::string& label,
              CostReport& c) {
    const std::vector<int64_t> rank = ranks_of(vals);
    MinSearchOptions opt;
    opt.unit_cost = unit;
    MinSearchResult m = minimum_search(
        vals.size(), [&rank](uint64_t i) { return RankedValue{rank[i], static_cast<int64_t>(i)}; },
        b_, opt);
    c.charge(label, m.cost.queries);
    return m.index;
  }

  // Best split of `mask` into a part of `part_size` vertices holding u and
  // the remainder ending at v, judged by `first` and `second`.
  template <class First, class Second>
  std::optional<std::tuple<Mask, int, int>> split(Mask mask, int u, int v, int part_size,
                                                  First first, Second second, int64_t unit,
                                                  int64_t z_unit, const std::string& label,
                                                  CostReport& c) {
    const std::vector<Mask> subs = subsets_of_size(mask, part_size);
    auto tail = [&](Mask rest, int t, int z) {
      return in(rest, z) ? g_.weight(t, z) + second(rest, z, v) : kNoEdge;
    };
    std::vector<double> vals(subs.size() * n_, kNoEdge);
    for (size_t i = 0; i < vals.size(); ++i) {
      const Mask sub = subs[i / n_], rest = mask ^ sub;
      const int t = static_cast<int>(i % n_);
      if (!in(sub, u) || !in(sub, t)) continue;
      double best = kNoEdge;
      for (int z = 0; z < n_; ++z) best = std::min(best, tail(rest, t, z));
      vals[i] = first(sub, u, t) + best;
    }
    const size_t i = pick(vals, unit, label, c);
    if (vals[i] == kNoEdge) return std::nullopt;
    const Mask sub = subs[i / n_], rest = mask ^ sub;
    const int t = static_cast<int>(i % n_);
    std::vector<double> zs(n_);
    for (int z = 0; z < n_; ++z) zs[z] = tail(rest, t, z);
    const int z = static_cast<int>(pick(zs, z_unit, label + ".z", c));
    if (zs[z] == kNoEdge) return std::nullopt;
    return std::tuple{sub, t, z};
  }

  std::optional<std::vector<int>> join(std::optional<std::vector<int>> a,
                                       std::optional<std::vector<int>> b) const {
    if (!a || !b) return std::nullopt;
    a->insert(a->end(), b->begin(), b->end());
    return a;
  }

  std::optional<std::vector<int>> quarter_path(Mask mask, int u, int v) const {
    if (!pre_.exists(mask, u, v)) return std::nullopt;
    return pre_.path(mask, u, v);
  }

  std::optional<std::vector<int>> half(Mask mask, int u, int v, int quarter, CostReport& c) {
    if (popcount(mask) <= pre_.max_size()) return quarter_path(mask, u, v);
    auto value = [this](Mask m, int a, int b) { return pre_.value(m, a, b); };
    auto s = split(mask, u, v, quarter, value, value, bz_, 1, "tsp.quarter", c);
    if (!s) return std::nullopt;
    const auto [sub, t, z] = *s;
    return join(quarter_path(sub, u, t), quarter_path(mask ^ sub, z, v));
  }

  std::optional<std::vector<int>> top(int u, int v, CostReport& c) {
    const Mask all = full();
    auto value = [this](Mask m, int a, int b) { return truth_.value(m, a, b); };
    auto s = split(all, u, v, s2_, value, value, bf_, 1 + bhp_, "tsp.half", c);
    if (!s) return std::nullopt;
    const auto [sub, t, z] = *s;
    auto first = half(sub, u, t, s4_, c);
    return join(std::move(first), half(all ^ sub, z, v, s4p_, c));
  }

  const Graph& g_;
  int n_;
  Backend& b_;
  int s2_, s2p_, s4_, s4p_;
  CostReport precompute_cost_;
  PathTable truth_;
  PathTable pre_;
  int64_t bz_ = 0, bh_ = 0, bhp_ = 0, bf_ = 0, bfull_ = 0;
};

PathResult tsp_dp(const Graph& g) {
  PathResult res;
  PathTable table(g, g.n(), true, &res.cost);
  const Mask full = (Mask{1} << g.n()) - 1;
  double best = kNoEdge;
  int bv = 0, bu = 0;
  for (int v = 0; v < g.n(); ++v)
    for (int u = 0; u < g.n(); ++u)
      if (table.value(full, v, u) < best) {
        best = table.value(full, v, u);
        bv = v;
        bu = u;
      }
  if (best != kNoEdge) {
    res.path = table.path(full, bv, bu);
    res.weight = best;
  }
  return res;
}

}  // namespace

PathResult hamiltonian_path(const Graph& g, HamVariant variant, Backend& backend) {
  WallTimer timer;
  PathResult res;
  switch (variant) {
    case HamVariant::brute:
      guard(g, 10, "brute force");
      break;
    case HamVariant::quantum_bf:
      guard(g, backend.kind == BackendKind::statevector ? 9 : 10, "quantum brute force");
      break;
    case HamVariant::dp:
      guard(g, 14, "dynamic programming");
      break;
    case HamVariant::quantum_dp:
      guard(g, backend.kind == BackendKind::statevector ? 10 : 14, "quantum dynamic programming");
      break;
  }
  if (g.n() == 1) {
    res = single_vertex();
  } else if (variant == HamVariant::brute) {
    res = ham_brute(g);
  } else if (variant == HamVariant::quantum_bf) {
    res = ham_quantum_bf(g, backend);
  } else if (variant == HamVariant::dp) {
    res = ham_dp(g);
  } else {
    res = QuantumHamSolver(g, backend).run();
  }
  if (res.path) res.weight = path_weight(g, *res.path);
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

PathResult tsp(const Graph& g, TspVariant variant, Backend& backend) {
  WallTimer timer;
  guard(g, variant == TspVariant::dp ? 14 : 12, "tsp");
  PathResult res;
  if (g.n() == 1)
    res = single_vertex();
  else if (variant == TspVariant::dp)
    res = tsp_dp(g);
  else
    res = QuantumTspSolver(g, backend).run();
  if (!res.path) res.weight = kNoEdge;
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

}  // namespace qlab
