// Copyright 2026 The qlab Authors
#include "qlab/search.hpp"

#include <algorithm>
#include <limits>

namespace qlab {

SearchResult repeated_search(const Predicate& p, uint64_t l, uint64_t r, int reps,
                             Backend& backend, const std::string& label) {
  if (reps < 1) throw ValidationError("repetition count must be positive");
  SearchResult out;
  for (int k = 0; k < reps && !out.index; ++k) {
    SearchResult s = emulated_search(p, l, r, SearchMode::unknown_t, backend, label);
    out.cost.merge(s.cost);
    out.index = s.index;
  }
  return out;
}

MinSearchResult minimum_search(uint64_t n, const std::function<RankedValue(uint64_t)>& key,
                               Backend& backend, const MinSearchOptions& opt) {
  if (n == 0) throw ValidationError("minimum search over an empty array");
  if (opt.inner_reps < 1) throw ValidationError("inner_reps must be positive");
  WallTimer timer;
  MinSearchResult res;
  uint64_t j = uniform_index(backend.rng, n);
  RankedValue cur = key(j);
  res.cost.charge("minsearch.read", opt.unit_cost);
  auto rank_of = [&](const RankedValue& v) {
    uint64_t k = 0;
    for (uint64_t z = 0; z < n; ++z)
      if (key(z) < v) ++k;
    return k;
  };
  if (opt.track_ranks) res.visited_ranks.push_back(rank_of(cur));
  for (;;) {
    Predicate better;
    better.exact = [&key, cur](uint64_t i) { return key(i) < cur; };
    better.evaluate = [&key, cur, u = opt.unit_cost](uint64_t i, CostReport& c) {
      c.charge("verify", u);
      return key(i) < cur;
    };
    better.unit_cost = opt.unit_cost;
    SearchResult s = repeated_search(better, 0, n - 1, opt.inner_reps, backend, "minsearch");
    res.cost.merge(s.cost);
    if (!s.index) break;
    j = *s.index;
    cur = key(j);
    if (opt.track_ranks) res.visited_ranks.push_back(rank_of(cur));
  }
  res.index = j;
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

MinSearchResult minimum_search(const std::vector<int64_t>& a, Backend& backend,
                               const MinSearchOptions& opt) {
  return minimum_search(
      a.size(), [&a](uint64_t i) { return RankedValue{a[i], 0}; }, backend, opt);
}

MinSearchResult maximum_search(const std::vector<int64_t>& a, Backend& backend,
                               const MinSearchOptions& opt) {
  std::vector<int64_t> neg(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == std::numeric_limits<int64_t>::min())
      throw ValidationError("value cannot be negated");
    neg[i] = -a[i];
  }
  return minimum_search(neg, backend, opt);
}

MinSearchResult minimum_search_boosted(const std::vector<int64_t>& a, int k, Backend& backend,
                                       const MinSearchOptions& opt) {
  if (k < 1) throw ValidationError("boosting count must be positive");
  MinSearchResult best = minimum_search(a, backend, opt);
  for (int rep = 1; rep < k; ++rep) {
    MinSearchResult r = minimum_search(a, backend, opt);
    best.cost.merge(r.cost);
    if (a[r.index] < a[best.index]) best.index = r.index;
  }
  return best;
}

FirstOneVariant parse_first_one_variant(const std::string& name) {
  if (name == "via-minimum" || name == "minimum") return FirstOneVariant::via_minimum;
  if (name == "binary") return FirstOneVariant::binary;
  throw ValidationError("unknown first-one variant '" + name + "'");
}

namespace {

// Repetitions of the existence search on the last border, where a miss
// cannot be corrected by a later border.
constexpr int kFinalBorderReps = 3;

// Binary search for the first one in [l, r], assuming one exists there.
// Step i runs the search on the left half 2i times.
IndexResult binary_first_one(const Predicate& p, uint64_t l, uint64_t r, Backend& backend) {
  IndexResult res;
  int step = 1;
  while (l < r) {
    const uint64_t mid = l + (r - l) / 2;
    SearchResult s = repeated_search(p, l, mid, 2 * step, backend, "firstone");
    res.cost.merge(s.cost);
    if (s.index)
      r = mid;
    else
      l = mid + 1;
    ++step;
  }
  CostReport c;
  const bool ok = evaluate_predicate(p, l, c);
  res.cost.charge("firstone.verify", c.queries);
  if (ok) res.index = l;
  return res;
}

Predicate mirrored(const Predicate& p, uint64_t r) {
  Predicate q;
  q.exact = [&p, r](uint64_t k) { return p.exact(r - k); };
  q.evaluate = [&p, r](uint64_t k, CostReport& c) { return p.evaluate(r - k, c); };
  q.unit_cost = p.unit_cost;
  q.reject_cost = p.reject_cost;
  return q;
}

}  // namespace

IndexResult first_one_search(const Predicate& p, uint64_t l, uint64_t r, FirstOneVariant variant,
                             Backend& backend) {
  if (l > r) throw ValidationError("empty range");
  WallTimer timer;
  IndexResult res;
  if (variant == FirstOneVariant::via_minimum) {
    const uint64_t n = r - l + 1;
    MinSearchOptions opt;
    opt.unit_cost = p.unit_cost;
    MinSearchResult m = minimum_search(
        n,
        [&p, l](uint64_t i) {
          return RankedValue{p.exact(l + i) ? 0 : 1, static_cast<int64_t>(i)};
        },
        backend, opt);
    res.cost = m.cost;
    CostReport c;
    if (evaluate_predicate(p, l + m.index, c)) res.index = l + m.index;
    res.cost.charge("firstone.verify", c.queries);
  } else {
    SearchResult any = repeated_search(p, l, r, kFinalBorderReps, backend, "firstone");
    res.cost.merge(any.cost);
    if (any.index) {
      IndexResult b = binary_first_one(p, l, r, backend);
      res.cost.merge(b.cost);
      res.index = b.index;
    }
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

IndexResult first_one_search(BooleanOracle& f, uint64_t l, uint64_t r, FirstOneVariant variant,
                             Backend& backend) {
  if (r >= f.size()) throw ValidationError("range exceeds oracle domain");
  const Predicate p = oracle_predicate(f);
  const int64_t before = f.ledger().total();
  IndexResult res = first_one_search(p, l, r, variant, backend);
  // Verifications already went through the oracle; add superposed calls.
  f.charge_superposed(res.cost.queries - (f.ledger().total() - before));
  return res;
}

IndexResult bounded_first_one(const Predicate& p, uint64_t l, uint64_t r, Backend& backend) {
  if (l > r) throw ValidationError("empty range");
  WallTimer timer;
  IndexResult res;
  const uint64_t n = r - l + 1;
  for (int z = 1;; ++z) {
    const bool last = z >= 63 || (uint64_t{1} << z) >= n;
    const uint64_t b = last ? r : l + (uint64_t{1} << z) - 1;
    // A miss on an inner border is corrected by the next, wider one.
    SearchResult s = repeated_search(p, l, b, last ? kFinalBorderReps : 1, backend, "bounded");
    res.cost.merge(s.cost);
    if (s.index) {
      IndexResult f = binary_first_one(p, l, *s.index, backend);
      res.cost.merge(f.cost);
      res.index = f.index;
      break;
    }
    if (last) break;
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

int64_t staged_search_budget(uint64_t n, int64_t unit, int64_t eval) {
  const int stages = unknown_t_stages(n);
  return ((int64_t{1} << stages) - 1) * unit + stages * eval;
}

int64_t bounded_first_one_budget(uint64_t n, int64_t unit, int64_t eval) {
  if (n == 0) return 0;
  int64_t q = 0;
  for (int z = 1;; ++z) {
    const bool last = z >= 63 || (uint64_t{1} << z) >= n;
    const uint64_t size = last ? n : uint64_t{1} << z;
    q += (last ? kFinalBorderReps : 1) * staged_search_budget(size, unit, eval);
    if (last) break;
  }
  // Binary search inside the widest border.
  uint64_t len = n;
  for (int step = 1; len > 1; ++step) {
    const uint64_t left = (len + 1) / 2;
    q += 2 * step * staged_search_budget(left, unit, eval);
    len = left;
  }
  return q + eval;
}

IndexResult bounded_first_one(BooleanOracle& f, Backend& backend) {
  const Predicate p = oracle_predicate(f);
  const int64_t before = f.ledger().total();
  IndexResult res = bounded_first_one(p, 0, f.size() - 1, backend);
  f.charge_superposed(res.cost.queries - (f.ledger().total() - before));
  return res;
}

IndexResult bounded_last_one(const Predicate& p, uint64_t l, uint64_t r, Backend& backend) {
  if (l > r) throw ValidationError("empty range");
  const Predicate q = mirrored(p, r);
  IndexResult res = bounded_first_one(q, 0, r - l, backend);
  if (res.index) res.index = r - *res.index;
  return res;
}

AllOnesResult all_ones(const Predicate& p, uint64_t l, uint64_t r, Backend& backend) {
  if (l > r) throw ValidationError("empty range");
  WallTimer timer;
  AllOnesResult res;
  uint64_t start = l;
  for (;;) {
    IndexResult f = bounded_first_one(p, start, r, backend);
    res.cost.merge(f.cost);
    if (!f.index) break;
    res.indices.push_back(*f.index);
    if (*f.index == r) break;
    start = *f.index + 1;
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

AllOnesResult all_ones(BooleanOracle& f, uint64_t l, uint64_t r, Backend& backend) {
  if (r >= f.size()) throw ValidationError("range exceeds oracle domain");
  const Predicate p = oracle_predicate(f);
  const int64_t before = f.ledger().total();
  AllOnesResult res = all_ones(p, l, r, backend);
  f.charge_superposed(res.cost.queries - (f.ledger().total() - before));
  return res;
}

}  // namespace qlab
