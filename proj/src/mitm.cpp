// Copyright 2026 The qlab Authors
#include "qlab/mitm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qlab {

SubsetSumVariant parse_subset_sum_variant(const std::string& name) {
  if (name == "brute") return SubsetSumVariant::brute;
  if (name == "grover") return SubsetSumVariant::grover;
  if (name == "mitm-classical") return SubsetSumVariant::mitm_classical;
  if (name == "mitm-quantum") return SubsetSumVariant::mitm_quantum;
  throw ValidationError("unknown subset-sum variant '" + name + "'");
}

SetKind parse_set_kind(const std::string& name) {
  if (name == "ordered") return SetKind::ordered;
  if (name == "hashed") return SetKind::hashed;
  throw ValidationError("unknown set kind '" + name + "'");
}

CollisionVariant parse_collision_variant(const std::string& name) {
  if (name == "simple") return CollisionVariant::simple;
  if (name == "mitm") return CollisionVariant::mitm;
  throw ValidationError("unknown collision variant '" + name + "'");
}

int subset_sum_split(int n, SubsetSumVariant variant) {
  switch (variant) {
    case SubsetSumVariant::mitm_classical:
      return n / 2;
    case SubsetSumVariant::mitm_quantum:
      return n / 3;
    default:
      return 0;
  }
}

namespace {

int64_t masked_sum(const std::vector<int64_t>& a, int offset, uint64_t mask) {
  int64_t s = 0;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) s += a[offset + i];
  return s;
}

std::vector<int> indices_of(uint64_t mask, int offset) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(offset + i);
  return out;
}

// Sum -> first mask reaching it. One representative per sum is enough for
// both the decision and the witness.
class SumTable {
 public:
  explicit SumTable(SetKind kind) : kind_(kind) {}
  void insert(int64_t sum, uint64_t mask) {
    if (kind_ == SetKind::ordered)
      ordered_.emplace(sum, mask);
    else
      hashed_.emplace(sum, mask);
  }
  std::optional<uint64_t> find(int64_t sum) const {
    if (kind_ == SetKind::ordered) {
      auto it = ordered_.find(sum);
      if (it != ordered_.end()) return it->second;
    } else {
      auto it = hashed_.find(sum);
      if (it != hashed_.end()) return it->second;
    }
    return std::nullopt;
  }

 private:
  SetKind kind_;
  std::map<int64_t, uint64_t> ordered_;
  std::unordered_map<int64_t, uint64_t> hashed_;
};

SubsetSumResult mitm(const SubsetSumInstance& inst, int t, bool quantum, Backend& backend,
                     SetKind kind) {
  const int n = static_cast<int>(inst.a.size());
  SubsetSumResult res;
  res.cost.charge("subsetsum.read", t);
  SumTable sums(kind);
  for (uint64_t m = 0; m < (uint64_t{1} << t); ++m) sums.insert(masked_sum(inst.a, 0, m), m);
  const int rest = n - t;
  auto hit = [&](uint64_t m) { return sums.find(inst.k - masked_sum(inst.a, t, m)).has_value(); };
  std::optional<uint64_t> found;
  if (quantum) {
    const Predicate p = simple_predicate(hit, rest);
    SearchResult s = repeated_search(p, 0, (uint64_t{1} << rest) - 1, backend.nested_reps,
                                     backend, "subsetsum");
    res.cost.merge(s.cost);
    found = s.index;
  } else {
    for (uint64_t m = 0; m < (uint64_t{1} << rest) && !found; ++m) {
      res.cost.charge("subsetsum.scan", rest);
      if (hit(m)) found = m;
    }
  }
  if (found) {
    std::vector<int> idx = indices_of(*sums.find(inst.k - masked_sum(inst.a, t, *found)), 0);
    const std::vector<int> second = indices_of(*found, t);
    idx.insert(idx.end(), second.begin(), second.end());
    res.subset = idx;
  }
  return res;
}

}  // namespace

SubsetSumResult subset_sum(const SubsetSumInstance& inst, SubsetSumVariant variant,
                           Backend& backend, SetKind set) {
  const int n = static_cast<int>(inst.a.size());
  if (n == 0) throw ValidationError("subset-sum needs at least one element");
  for (int64_t x : inst.a)
    if (x < 1) throw ValidationError("subset-sum elements must be positive");
  if (inst.k < 1) throw ValidationError("subset-sum target must be positive");
  const bool mitm_variant =
      variant == SubsetSumVariant::mitm_classical || variant == SubsetSumVariant::mitm_quantum;
  if (n > (mitm_variant ? 30 : 24))
    throw ResourceError("subset-sum size exceeds the guard for this variant");
  WallTimer timer;
  SubsetSumResult res;
  const uint64_t space = uint64_t{1} << n;
  auto hit = [&inst](uint64_t m) { return masked_sum(inst.a, 0, m) == inst.k; };
  switch (variant) {
    case SubsetSumVariant::brute:
      for (uint64_t m = 0; m < space; ++m) {
        res.cost.charge("subsetsum.scan", n);
        if (hit(m)) {
          res.subset = indices_of(m, 0);
          break;
        }
      }
      break;
    case SubsetSumVariant::grover: {
      const Predicate p = simple_predicate(hit, n);
      SearchResult s = repeated_search(p, 0, space - 1, backend.nested_reps, backend, "subsetsum");
      res.cost = s.cost;
      if (s.index) res.subset = indices_of(*s.index, 0);
      break;
    }
    default:
      res = mitm(inst, subset_sum_split(n, variant), variant == SubsetSumVariant::mitm_quantum,
                 backend, set);
  }
  if (res.subset) {
    int64_t s = 0;
    for (int i : *res.subset) s += inst.a[i];
    if (s != inst.k) throw std::logic_error("subset-sum witness does not sum to the target");
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

uint64_t collision_prefix(uint64_t n) {
  uint64_t t = static_cast<uint64_t>(std::cbrt(static_cast<double>(n)));
  while (t * t * t < n) ++t;
  while (t > 1 && (t - 1) * (t - 1) * (t - 1) >= n) --t;
  return std::max<uint64_t>(t, 1);
}

CollisionResult collision_decide(const std::vector<int64_t>& a, CollisionVariant variant,
                                 Backend& backend, SetKind set) {
  const uint64_t n = a.size();
  if (n < 2) throw ValidationError("collision input needs at least two elements");
  WallTimer timer;
  CollisionResult res;
  if (variant == CollisionVariant::simple) {
    res.cost.charge("collision.read", 1);
    const int64_t first = a[0];
    const Predicate p = simple_predicate([&a, first](uint64_t j) { return a[j] == first; });
    SearchResult s = repeated_search(p, 1, n - 1, backend.nested_reps, backend, "collision");
    res.cost.merge(s.cost);
    res.one_to_one = !s.index;
  } else {
    const uint64_t t = std::min(collision_prefix(n), n - 1);
    res.cost.charge("collision.read", static_cast<int64_t>(t));
    std::set<int64_t> ordered;
    std::unordered_set<int64_t> hashed;
    auto contains = [&](int64_t x) { return set == SetKind::ordered ? ordered.count(x) > 0 : hashed.count(x) > 0; };
    for (uint64_t i = 0; i < t; ++i) {
      if (contains(a[i])) {
        res.one_to_one = false;
        res.cost.wall_ns = timer.elapsed_ns();
        return res;
      }
      if (set == SetKind::ordered)
        ordered.insert(a[i]);
      else
        hashed.insert(a[i]);
    }
    const Predicate p = simple_predicate([&](uint64_t j) { return contains(a[j]); });
    // Under the 2-to-1 promise every prefix element has its partner in the rest.
    const int64_t iters = GroverPlan::make(n - t, t).L;
    SearchResult s = fixed_iteration_search(p, t, n - 1, iters, backend, "collision");
    res.cost.merge(s.cost);
    res.one_to_one = !s.index;
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

std::vector<int64_t> make_collision_instance(uint64_t n, bool two_to_one, Rng& rng) {
  if (n < 2) throw ValidationError("collision instance needs n >= 2");
  if (two_to_one && n % 2) throw ValidationError("2-to-1 instances need even n");
  std::vector<uint64_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (uint64_t i = n - 1; i > 0; --i) std::swap(idx[i], idx[uniform_index(rng, i + 1)]);
  std::vector<int64_t> a(n);
  for (uint64_t k = 0; k < n; ++k)
    a[idx[k]] = 1 + static_cast<int64_t>(two_to_one ? k / 2 : k);
  return a;
}

}  // namespace qlab
