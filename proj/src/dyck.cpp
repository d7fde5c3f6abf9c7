// Copyright 2026 The qlab Authors
#include "qlab/dyck.hpp"

#include <algorithm>

namespace qlab {

namespace {

constexpr int64_t kBudgetCap = int64_t{1} << 62;

int64_t sat_add(int64_t a, int64_t b) { return a > kBudgetCap - b ? kBudgetCap : a + b; }

int64_t sat_mul(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kBudgetCap / b ? kBudgetCap : a * b;
}

int budget_kind(SegmentMode m) { return static_cast<int>(m); }
constexpr int kFpflKind = 10;

}  // namespace

SegmentMode parse_segment_mode(const std::string& name) {
  if (name == "minimal") return SegmentMode::minimal;
  if (name == "maximal") return SegmentMode::maximal;
  if (name == "any") return SegmentMode::any;
  throw ValidationError("unknown segment mode '" + name + "'");
}

BitString parse_dyck(const std::string& text) {
  BitString x;
  for (char c : text) {
    if (c == '(' || c == '0')
      x.push_back(0);
    else if (c == ')' || c == '1')
      x.push_back(1);
    else if (c != ' ' && c != '\n' && c != '\t' && c != '\r')
      throw ValidationError(std::string("invalid Dyck character '") + c + "'");
  }
  return x;
}

BitString dyck_pad(const BitString& x, int k) {
  if (k < 0) throw ValidationError("depth bound must be non-negative");
  BitString u(static_cast<size_t>(k), 1);
  u.insert(u.end(), x.begin(), x.end());
  u.insert(u.end(), static_cast<size_t>(k), 0);
  return u;
}

bool dyck_classical(const BitString& x, int k) {
  int64_t h = 0;
  for (uint8_t b : x) {
    h += b ? -1 : 1;
    if (h < 0 || h > k) return false;
  }
  return h == 0;
}

std::vector<Segment> minimal_segments(const BitString& u, int t) {
  if (t < 1) throw ValidationError("segment balance must be positive");
  const int64_t m = static_cast<int64_t>(u.size());
  std::vector<int64_t> h(m + 1, 0);
  for (int64_t p = 0; p < m; ++p) h[p + 1] = h[p] + (u[p] ? -1 : 1);
  // Prefix values lie in [-m, m]; index with an offset.
  auto idx = [m](int64_t v) { return static_cast<size_t>(v + m); };
  std::vector<Segment> out;
  for (int sign : {1, -1}) {
    const int64_t delta = sign * t;
    // fwd[i]: first end r >= i with g(u[i..r]) = delta.
    std::vector<int64_t> fwd(m, -1), bwd(m, -1);
    std::vector<int64_t> pos(2 * m + 1, -1);
    for (int64_t i = m - 1; i >= 0; --i) {
      pos[idx(h[i + 1])] = i + 1;
      const int64_t v = h[i] + delta;
      if (v >= -m && v <= m && pos[idx(v)] >= 0) fwd[i] = pos[idx(v)] - 1;
    }
    // bwd[r]: last start i <= r with g(u[i..r]) = delta.
    std::fill(pos.begin(), pos.end(), -1);
    for (int64_t r = 0; r < m; ++r) {
      pos[idx(h[r])] = r;
      const int64_t v = h[r + 1] - delta;
      if (v >= -m && v <= m && pos[idx(v)] >= 0) bwd[r] = pos[idx(v)];
    }
    for (int64_t i = 0; i < m; ++i)
      if (fwd[i] >= 0 && bwd[fwd[i]] == i)
        out.push_back(Segment{static_cast<uint64_t>(i), static_cast<uint64_t>(fwd[i]), sign});
  }
  std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.i < b.i; });
  return out;
}

DyckSearcher::DyckSearcher(BitString u, Backend& backend) : u_(std::move(u)), backend_(backend) {}

const std::vector<Segment>& DyckSearcher::segments(int t) {
  auto it = segments_.find(t);
  if (it == segments_.end()) it = segments_.emplace(t, minimal_segments(u_, t)).first;
  return it->second;
}

std::optional<Segment> DyckSearcher::pair_segment(uint64_t i) const {
  return Segment{i, i + 1, u_[i] ? -1 : 1};
}

Predicate DyckSearcher::pair_predicate() const {
  return simple_predicate([this](uint64_t i) { return u_[i] == u_[i + 1]; }, 1);
}

std::optional<Segment> DyckSearcher::exact_segment(int t, uint64_t L, uint64_t R,
                                                   SegmentMode mode) {
  if (R >= u_.size()) throw ValidationError("segment window exceeds the string");
  if (L > R) return std::nullopt;
  const auto& segs = segments(t);
  if (mode == SegmentMode::maximal) {
    auto it = std::upper_bound(segs.begin(), segs.end(), R,
                               [](uint64_t r, const Segment& s) { return r < s.j; });
    if (it == segs.begin()) return std::nullopt;
    --it;
    if (it->i >= L) return *it;
    return std::nullopt;
  }
  auto it = std::lower_bound(segs.begin(), segs.end(), L,
                             [](const Segment& s, uint64_t l) { return s.i < l; });
  if (it != segs.end() && it->j <= R) return *it;
  return std::nullopt;
}

template <bool Exact>
std::optional<Segment> DyckSearcher::segment(int t, uint64_t L, uint64_t R, SegmentMode mode,
                                             CostReport& cost) {
  if (L > R || R - L + 1 < static_cast<uint64_t>(t)) return std::nullopt;
  if constexpr (Exact) {
    return exact_segment(t, L, R, mode);
  } else {
    if (t == 2) {
      const Predicate p = pair_predicate();
      std::optional<uint64_t> i;
      if (mode == SegmentMode::minimal) {
        IndexResult r = bounded_first_one(p, L, R - 1, backend_);
        cost.merge(r.cost);
        i = r.index;
      } else if (mode == SegmentMode::maximal) {
        IndexResult r = bounded_last_one(p, L, R - 1, backend_);
        cost.merge(r.cost);
        i = r.index;
      } else {
        SearchResult r = repeated_search(p, L, R - 1, 3, backend_, "dyck.pair");
        cost.merge(r.cost);
        i = r.index;
      }
      if (!i) return std::nullopt;
      return pair_segment(*i);
    }
    if (mode == SegmentMode::any) return segment_any(t, L, R, cost);
    return segment_edge(t, L, R, mode == SegmentMode::minimal, cost);
  }
}

template <bool Exact>
std::optional<Segment> DyckSearcher::fpfl(uint64_t q, uint64_t d, int t, uint64_t L, uint64_t R,
                                          CostReport& cost) {
  if (t == 2) {
    if (q > L) {
      if constexpr (!Exact) cost.charge("dyck.read", 1);
      if (u_[q - 1] == u_[q]) return pair_segment(q - 1);
    }
    if (q < R) {
      if constexpr (!Exact) cost.charge("dyck.read", 1);
      if (u_[q] == u_[q + 1]) return pair_segment(q);
    }
    return std::nullopt;
  }
  auto left_window = [&](uint64_t end) { return std::max(L, end + 1 >= d ? end + 1 - d : 0); };
  // Step 1: is q inside a +-(t-1) substring?
  if (auto s1 = fpfl<Exact>(q, d, t - 1, L, R, cost)) {
    // Step 2: it is the left part; the nearest one to its right closes it.
    const uint64_t hi = std::min(s1->i + d - 2, R);
    if (auto s2 = segment<Exact>(t - 1, s1->i + 1, hi, SegmentMode::minimal, cost);
        s2 && s2->sign == s1->sign)
      return Segment{s1->i, s2->j, s1->sign};
    // Step 3: it is the right part.
    if (s1->j == 0) return std::nullopt;
    if (auto s3 = segment<Exact>(t - 1, left_window(s1->j), s1->j - 1, SegmentMode::maximal, cost);
        s3 && s3->sign == s1->sign)
      return Segment{s3->i, s1->j, s1->sign};
    return std::nullopt;
  }
  // Step 4: the nearest +-(t-1) substring to the right of q.
  auto s4 = segment<Exact>(t - 1, q, std::min(R, q + d - 2), SegmentMode::minimal, cost);
  if (!s4 || s4->j == 0) return std::nullopt;
  // Step 5: and its left partner.
  if (auto s5 = segment<Exact>(t - 1, left_window(s4->j), s4->j - 1, SegmentMode::maximal, cost);
      s5 && s5->sign == s4->sign)
    return Segment{s5->i, s4->j, s4->sign};
  return std::nullopt;
}

std::optional<Segment> DyckSearcher::fixed_point_fixed_len(uint64_t q, uint64_t d, int t,
                                                           uint64_t L, uint64_t R,
                                                           CostReport& cost) {
  if (t < 2) throw ValidationError("t must be at least 2");
  if (d < static_cast<uint64_t>(t)) throw ValidationError("d must exceed t - 1");
  if (L > q || q > R || R >= u_.size()) throw ValidationError("q must lie in [L, R]");
  return fpfl<false>(q, d, t, L, R, cost);
}

std::optional<Segment> DyckSearcher::exact_fixed_point_fixed_len(uint64_t q, uint64_t d, int t,
                                                                 uint64_t L, uint64_t R) {
  CostReport unused;
  return fpfl<true>(q, d, t, L, R, unused);
}

bool DyckSearcher::exact_fixed_len(uint64_t d, int t, uint64_t L, uint64_t R) {
  for (uint64_t q = L; q <= R; ++q)
    if (exact_fixed_point_fixed_len(q, d, t, L, R)) return true;
  return false;
}

std::optional<Segment> DyckSearcher::fixed_len(uint64_t d, int t, uint64_t L, uint64_t R,
                                               CostReport& cost) {
  if (L > R || R >= u_.size()) throw ValidationError("invalid window");
  const uint64_t n = R - L + 1;
  std::optional<Segment> found;
  Predicate p;
  p.exact = [this, d, t, L, R](uint64_t q) {
    return exact_fixed_point_fixed_len(q, d, t, L, R).has_value();
  };
  p.evaluate = [this, d, t, L, R, &found](uint64_t q, CostReport& c) {
    for (int rep = 0; rep < backend_.nested_reps; ++rep) {
      if (auto s = fpfl<false>(q, d, t, L, R, c)) {
        found = s;
        return true;
      }
    }
    return false;
  };
  p.unit_cost = fpfl_budget(t, d);
  p.reject_cost = sat_mul(backend_.nested_reps, p.unit_cost);
  // A segment of length in (d/2, d] marks at least d/2 of the n points.
  const uint64_t schedule = std::max<uint64_t>(1, (2 * n + d - 1) / d);
  SearchResult r = emulated_search(p, L, R, SearchMode::unknown_t, backend_, "dyck.fixedlen",
                                   schedule);
  cost.merge(r.cost);
  if (!r.index) return std::nullopt;
  return found;
}

namespace {

// Powers of two d = 2^z with d > t - 1, up to the first d above n.
std::vector<uint64_t> length_grid(int t, uint64_t n) {
  std::vector<uint64_t> ds;
  for (uint64_t d = 1;; d *= 2) {
    if (d > static_cast<uint64_t>(t) - 1) ds.push_back(d);
    if (d > n) break;
  }
  return ds;
}

}  // namespace

std::optional<Segment> DyckSearcher::segment_any(int t, uint64_t L, uint64_t R, CostReport& cost) {
  const uint64_t n = R - L + 1;
  const std::vector<uint64_t> ds = length_grid(t, n);
  std::optional<Segment> found;
  Predicate p;
  p.exact = [this, &ds, t, L, R](uint64_t k) { return exact_fixed_len(ds[k], t, L, R); };
  p.evaluate = [this, &ds, t, L, R, &found](uint64_t k, CostReport& c) {
    for (int rep = 0; rep < backend_.nested_reps; ++rep) {
      if (auto s = fixed_len(ds[k], t, L, R, c)) {
        found = s;
        return true;
      }
    }
    return false;
  };
  int64_t unit = 0;
  for (uint64_t d : ds) unit = std::max(unit, fixed_len_budget(d, t, n));
  p.unit_cost = unit;
  p.reject_cost = sat_mul(backend_.nested_reps, unit);
  IndexResult r = bounded_first_one(p, 0, ds.size() - 1, backend_);
  cost.merge(r.cost);
  if (!r.index) return std::nullopt;
  return found;
}

std::optional<Segment> DyckSearcher::segment_edge(int t, uint64_t L, uint64_t R, bool leftmost,
                                                  CostReport& cost) {
  const uint64_t n = R - L + 1;
  // Segments never nest, so the leftmost one is the one ending first: grow
  // [L, r] until a segment appears, then bisect on r (mirrored for the
  // rightmost one).
  uint64_t prev = 0;
  for (int z = 1;; ++z) {
    const bool last = z >= 63 || (uint64_t{1} << z) >= n;
    const uint64_t w = last ? n : uint64_t{1} << z;
    const uint64_t a = leftmost ? L : R - w + 1;
    const uint64_t b = leftmost ? L + w - 1 : R;
    std::optional<Segment> best = segment<false>(t, a, b, SegmentMode::any, cost);
    if (best) {
      uint64_t lo = prev + 1, hi = w;
      while (lo < hi) {
        const uint64_t mid = lo + (hi - lo) / 2;
        const uint64_t a2 = leftmost ? L : R - mid + 1;
        const uint64_t b2 = leftmost ? L + mid - 1 : R;
        if (auto s = segment<false>(t, a2, b2, SegmentMode::any, cost)) {
          best = s;
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      return best;
    }
    if (last) return std::nullopt;
    prev = w;
  }
}

std::optional<Segment> DyckSearcher::segment_search(int t, uint64_t L, uint64_t R,
                                                    SegmentMode mode, CostReport& cost) {
  if (t < 2) throw ValidationError("t must be at least 2");
  if (L > R || R >= u_.size()) throw ValidationError("invalid window");
  return segment<false>(t, L, R, mode, cost);
}

int64_t DyckSearcher::fpfl_budget(int t, uint64_t d) {
  if (t == 2) return 2;
  const auto key = std::make_tuple(kFpflKind, t, d);
  if (auto it = budgets_.find(key); it != budgets_.end()) return it->second;
  const int64_t b = sat_add(fpfl_budget(t - 1, d),
                            sat_add(segment_budget(t - 1, d, SegmentMode::minimal),
                                    segment_budget(t - 1, d, SegmentMode::maximal)));
  budgets_[key] = b;
  return b;
}

int64_t DyckSearcher::fixed_len_budget(uint64_t d, int t, uint64_t n) {
  const int64_t f = fpfl_budget(t, d);
  const uint64_t schedule = std::max<uint64_t>(1, (2 * n + d - 1) / d);
  const int stages = unknown_t_stages(schedule);
  return sat_add(sat_mul((int64_t{1} << stages) - 1, f),
                 sat_mul(stages, sat_mul(backend_.nested_reps, f)));
}

int64_t DyckSearcher::segment_budget(int t, uint64_t n, SegmentMode mode) {
  if (n < static_cast<uint64_t>(t)) return 0;
  const auto key = std::make_tuple(budget_kind(mode), t, n);
  if (auto it = budgets_.find(key); it != budgets_.end()) return it->second;
  int64_t b = 0;
  if (t == 2) {
    b = mode == SegmentMode::any ? 3 * staged_search_budget(n - 1, 1, 1)
                                 : bounded_first_one_budget(n - 1, 1, 1);
  } else if (mode == SegmentMode::any) {
    const std::vector<uint64_t> ds = length_grid(t, n);
    int64_t unit = 0;
    for (uint64_t d : ds) unit = std::max(unit, fixed_len_budget(d, t, n));
    // Unit and verification costs are at most unit and nested_reps * unit.
    const int64_t per = bounded_first_one_budget(ds.size(), 1, backend_.nested_reps);
    b = sat_mul(per, unit);
  } else {
    const int64_t any = segment_budget(t, n, SegmentMode::any);
    for (uint64_t w = 2; w < n; w *= 2) b = sat_add(b, segment_budget(t, w, SegmentMode::any));
    b = sat_add(b, sat_mul(1 + ceil_log2(n), any));
  }
  budgets_[key] = b;
  return b;
}

DyckResult dyck_decide(const BitString& x, int k, Backend& backend) {
  if (k < 1) throw ValidationError("depth bound must be at least 1");
  WallTimer timer;
  DyckResult res;
  const BitString u = dyck_pad(x, k);
  DyckSearcher s(u, backend);
  auto seg = s.segment_search(k + 1, 0, u.size() - 1, SegmentMode::any, res.cost);
  res.member = true;
  if (seg) {
    // Certify the witness by reading it.
    int64_t g = 0;
    for (uint64_t p = seg->i; p <= seg->j; ++p) g += u[p] ? -1 : 1;
    res.cost.charge("dyck.verify", static_cast<int64_t>(seg->j - seg->i + 1));
    if (g == seg->sign * (k + 1)) {
      res.member = false;
      res.witness = seg;
    }
  }
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

}  // namespace qlab
