// Copyright 2026 The qlab Authors
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qlab/strings.hpp"

namespace qlab {

// Substring u[i..j] (inclusive) whose balance #0 - #1 is sign * t.
struct Segment {
  uint64_t i = 0;
  uint64_t j = 0;
  int sign = 1;
  bool operator==(const Segment&) const = default;
};

enum class SegmentMode { minimal, maximal, any };

SegmentMode parse_segment_mode(const std::string& name);

// Transcodes "(" -> 0 and ")" -> 1; '0'/'1' text is accepted as is.
BitString parse_dyck(const std::string& text);

// u = 1^k x 0^k
BitString dyck_pad(const BitString& x, int k);

// Classical counter check: balanced, no negative prefix, depth at most k.
bool dyck_classical(const BitString& x, int k);

// All minimal +-t substrings of u ordered by start (ends are then ordered
// too, since they never nest).
std::vector<Segment> minimal_segments(const BitString& u, int t);

// The +-t substring search over a fixed padded string u. Every procedure
// exists in two forms: the charged run on the backend and an exact form
// built from the same steps with classical subroutines, which also serves
// as the out-of-band truth for nested searches.
class DyckSearcher {
 public:
  DyckSearcher(BitString u, Backend& backend);

  const BitString& u() const { return u_; }

  // Is q inside a +-t substring of length at most d within [L, R]?
  std::optional<Segment> fixed_point_fixed_len(uint64_t q, uint64_t d, int t, uint64_t L,
                                               uint64_t R, CostReport& cost);
  // Amplitude-amplified search over q in [L, R].
  std::optional<Segment> fixed_len(uint64_t d, int t, uint64_t L, uint64_t R, CostReport& cost);
  std::optional<Segment> segment_search(int t, uint64_t L, uint64_t R, SegmentMode mode,
                                        CostReport& cost);

  std::optional<Segment> exact_fixed_point_fixed_len(uint64_t q, uint64_t d, int t, uint64_t L,
                                                     uint64_t R);
  std::optional<Segment> exact_segment(int t, uint64_t L, uint64_t R, SegmentMode mode);

  // Worst-case charges of one coherent run, used as the unit cost of the
  // nested searches.
  int64_t fpfl_budget(int t, uint64_t d);
  int64_t fixed_len_budget(uint64_t d, int t, uint64_t n);
  int64_t segment_budget(int t, uint64_t n, SegmentMode mode);

 private:
  template <bool Exact>
  std::optional<Segment> fpfl(uint64_t q, uint64_t d, int t, uint64_t L, uint64_t R,
                              CostReport& cost);
  template <bool Exact>
  std::optional<Segment> segment(int t, uint64_t L, uint64_t R, SegmentMode mode,
                                 CostReport& cost);
  std::optional<Segment> segment_any(int t, uint64_t L, uint64_t R, CostReport& cost);
  std::optional<Segment> segment_edge(int t, uint64_t L, uint64_t R, bool leftmost,
                                      CostReport& cost);
  std::optional<Segment> pair_segment(uint64_t i) const;
  bool exact_fixed_len(uint64_t d, int t, uint64_t L, uint64_t R);
  const std::vector<Segment>& segments(int t);
  Predicate pair_predicate() const;

  BitString u_;
  Backend& backend_;
  std::map<int, std::vector<Segment>> segments_;
  std::map<std::tuple<int, int, uint64_t>, int64_t> budgets_;
};

struct DyckResult {
  bool member = false;
  std::optional<Segment> witness;  // in padded coordinates
  CostReport cost;
};

// Searches any +-(k+1) substring of 1^k x 0^k; a found one is verified by
// reading it before x is rejected.
DyckResult dyck_decide(const BitString& x, int k, Backend& backend);

}  // namespace qlab
