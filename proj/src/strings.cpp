// Copyright 2026 The qlab Authors
#include "qlab/strings.hpp"

#include <algorithm>
#include <cctype>

namespace qlab {

BitString parse_bits(const std::string& text) {
  BitString s;
  for (char c : text) {
    if (c == '0' || c == '1')
      s.push_back(static_cast<uint8_t>(c - '0'));
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw ValidationError(std::string("invalid bit character '") + c + "'");
  }
  return s;
}

std::string format_bits(const BitString& s) {
  std::string out;
  out.reserve(s.size());
  for (uint8_t b : s) out.push_back(b ? '1' : '0');
  return out;
}

namespace {

Predicate mismatch_predicate(const BitString& s, const BitString& t, uint64_t offset_t,
                             bool reversed) {
  // reversed: compare s_i against t_{offset_t - i}.
  auto f = [&s, &t, offset_t, reversed](uint64_t i) {
    return s[i] != (reversed ? t[offset_t - i] : t[i]);
  };
  return simple_predicate(f, 1);
}

}  // namespace

StringPredicateResult strings_equal(const BitString& s, const BitString& t, Backend& backend) {
  StringPredicateResult r;
  if (s.size() != t.size()) return r;
  if (s.empty()) {
    r.value = true;
    return r;
  }
  const Predicate p = mismatch_predicate(s, t, 0, false);
  SearchResult sr = emulated_search(p, 0, s.size() - 1, SearchMode::unknown_t, backend, "streq");
  r.cost = sr.cost;
  r.witness = sr.index;
  r.value = !sr.index;
  return r;
}

StringPredicateResult palindrome_check(const BitString& s, Backend& backend) {
  StringPredicateResult r;
  const uint64_t half = s.size() / 2;
  if (half == 0) {
    r.value = true;
    return r;
  }
  const Predicate p = mismatch_predicate(s, s, s.size() - 1, true);
  SearchResult sr = emulated_search(p, 0, half - 1, SearchMode::unknown_t, backend, "palindrome");
  r.cost = sr.cost;
  r.witness = sr.index;
  r.value = !sr.index;
  return r;
}

LcpResult lcp(const BitString& s, const BitString& t, Backend& backend, int reps) {
  if (reps < 1) throw ValidationError("repetition count must be positive");
  LcpResult r;
  const uint64_t k = std::min(s.size(), t.size());
  r.length = k;
  if (k == 0) return r;
  const Predicate p = mismatch_predicate(s, t, 0, false);
  for (int rep = 0; rep < reps; ++rep) {
    // Only search below the best mismatch found so far.
    if (r.length == 0) break;
    IndexResult f = bounded_first_one(p, 0, r.length - 1, backend);
    r.cost.merge(f.cost);
    if (f.index) r.length = *f.index;
  }
  return r;
}

CompareResult compare_lex(const BitString& s, const BitString& t, Backend& backend, int reps) {
  CompareResult r;
  LcpResult l = lcp(s, t, backend, reps);
  r.cost = l.cost;
  const uint64_t n = s.size(), m = t.size();
  const uint64_t j = l.length;
  if (j == std::min(n, m)) {
    r.order = n == m ? 0 : (n < m ? -1 : +1);
  } else {
    r.cost.charge("compare.read", 1);
    r.order = s[j] < t[j] ? -1 : +1;
  }
  return r;
}

int comparator_reps(uint64_t n) { return std::max(1, 3 * ceil_log2(std::max<uint64_t>(n, 2))); }

SortedStringSet::SortedStringSet(const std::vector<BitString>& strings, Backend& backend, int reps)
    : strings_(strings), backend_(backend), reps_(reps) {
  if (reps < 1) throw ValidationError("repetition count must be positive");
}

int SortedStringSet::compare(uint64_t a, uint64_t b) {
  CompareResult c = compare_lex(strings_[a], strings_[b], backend_, reps_);
  cost_.merge(c.cost);
  ++comparisons_;
  const int exact = strings_[a] < strings_[b] ? -1 : (strings_[b] < strings_[a] ? 1 : 0);
  if (c.order != exact) ++errors_;
  return c.order;
}

void SortedStringSet::fix(int node) {
  nodes_[node].height = 1 + std::max(h(nodes_[node].left), h(nodes_[node].right));
}

int SortedStringSet::rotate_left(int x) {
  const int y = nodes_[x].right;
  nodes_[x].right = nodes_[y].left;
  nodes_[y].left = x;
  fix(x);
  fix(y);
  return y;
}

int SortedStringSet::rotate_right(int x) {
  const int y = nodes_[x].left;
  nodes_[x].left = nodes_[y].right;
  nodes_[y].right = x;
  fix(x);
  fix(y);
  return y;
}

int SortedStringSet::rebalance(int node) {
  fix(node);
  const int bal = h(nodes_[node].left) - h(nodes_[node].right);
  if (bal > 1) {
    const int l = nodes_[node].left;
    if (h(nodes_[l].left) < h(nodes_[l].right)) nodes_[node].left = rotate_left(l);
    return rotate_right(node);
  }
  if (bal < -1) {
    const int r = nodes_[node].right;
    if (h(nodes_[r].right) < h(nodes_[r].left)) nodes_[node].right = rotate_right(r);
    return rotate_left(node);
  }
  return node;
}

int SortedStringSet::insert(int node, uint64_t key) {
  if (node < 0) {
    nodes_.push_back(Node{key});
    return static_cast<int>(nodes_.size()) - 1;
  }
  // Ties go right so equal strings leave in insertion order.
  if (compare(key, nodes_[node].key) < 0) {
    const int child = insert(nodes_[node].left, key);
    nodes_[node].left = child;
  } else {
    const int child = insert(nodes_[node].right, key);
    nodes_[node].right = child;
  }
  return rebalance(node);
}

void SortedStringSet::add(uint64_t index) {
  if (index >= strings_.size()) throw ValidationError("string index out of range");
  root_ = insert(root_, index);
  ++size_;
}

int SortedStringSet::remove_min(int node, uint64_t& out) {
  if (nodes_[node].left < 0) {
    out = nodes_[node].key;
    return nodes_[node].right;
  }
  const int child = remove_min(nodes_[node].left, out);
  nodes_[node].left = child;
  return rebalance(node);
}

uint64_t SortedStringSet::pop_min() {
  if (root_ < 0) throw ValidationError("pop from an empty set");
  uint64_t out = 0;
  root_ = remove_min(root_, out);
  --size_;
  return out;
}

std::vector<uint64_t> SortedStringSet::in_order() const {
  std::vector<uint64_t> out;
  std::vector<int> stack;
  int cur = root_;
  while (cur >= 0 || !stack.empty()) {
    while (cur >= 0) {
      stack.push_back(cur);
      cur = nodes_[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(nodes_[cur].key);
    cur = nodes_[cur].right;
  }
  return out;
}

int SortedStringSet::height() const { return h(root_); }

SortResult string_sort(const std::vector<BitString>& strings, Backend& backend,
                       std::optional<int> reps) {
  if (strings.empty()) throw ValidationError("nothing to sort");
  WallTimer timer;
  SortedStringSet set(strings, backend, reps.value_or(comparator_reps(strings.size())));
  for (uint64_t i = 0; i < strings.size(); ++i) set.add(i);
  SortResult r;
  while (!set.empty()) r.order.push_back(set.pop_min());
  r.cost = set.cost();
  r.comparator_errors = set.comparator_errors();
  r.cost.wall_ns = timer.elapsed_ns();
  return r;
}

MostFrequentResult most_frequent(const std::vector<BitString>& strings, Backend& backend,
                                 std::optional<int> reps) {
  if (strings.empty()) throw ValidationError("no strings given");
  WallTimer timer;
  const int r = reps.value_or(comparator_reps(strings.size()));
  SortResult sorted = string_sort(strings, backend, r);
  MostFrequentResult res;
  res.cost = sorted.cost;
  const auto& order = sorted.order;
  auto consider = [&](size_t begin, size_t end) {
    const uint64_t len = end - begin;
    const uint64_t first = *std::min_element(order.begin() + begin, order.begin() + end);
    if (len > res.frequency || (len == res.frequency && first < res.index)) {
      res.frequency = len;
      res.index = first;
    }
  };
  size_t border = 0;
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    // A found mismatch is certified, so repeat until one appears.
    bool equal = true;
    for (int rep = 0; rep < r && equal; ++rep) {
      StringPredicateResult e = strings_equal(strings[order[i]], strings[order[i + 1]], backend);
      res.cost.merge(e.cost);
      equal = e.value;
    }
    if (!equal) {
      consider(border, i + 1);
      border = i + 1;
    }
  }
  consider(border, order.size());
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

}  // namespace qlab
