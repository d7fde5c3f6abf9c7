// Copyright 2026 The qlab Authors
// Acceptance suite: one PASS/FAIL line per criterion. Expected values come
// from oracles written here, not from the library.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <set>
#include <string>

#include "qlab/backtrack.hpp"
#include "qlab/dyck.hpp"
#include "qlab/electric.hpp"
#include "qlab/fingerprint.hpp"
#include "qlab/graphs.hpp"
#include "qlab/grover.hpp"
#include "qlab/mitm.hpp"
#include "qlab/mnrs.hpp"
#include "qlab/nand.hpp"
#include "qlab/search.hpp"
#include "qlab/strings.hpp"
#include "qlab/walks.hpp"

namespace qlab {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

double sigma_of(double p, double trials) { return std::sqrt(std::max(p * (1 - p), 0.0) / trials); }

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

std::vector<uint8_t> random_marks(uint64_t n, uint64_t t, Rng& rng) {
  std::vector<uint8_t> bits(n, 0);
  for (uint64_t k = 0; k < t; ++k) bits[k] = 1;
  for (uint64_t k = n - 1; k > 0; --k) std::swap(bits[k], bits[uniform_index(rng, k + 1)]);
  return bits;
}

BitString bits_of(uint64_t v, int len) {
  BitString s(len);
  for (int i = 0; i < len; ++i) s[i] = (v >> (len - 1 - i)) & 1;
  return s;
}

BitString random_string(size_t n, Rng& rng) {
  BitString s(n);
  for (auto& b : s) b = static_cast<uint8_t>(uniform_index(rng, 2));
  return s;
}

std::vector<int64_t> random_permutation(uint64_t n, Rng& rng) {
  std::vector<int64_t> a(n);
  std::iota(a.begin(), a.end(), 1);
  for (uint64_t i = n - 1; i > 0; --i) std::swap(a[i], a[uniform_index(rng, i + 1)]);
  return a;
}

// ---- criterion 1 ----

Outcome grover_law() {
  Outcome o;
  Rng rng(101);
  const int64_t trials = 10000;
  int cases = 0;
  double worst = 0;
  for (uint64_t n = 4; n <= 1024; n *= 2)
    for (uint64_t t = 1; t <= std::min<uint64_t>(n, 16); ++t) {
      const double theta = std::asin(std::sqrt(static_cast<double>(t) / n));
      const int64_t L = std::max<int64_t>(0, std::llround(kPi / (4 * theta) - 0.5));
      const double p = std::pow(std::sin((2 * L + 1) * theta), 2);
      BooleanOracle f = BooleanOracle::from_bits(random_marks(n, t, rng));
      const TrialStats st = grover_known_t_trials(f, n, t, trials, rng);
      const double rate = static_cast<double>(st.successes) / trials;
      const double s = sigma_of(p, trials);
      worst = std::max(worst, std::abs(rate - p) / std::max(s, 1e-300));
      o.require(std::abs(rate - p) <= 3 * s + 1e-12,
                "n=" + std::to_string(n) + " t=" + std::to_string(t));
      o.require(1 - rate <= static_cast<double>(t) / n + 3 * s + 1e-12,
                "failure bound n=" + std::to_string(n) + " t=" + std::to_string(t));
      ++cases;
    }
  o.detail << cases << " (n,t) cases, worst deviation " << worst << " sigma";
  return o;
}

// ---- criterion 2 ----

Outcome two_amplitude() {
  Outcome o;
  Rng rng(102);
  double worst = 0;
  for (uint64_t n = 2; n <= 32; ++n)
    for (uint64_t t = 1; t <= n; ++t) {
      const auto bits = random_marks(n, t, rng);
      BooleanOracle f = BooleanOracle::from_bits(bits);
      const double theta = std::asin(std::sqrt(static_cast<double>(t) / n));
      const auto traj = grover_trajectory(f, n, 8);
      for (size_t j = 0; j < traj.size(); ++j) {
        const double g = std::sin((2.0 * j + 1) * theta) / std::sqrt(static_cast<double>(t));
        const double b = t == n ? 0.0 : std::cos((2.0 * j + 1) * theta) / std::sqrt(static_cast<double>(n - t));
        for (uint64_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(traj[j][i] - (bits[i] ? g : b)));
      }
    }
  o.require(worst <= 1e-9, "amplitude mismatch");
  o.detail << "max amplitude error " << worst << " over n <= 32, all t, 8 iterations";
  return o;
}

// ---- criterion 3 ----

Outcome unknown_t() {
  Outcome o;
  Rng rng(103);
  BooleanOracle f = BooleanOracle::from_generator("single-marked:357", 1024);
  int ok = 0;
  const int trials = 1000;
  for (int k = 0; k < trials; ++k) ok += grover_unknown_t(f, 1024, rng).index.has_value();
  const double rate = static_cast<double>(ok) / trials;
  o.require(rate >= 0.5, "success rate");
  for (uint64_t n : {1, 2, 16, 100, 1024, 4096}) {
    int stages = 1;
    while (std::pow(2.0, stages - 1) < kPi / 4 * std::sqrt(static_cast<double>(n))) ++stages;
    const int64_t want = (int64_t{1} << stages) - 1 + stages;
    BooleanOracle none = BooleanOracle::from_generator("none", n);
    const int64_t got = grover_unknown_t(none, n, rng).cost.queries;
    o.require(got == want, "t=0 charge n=" + std::to_string(n));
  }
  o.detail << "single-marked n=1024 success " << rate << "; t=0 charges equal 2^S - 1 + S";
  return o;
}

// ---- criterion 4 ----

Outcome durr_hoyer() {
  Outcome o;
  Backend b(BackendKind::analytic, 104);
  Rng rng(105);
  const uint64_t n = 64;
  const int trials = 100000;
  std::vector<int> visits(n, 0);
  MinSearchOptions opt;
  opt.track_ranks = true;
  for (int k = 0; k < trials; ++k) {
    const auto a = random_permutation(n, rng);
    const auto r = minimum_search(a, b, opt);
    std::vector<char> seen(n, 0);
    for (uint64_t rank : r.visited_ranks) seen[rank] = 1;
    for (uint64_t j = 1; j < n; ++j) visits[j] += seen[j];
  }
  double worst = -1e9;
  for (uint64_t j = 1; j < n; ++j) {
    const double p = static_cast<double>(visits[j]) / trials;
    const double s = sigma_of(1.0 / j, trials);
    worst = std::max(worst, (p - 1.0 / j) / std::max(s, 1e-300));
    o.require(p <= 1.0 / j + 3 * s + 1e-12, "rank " + std::to_string(j));
  }
  std::vector<double> ratio;
  for (uint64_t m : {64, 256, 1024, 4096}) {
    double total = 0;
    const int reps = 300;
    for (int k = 0; k < reps; ++k) total += minimum_search(random_permutation(m, rng), b).cost.queries;
    ratio.push_back(total / reps / std::sqrt(static_cast<double>(m)));
  }
  const double spread = *std::max_element(ratio.begin(), ratio.end()) /
                        *std::min_element(ratio.begin(), ratio.end());
  o.require(spread <= 2.0, "queries/sqrt(n) spread");
  o.detail << "max (p_j - 1/j)/sigma " << worst << "; queries/sqrt(n) =";
  for (double r : ratio) o.detail << " " << r;
  o.detail << " (spread x" << spread << ")";
  return o;
}

// ---- criterion 5 ----

Graph undirected_from_bits(int n, uint64_t bits, GraphRep rep) {
  Graph g(n, false, rep);
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k)
      if ((bits >> k) & 1) g.add_edge(u, v);
  return g;
}

Graph dag_from_bits(int n, uint64_t bits, const std::vector<int>& perm) {
  Graph g(n, true);
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k)
      if ((bits >> k) & 1) g.add_edge(perm[u], perm[v]);
  return g;
}

std::vector<int> random_perm(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform_index(rng, i + 1)]);
  return p;
}

bool valid_dfs_preorder(const Graph& g, int start, const std::vector<int>& order) {
  if (order.empty() || order[0] != start) return false;
  std::vector<char> seen(g.n(), 0);
  auto open = [&](int v) {
    for (int x = 0; x < g.n(); ++x)
      if (g.has_edge(v, x) && !seen[x]) return true;
    return false;
  };
  std::vector<int> stack{start};
  seen[start] = 1;
  for (size_t k = 1; k < order.size(); ++k) {
    const int x = order[k];
    if (seen[x]) return false;
    while (!stack.empty() && !g.has_edge(stack.back(), x)) {
      if (open(stack.back())) return false;
      stack.pop_back();
    }
    if (stack.empty()) return false;
    seen[x] = 1;
    stack.push_back(x);
  }
  for (int v : stack)
    if (open(v)) return false;
  return true;
}

std::vector<int64_t> oracle_distances(const Graph& g, int start) {
  std::vector<int64_t> d(g.n(), kUnreachable);
  d[start] = 0;
  for (int round = 0; round < g.n(); ++round)
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v)
        if (d[u] != kUnreachable && g.has_edge(u, v) && (d[v] == kUnreachable || d[u] + 1 < d[v]))
          d[v] = d[u] + 1;
  return d;
}

bool respects_edges(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (int v = 0; v < g.n(); ++v) {
    if (pos[v] < 0) return false;
    for (int x = 0; x < g.n(); ++x)
      if (g.has_edge(v, x) && pos[v] >= pos[x]) return false;
  }
  return static_cast<int>(order.size()) == g.n();
}

bool oracle_win(const Graph& g, int v, std::vector<int>& memo) {
  if (memo[v] >= 0) return memo[v];
  bool w = false;
  for (int x = 0; x < g.n(); ++x)
    if (g.has_edge(v, x) && !oracle_win(g, x, memo)) w = true;
  return memo[v] = w;
}

int64_t oracle_longest(const Graph& g, int v, std::vector<int64_t>& memo) {
  if (memo[v] >= 0) return memo[v];
  int64_t best = 0;
  for (int x = 0; x < g.n(); ++x)
    if (g.has_edge(v, x)) best = std::max(best, 1 + oracle_longest(g, x, memo));
  return memo[v] = best;
}

double oracle_tsp(const Graph& g) {
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  double best = kNoEdge;
  do {
    double w = 0.0;
    for (int i = 0; i + 1 < g.n(); ++i) w += g.weight(p[i], p[i + 1]);
    best = std::min(best, w);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

bool is_ham_path(const Graph& g, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != g.n()) return false;
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.n(); ++i)
    if (sorted[i] != i) return false;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

bool oracle_subset(const SubsetSumInstance& inst) {
  const size_t n = inst.a.size();
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    int64_t s = 0;
    for (size_t i = 0; i < n; ++i)
      if ((m >> i) & 1) s += inst.a[i];
    if (s == inst.k) return true;
  }
  return false;
}

bool subset_ok(const SubsetSumInstance& inst, const SubsetSumResult& r, bool want) {
  if (r.subset.has_value() != want) return false;
  if (!r.subset) return true;
  int64_t s = 0;
  for (int i : *r.subset) s += inst.a[i];
  return s == inst.k;
}

bool oracle_dyck(const BitString& x, int k) {
  int depth = 0;
  for (uint8_t c : x) {
    depth += c == 0 ? 1 : -1;
    if (depth < 0 || depth > k) return false;
  }
  return depth == 0;
}

uint64_t frequency_oracle(const std::vector<BitString>& strs) {
  std::map<BitString, uint64_t> count;
  for (const auto& s : strs) ++count[s];
  uint64_t best = 0, idx = 0;
  for (uint64_t i = 0; i < strs.size(); ++i)
    if (count[strs[i]] > best) {
      best = count[strs[i]];
      idx = i;
    }
  return idx;
}

std::vector<uint64_t> sort_oracle(const std::vector<BitString>& strs) {
  std::vector<uint64_t> want(strs.size());
  std::iota(want.begin(), want.end(), 0);
  std::stable_sort(want.begin(), want.end(), [&](uint64_t a, uint64_t c) { return strs[a] < strs[c]; });
  return want;
}

int lex_order(const BitString& s, const BitString& t) { return s < t ? -1 : (t < s ? 1 : 0); }

Graph random_graph(int n, double p, bool directed, Rng& rng) {
  Graph g(n, directed);
  for (int u = 0; u < n; ++u)
    for (int v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v && bernoulli(rng, p)) g.add_edge(u, v);
  return g;
}

Graph random_dag(int n, double p, Rng& rng) {
  const auto perm = random_perm(n, rng);
  Graph g(n, true);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) g.add_edge(perm[u], perm[v]);
  return g;
}

Outcome oracle_equivalence() {
  Outcome o;
  Backend ideal(BackendKind::analytic_ideal, 106);
  Rng rng(107);
  int64_t checked = 0;

  // Strings: all pairs with |s|, |t| <= 10 (inputs up to 20 symbols) and all
  // strings up to 20 symbols for the palindrome test.
  for (int ls = 0; ls <= 10; ++ls)
    for (int lt = 0; lt <= 10; ++lt)
      for (uint64_t x = 0; x < (1u << ls); ++x)
        for (uint64_t y = 0; y < (1u << lt); ++y) {
          const BitString s = bits_of(x, ls), t = bits_of(y, lt);
          uint64_t want_lcp = 0;
          while (want_lcp < s.size() && want_lcp < t.size() && s[want_lcp] == t[want_lcp]) ++want_lcp;
          const bool ok = strings_equal(s, t, ideal).value == (s == t) &&
                          lcp(s, t, ideal).length == want_lcp &&
                          compare_lex(s, t, ideal).order == lex_order(s, t);
          o.require(ok, "strings " + format_bits(s) + "/" + format_bits(t));
          ++checked;
        }
  for (int len = 0; len <= 20; ++len)
    for (uint64_t x = 0; x < (1u << len); ++x) {
      const BitString s = bits_of(x, len);
      o.require(palindrome_check(s, ideal).value == std::equal(s.begin(), s.end(), s.rbegin()),
                "palindrome " + format_bits(s));
      ++checked;
    }
  for (int k = 0; k < 300; ++k) {
    std::vector<BitString> strs;
    const size_t n = 1 + uniform_index(rng, 20);
    for (size_t i = 0; i < n; ++i) strs.push_back(random_string(uniform_index(rng, 5), rng));
    o.require(string_sort(strs, ideal).order == sort_oracle(strs), "string sort");
    o.require(most_frequent(strs, ideal).index == frequency_oracle(strs), "most frequent");
    checked += 2;
  }

  // Dyck: every string up to 14 symbols, k = 1..4.
  for (int n = 0; n <= 14; ++n)
    for (uint64_t v = 0; v < (1u << n); ++v)
      for (int k = 1; k <= 4; ++k) {
        const BitString x = bits_of(v, n);
        o.require(dyck_decide(x, k, ideal).member == oracle_dyck(x, k), "dyck " + format_bits(x));
        ++checked;
      }

  // Graphs: every labeled graph with n <= 7.
  for (int n = 1; n <= 7; ++n) {
    const uint64_t count = uint64_t{1} << (n * (n - 1) / 2);
    const auto perm = random_perm(n, rng);
    for (uint64_t bits = 0; bits < count; ++bits) {
      const Graph g = undirected_from_bits(n, bits, bits % 2 ? GraphRep::matrix : GraphRep::list);
      const auto order = qdfs(g, 0, ideal).order;
      o.require(valid_dfs_preorder(g, 0, order) && order == dfs_classical(g, 0).order,
                "dfs n=" + std::to_string(n));
      o.require(qbfs(g, 0, ideal).dist == oracle_distances(g, 0), "bfs n=" + std::to_string(n));
      const Graph d = dag_from_bits(n, bits, perm);
      o.require(respects_edges(d, qtopsort(d, ideal).order), "topsort n=" + std::to_string(n));
      std::vector<int> memo(n, -1);
      const auto win = dag_game_solve(d, ideal).win;
      for (int v = 0; v < n; ++v) o.require(win[v] == oracle_win(d, v, memo), "game n=" + std::to_string(n));
      std::vector<int64_t> lmemo(n, -1);
      o.require(dag_longest_path(d, perm[0], ideal).length == oracle_longest(d, perm[0], lmemo),
                "longest n=" + std::to_string(n));
      checked += 5;
    }
  }
  // Hamiltonian path and TSP: every labeled graph with n <= 6.
  for (int n = 1; n <= 6; ++n)
    for (uint64_t bits = 0; bits < (uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
      Graph g = undirected_from_bits(n, bits, GraphRep::list);
      const bool want = oracle_tsp(g) != kNoEdge;
      for (auto v : {HamVariant::brute, HamVariant::dp, HamVariant::quantum_bf, HamVariant::quantum_dp}) {
        const auto p = hamiltonian_path(g, v, ideal).path;
        o.require(p.has_value() == want && (!p || is_ham_path(g, *p)), "hampath n=" + std::to_string(n));
        ++checked;
      }
      Graph w(n, false);
      for (int u = 0; u < n; ++u)
        for (int x : g.neighbors(u))
          if (u < x) w.add_edge(u, x, 1 + static_cast<double>(uniform_index(rng, 9)));
      const double best = oracle_tsp(w);
      for (auto v : {TspVariant::dp, TspVariant::quantum_dp}) {
        const auto r = tsp(w, v, ideal);
        o.require(r.weight == best && (!r.path || is_ham_path(w, *r.path)), "tsp n=" + std::to_string(n));
        ++checked;
      }
    }

  // Subset sum: every multiset of values 1..5 with n <= 4 and every target,
  // then random instances up to n = 16.
  const SubsetSumVariant variants[] = {SubsetSumVariant::brute, SubsetSumVariant::grover,
                                       SubsetSumVariant::mitm_classical, SubsetSumVariant::mitm_quantum};
  for (int n = 1; n <= 4; ++n) {
    std::vector<int64_t> a(n, 1);
    for (;;) {
      const int64_t total = std::accumulate(a.begin(), a.end(), int64_t{0});
      for (int64_t k = 1; k <= total + 1; ++k) {
        const SubsetSumInstance inst{a, k};
        const bool want = oracle_subset(inst);
        for (auto v : variants) {
          o.require(subset_ok(inst, subset_sum(inst, v, ideal), want), "subset-sum small");
          ++checked;
        }
      }
      int i = 0;
      while (i < n && a[i] == 5) a[i++] = 1;
      if (i == n) break;
      ++a[i];
    }
  }
  for (int k = 0; k < 120; ++k) {
    const int n = 5 + k % 12;
    SubsetSumInstance inst;
    for (int i = 0; i < n; ++i) inst.a.push_back(1 + static_cast<int64_t>(uniform_index(rng, 200)));
    inst.k = 1 + static_cast<int64_t>(uniform_index(rng, 50 * n));
    const bool want = oracle_subset(inst);
    for (auto v : variants) {
      if (v == SubsetSumVariant::grover && n > 12) continue;  // 2^n superposition, covered below 13
      o.require(subset_ok(inst, subset_sum(inst, v, ideal), want), "subset-sum n=" + std::to_string(n));
      ++checked;
    }
  }
  for (int k = 0; k < 200; ++k) {
    const uint64_t n = 2 * (1 + uniform_index(rng, 16));
    const bool two = bernoulli(rng, 0.5);
    const auto a = make_collision_instance(n, two, rng);
    for (auto v : {CollisionVariant::simple, CollisionVariant::mitm}) {
      o.require(collision_decide(a, v, ideal).one_to_one == !two, "collision");
      ++checked;
    }
  }
  o.detail << checked << " ideal-backend checks; ";

  // Stochastic backend: single runs and boosted wrappers.
  Backend an(BackendKind::analytic, 108);
  std::map<std::string, std::pair<int, int>> single, boosted;
  auto tally = [](std::map<std::string, std::pair<int, int>>& m, const std::string& k, bool ok) {
    m[k].first += ok;
    m[k].second += 1;
  };
  const int trials = 300;
  for (int k = 0; k < trials; ++k) {
    const BitString s = random_string(64, rng);
    BitString t = s;
    for (int f = 0; f < 1 + static_cast<int>(uniform_index(rng, 3)); ++f) t[uniform_index(rng, 64)] ^= 1;
    const BitString u = k % 2 ? s : t;
    tally(single, "streq", strings_equal(s, u, an).value == (s == u));
    BitString pal = random_string(32, rng);
    for (int i = 0; i < 32; ++i) pal.push_back(pal[31 - i]);
    if (k % 2) pal[uniform_index(rng, 64)] ^= 1;
    tally(single, "palindrome",
          palindrome_check(pal, an).value == std::equal(pal.begin(), pal.end(), pal.rbegin()));
    uint64_t want_lcp = 0;
    while (want_lcp < 64 && s[want_lcp] == t[want_lcp]) ++want_lcp;
    tally(single, "lcp", lcp(s, t, an).length == want_lcp);
    tally(single, "strcmp", compare_lex(s, t, an).order == lex_order(s, t));

    BitString x(14);
    for (auto& c : x) c = static_cast<uint8_t>(uniform_index(rng, 2));
    tally(single, "dyck", dyck_decide(x, 1 + k % 3, an).member == oracle_dyck(x, 1 + k % 3));

    const Graph g = random_graph(12, 0.3, k % 2, rng);
    tally(single, "dfs", valid_dfs_preorder(g, 0, qdfs(g, 0, an).order));
    tally(single, "bfs", qbfs(g, 0, an).dist == oracle_distances(g, 0));
    const Graph d = random_dag(12, 0.3, rng);
    tally(single, "topsort", respects_edges(d, qtopsort(d, an).order));

    SubsetSumInstance inst;
    for (int i = 0; i < 12; ++i) inst.a.push_back(1 + static_cast<int64_t>(uniform_index(rng, 1000)));
    inst.k = 1 + static_cast<int64_t>(uniform_index(rng, 6000));
    const bool want = oracle_subset(inst);
    tally(single, "subsetsum-grover", subset_ok(inst, subset_sum(inst, SubsetSumVariant::grover, an), want));

    const bool two = k % 2;
    const auto a = make_collision_instance(64, two, rng);
    tally(single, "collision", collision_decide(a, CollisionVariant::mitm, an).one_to_one == !two);
  }
  for (int k = 0; k < 60; ++k) {
    const Graph g = random_graph(6, 0.5, false, rng);
    const bool want = oracle_tsp(g) != kNoEdge;
    const auto p = hamiltonian_path(g, HamVariant::quantum_dp, an).path;
    tally(single, "hampath", p.has_value() == want && (!p || is_ham_path(g, *p)));
  }
  // Boosted wrappers target 0.99; 2000 trials resolve that level (a
  // 0.997-correct op fails a 300-trial sample about 3% of the time).
  const int boosted_trials = 2000;
  for (int k = 0; k < boosted_trials; ++k) {
    const BitString s = random_string(64, rng);
    BitString t = s;
    for (int f = 0; f < 1 + static_cast<int>(uniform_index(rng, 3)); ++f) t[uniform_index(rng, 64)] ^= 1;
    uint64_t want_lcp = 0;
    while (want_lcp < 64 && s[want_lcp] == t[want_lcp]) ++want_lcp;
    const int reps = comparator_reps(64);
    tally(boosted, "lcp", lcp(s, t, an, reps).length == want_lcp);
    tally(boosted, "strcmp", compare_lex(s, t, an, reps).order == lex_order(s, t));

    const Graph d = random_dag(12, 0.3, rng);
    std::vector<int> memo(12, -1);
    const auto win = dag_game_solve(d, an).win;
    bool all = true;
    for (int v = 0; v < 12; ++v) all = all && win[v] == oracle_win(d, v, memo);
    tally(boosted, "daggame", all);
    std::vector<int64_t> lmemo(12, -1);
    tally(boosted, "daglongest", dag_longest_path(d, 0, an).length == oracle_longest(d, 0, lmemo));

    SubsetSumInstance inst;
    for (int i = 0; i < 12; ++i) inst.a.push_back(1 + static_cast<int64_t>(uniform_index(rng, 1000)));
    inst.k = 1 + static_cast<int64_t>(uniform_index(rng, 6000));
    tally(boosted, "subsetsum-mitm",
          subset_ok(inst, subset_sum(inst, SubsetSumVariant::mitm_quantum, an), oracle_subset(inst)));

    std::vector<BitString> strs;
    for (int i = 0; i < 40; ++i) strs.push_back(random_string(16, rng));
    tally(boosted, "strsort", string_sort(strs, an).order == sort_oracle(strs));
    for (int i = 0; i < 20; ++i) strs[i] = strs[uniform_index(rng, 40)];
    tally(boosted, "mostfreq", most_frequent(strs, an).index == frequency_oracle(strs));
  }
  double min_single = 1, min_boosted = 1;
  for (const auto& [name, c] : single) {
    const double r = static_cast<double>(c.first) / c.second;
    min_single = std::min(min_single, r);
    o.require(r >= 2.0 / 3, "single-run " + name + " " + std::to_string(c.first) + "/" + std::to_string(c.second));
  }
  for (const auto& [name, c] : boosted) {
    const double r = static_cast<double>(c.first) / c.second;
    min_boosted = std::min(min_boosted, r);
    o.require(r >= 0.99, "boosted " + name + " " + std::to_string(c.first) + "/" + std::to_string(c.second));
  }
  o.detail << "stochastic single-run min " << min_single << " over " << single.size()
           << " ops, boosted min " << min_boosted << " over " << boosted.size() << " ops";
  return o;
}

// ---- criterion 6 ----

Outcome regressions() {
  Outcome o;
  Backend b(BackendKind::analytic, 109);
  Rng rng(110);
  std::vector<double> xs, ys;
  for (uint64_t n = 64; n <= 4096; n *= 2) {
    double total = 0;
    const int reps = 200;
    for (int k = 0; k < reps; ++k) total += minimum_search(random_permutation(n, rng), b).cost.queries;
    xs.push_back(static_cast<double>(n));
    ys.push_back(total / reps);
  }
  const double e_min = loglog_slope(xs, ys);
  o.require(std::abs(e_min - 0.5) <= 0.1, "minimum search exponent");

  xs.clear();
  ys.clear();
  for (uint64_t n : {256, 1024, 4096})
    for (uint64_t t : {1, 4, 16, 64}) {
      double total = 0;
      const int reps = 40;
      for (int k = 0; k < reps; ++k) {
        BooleanOracle f = BooleanOracle::from_bits(random_marks(n, t, rng));
        total += all_ones(f, 0, n - 1, b).cost.queries;
      }
      xs.push_back(static_cast<double>(t * n));
      ys.push_back(total / reps);
    }
  const double e_all = loglog_slope(xs, ys);
  o.require(std::abs(e_all - 0.5) <= 0.1, "all_ones t*n exponent");

  std::vector<double> gaps;
  for (int n : {18, 24}) {
    const SubsetSumInstance inst{std::vector<int64_t>(n, 2), 1};
    const double g = std::log2(static_cast<double>(subset_sum(inst, SubsetSumVariant::grover, b).cost.queries));
    const double m = std::log2(static_cast<double>(subset_sum(inst, SubsetSumVariant::mitm_quantum, b).cost.queries));
    gaps.push_back(g - m);
    o.require(std::abs(g - m - n / 6.0) <= 2.0, "subset-sum gap n=" + std::to_string(n));
  }

  xs.clear();
  ys.clear();
  for (uint64_t n : {1024, 4096, 16384, 65536}) {
    BitString x(n);
    for (uint64_t i = 0; i < n; ++i) x[i] = i % 4 < 2 ? 0 : 1;  // (()) repeated, depth 2
    xs.push_back(static_cast<double>(n));
    ys.push_back(static_cast<double>(dyck_decide(x, 2, b).cost.queries));
  }
  const double e_dyck = loglog_slope(xs, ys);
  o.require(std::abs(e_dyck - 0.5) <= 0.15, "dyck exponent");
  o.detail << "minsearch exponent " << e_min << "; all_ones exponent in t*n " << e_all
           << "; subset-sum gaps " << gaps[0] << " (n/6=3), " << gaps[1] << " (n/6=4) bits; dyck exponent "
           << e_dyck;
  return o;
}

// ---- criterion 7 ----

Outcome walk_figures() {
  Outcome o;
  const auto circle = random_walk_circle(5, 98);
  double circ_err = 0;
  for (double p : circle) circ_err = std::max(circ_err, std::abs(p - 0.2));
  o.require(circ_err <= 1e-6, "circle step 98");

  const auto line = random_walk_line_exact(3, Rational(1, 2));
  o.require(line.at(-3) == Rational(1, 8) && line.at(-1) == Rational(3, 8) && line.at(1) == Rational(3, 8) &&
                line.at(3) == Rational(1, 8),
            "line step 3");

  const int steps = 20, width = 2 * steps + 1, dim = 2 * width;
  const Gate1Q h = standard_gate("H");
  std::vector<cplx> u(static_cast<size_t>(dim) * dim, 0.0);
  for (int x = 0; x < width; ++x)
    for (int d = 0; d < 2; ++d)
      for (int e = 0; e < 2; ++e) {
        const int to = d == 0 ? x - 1 : x + 1;
        if (to >= 0 && to < width) u[static_cast<size_t>(2 * to + d) * dim + 2 * x + e] += h(d, e);
      }
  std::vector<cplx> v(dim, 0.0);
  v[2 * steps] = 1.0;  // position 0, moving left
  for (int s = 0; s < steps; ++s) {
    std::vector<cplx> w(dim, 0.0);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) w[r] += u[static_cast<size_t>(r) * dim + c] * v[c];
    v = w;
  }
  const auto amps = coined_walk_1d_amplitudes(steps, h, {0, 0});
  double amp_err = 0, left = 0, right = 0;
  for (int x = -steps; x <= steps; ++x)
    for (int d = 0; d < 2; ++d) {
      const int64_t i = 2 * (x - amps.first) + d;
      const cplx got = i >= 0 && i < static_cast<int64_t>(amps.prob.size()) ? amps.prob[i] : 0.0;
      amp_err = std::max(amp_err, std::abs(got - v[2 * (x + steps) + d]));
      (x < 0 ? left : right) += std::norm(v[2 * (x + steps) + d]);
    }
  o.require(amp_err <= 1e-9, "Hadamard walk vs dense U^20");
  o.require(std::abs(left - right) > 0.1, "Hadamard walk asymmetry");
  o.detail << "circle@98 max error " << circ_err << "; line@3 exact; U^20 error " << amp_err
           << "; mass left " << left << " vs right " << right;
  return o;
}

// ---- criterion 8 ----

Outcome torus() {
  Outcome o;
  double drift = 0;
  for (int n : {4, 6, 8}) {
    const CoinedGraphWalk w = torus_walk(n);
    std::vector<cplx> a = w.uniform_state();
    const std::vector<cplx> a0 = a;
    for (int s = 0; s < 100; ++s) w.step(a);
    for (size_t i = 0; i < a.size(); ++i) drift = std::max(drift, std::abs(a[i] - a0[i]));
  }
  o.require(drift <= 1e-9, "uniform state drift");
  o.detail << "unmarked drift " << drift << "; peak*n^2:";
  for (int n : {4, 6, 8}) {
    const int64_t budget = static_cast<int64_t>(std::ceil(8 * n * std::log2(n)));
    CoinedGraphWalk w = torus_walk(n);
    const int mx = 1, my = 2;
    w.set_marked(mx + n * my);
    std::vector<cplx> a = w.uniform_state();
    double peak = 0;
    for (int64_t s = 0; s < budget; ++s) {
      w.step(a);
      peak = std::max(peak, w.vertex_probabilities(a)[mx + n * my]);
    }
    o.require(peak > 5.0 / (n * n), "peak n=" + std::to_string(n));
    o.detail << " n=" << n << " " << peak * n * n;
  }
  return o;
}

// ---- criterion 9 ----

StateVector random_state(int qubits, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(size_t{1} << qubits);
  double nrm = 0;
  for (auto& x : a) {
    x = {g(rng), g(rng)};
    nrm += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(nrm);
  return StateVector(a);
}

Outcome swap() {
  Outcome o;
  Rng rng(111);
  const int reps = 10000;
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const int q = 1 + k % 2;
    const StateVector a = random_state(q, rng), b = random_state(q, rng);
    cplx ov = 0;
    for (size_t i = 0; i < a.size(); ++i) ov += std::conj(a.amps()[i]) * b.amps()[i];
    const double want = 0.5 + 0.5 * std::norm(ov);
    const auto r = swap_test(a, b, reps, rng);
    const double s = sigma_of(want, reps);
    worst = std::max(worst, std::abs(r.observed_pr0 - want) / s);
    o.require(std::abs(r.observed_pr0 - want) <= 3 * s, "pair " + std::to_string(k));
  }
  const StateVector zero(1, 0), one(1, 1);
  const double eq = swap_test_pr0(zero, zero), orth = swap_test_pr0(zero, one);
  o.require(std::abs(eq - 1) <= 1e-9 && std::abs(orth - 0.5) <= 1e-9, "matrix-level cases");
  o.detail << "20 pairs, worst deviation " << worst << " sigma; equal " << eq << ", orthogonal " << orth;
  return o;
}

// ---- criterion 10 ----

Outcome fingerprinting() {
  Outcome o;
  Rng rng(112);
  int false_unequal = 0;
  const int runs = 100000;
  for (int k = 0; k < runs; ++k) {
    const BitString u = random_string(1 + uniform_index(rng, 64), rng);
    if (k % 2) {
      false_unequal += !classical_fingerprint_stream({u, u}, 0.1, rng).equal;
    } else {
      const uint64_t t = uint64_t{1} << uniform_index(rng, 4);
      const auto p = random_fingerprint_params(fingerprint_modulus(static_cast<int>(u.size())), t, rng);
      false_unequal += !quantum_fingerprint_multi(u, u, p, rng).equal;
    }
  }
  o.require(false_unequal == 0, "completeness");
  o.detail << "false-unequal " << false_unequal << "/" << runs << "; classical false-equal:";
  const FingerprintStream hard{BitString(60, 1), BitString(60, 0)};
  for (double eps : {0.5, 0.2, 0.1}) {
    const int trials = 10000;
    int wrong = 0;
    for (int k = 0; k < trials; ++k) wrong += classical_fingerprint_stream(hard, eps, rng).equal;
    const double rate = static_cast<double>(wrong) / trials;
    o.require(rate <= eps + 3 * sigma_of(eps, trials), "classical eps");
    o.detail << " eps=" << eps << " " << rate;
  }
  double worst = 0;
  for (uint64_t t : {1, 2, 4, 8})
    for (int k = 0; k < 30; ++k) {
      const size_t len = 1 + uniform_index(rng, 12);
      const BitString u = random_string(len, rng), v = random_string(len, rng);
      const auto p = random_fingerprint_params(fingerprint_modulus(static_cast<int>(len)), t, rng);
      const StateVector s = quantum_fingerprint_state(u, v, p);
      const double diff = static_cast<double>(value_of(u)) - static_cast<double>(value_of(v));
      for (size_t j = 0; j < t; ++j) {
        double c = 0, sn = 0;
        for (size_t i = 0; i < t; ++i) {
          const double th = 2 * kPi * static_cast<double>(p.k[i]) * diff / static_cast<double>(p.q);
          const double sign = std::popcount(i & j) % 2 ? -1.0 : 1.0;
          c += sign * std::cos(th);
          sn += sign * std::sin(th);
        }
        worst = std::max(worst, std::abs(s.probability(2 * j) - c * c / (t * t)));
        worst = std::max(worst, std::abs(s.probability(2 * j + 1) - sn * sn / (t * t)));
      }
    }
  o.require(worst <= 1e-9, "closed form");
  o.detail << "; closed-form error " << worst;
  return o;
}

// ---- criterion 11 ----

Outcome electric() {
  Outcome o;
  Rng rng(113);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    ElectricNetwork net;
    net.n = 2 + static_cast<int>(uniform_index(rng, 49));
    for (int v = 1; v < net.n; ++v)
      net.edges.emplace_back(static_cast<int>(uniform_index(rng, v)), v, 0.1 + 5 * uniform01(rng));
    const int extra = static_cast<int>(uniform_index(rng, 2 * net.n));
    for (int e = 0; e < extra; ++e) {
      const int a = static_cast<int>(uniform_index(rng, net.n)), b = static_cast<int>(uniform_index(rng, net.n));
      if (a != b) net.edges.emplace_back(a, b, 0.1 + 5 * uniform01(rng));
    }
    const int marks = 1 + static_cast<int>(uniform_index(rng, std::min(3, net.n - 1)));
    for (int m = 0; m < marks; ++m) net.marked.push_back(static_cast<int>(uniform_index(rng, net.n)));
    const auto r = hitting_resistance_check(net);
    const double gap = r.hitting > 0 ? std::abs(r.hitting - r.two_wr) / r.hitting : 0.0;
    worst = std::max(worst, gap);
  }
  o.require(worst <= 1e-6, "random graphs");
  ElectricNetwork two;
  two.n = 2;
  two.edges = {{0, 1, 1.0}};
  two.marked = {1};
  const auto r = hitting_resistance_check(two);
  o.require(std::abs(r.hitting - 0.5) <= 1e-12 && std::abs(r.two_wr - 0.5) <= 1e-12, "two vertices");
  o.detail << "100 graphs, worst |H-2WR|/H " << worst << "; 2-vertex H " << r.hitting;
  return o;
}

// ---- criterion 12 ----

Outcome johnson() {
  Outcome o;
  double worst = 0;
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r < n; ++r)
      worst = std::max(worst, std::abs(johnson_spectral_gap(n, r) - static_cast<double>(n) / (r * (n - r))));
  o.require(worst <= 1e-9, "spectral gap");
  Rng rng(114);
  const int n = 40, r = 10, samples = 20000;
  std::vector<int64_t> x(n);
  std::iota(x.begin(), x.end(), 0);
  x[7] = x[30];
  const double eps = static_cast<double>(r) * (r - 1) / (n * (n - 1.0));
  const double rate = johnson_marked_rate(x, r, samples, rng);
  o.require(std::abs(rate - eps) <= 3 * sigma_of(eps, samples), "marked rate");
  std::vector<double> ratio;
  for (double m = 1e3; m <= 1e12; m *= 10) {
    const double rr = std::cbrt(m * m);
    ratio.push_back(mnrs_cost(distinctness_costs(m, rr), 2, MnrsRegime::quantum) / rr);
  }
  const double spread = *std::max_element(ratio.begin(), ratio.end()) /
                        *std::min_element(ratio.begin(), ratio.end());
  o.require(spread <= 2.0, "n^(2/3) scaling");
  o.detail << "gap error " << worst << " (n <= 12); marked rate " << rate << " vs " << eps
           << "; cost/n^(2/3) spread x" << spread;
  return o;
}

// ---- criterion 13 ----

Outcome nand() {
  Outcome o;
  Rng rng(115);
  for (int n : {8, 16, 32}) {
    const NandCalibration cal = nand_calibrate(n, 200, 2026, 25);
    int ok = 0, total = 0;
    if (n == 8) {
      for (uint64_t v = 0; v < 256; ++v) {
        const BitString x = bits_of(v, 8);
        ok += nand_evaluate(x, rng, 25, cal.steps).value == nand_classical(x);
        ++total;
      }
      o.require(ok == 256, "n=8 all inputs");
    } else {
      for (int k = 0; k < 200; ++k) {
        const BitString x = random_string(n, rng);
        ok += nand_evaluate(x, rng, 25, cal.steps).value == nand_classical(x);
        ++total;
      }
      o.require(ok >= 198, "n=" + std::to_string(n));
    }
    o.detail << "n=" << n << " T=" << cal.steps << " " << ok << "/" << total << "; ";
  }
  return o;
}

// ---- criterion 14 ----

Outcome backtracking() {
  Outcome o;
  Rng rng(116);
  int ok = 0, unmarked = 0;
  double worst_unmarked_zero = 1;
  for (int k = 0; k < 200; ++k) {
    const BacktrackTree t = random_backtrack_tree(1 + static_cast<int>(uniform_index(rng, 31)), 0.5, rng);
    const bool any = std::any_of(t.marked.begin(), t.marked.end(), [](char m) { return m != 0; });
    const auto r = backtracking_detect(t, rng);
    ok += r.exists == any;
    if (!any) {
      ++unmarked;
      worst_unmarked_zero = std::min(worst_unmarked_zero, r.p_zero);
    }
  }
  o.require(ok >= 134, "correct decisions");
  const double ulp = std::numeric_limits<double>::epsilon();
  o.require(1 - worst_unmarked_zero <= ulp, "deterministic phase 0 without marks");
  o.detail << ok << "/200 correct; no-mark trees " << unmarked << ", min P(estimate 0) " << worst_unmarked_zero;
  return o;
}

}  // namespace
}  // namespace qlab

// With arguments, runs only the listed criterion ids.
int main(int argc, char** argv) {
  using namespace qlab;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"grover-law", grover_law},
      {"two-amplitude-collapse", two_amplitude},
      {"unknown-t", unknown_t},
      {"durr-hoyer", durr_hoyer},
      {"oracle-equivalence", oracle_equivalence},
      {"query-exponents", regressions},
      {"walk-figures", walk_figures},
      {"torus-walk", torus},
      {"swap-test", swap},
      {"fingerprinting", fingerprinting},
      {"electric-identity", electric},
      {"johnson-graph", johnson},
      {"nand-walk", nand},
      {"backtracking", backtracking},
  };
  int failed = 0;
  int id = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    ++id;
    if (!only.empty() && !only.count(id)) continue;
    ++ran;
    WallTimer timer;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::printf("%s %2d %-24s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, c.name, o.detail.str().c_str(),
                timer.elapsed_ns() / 1e9);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
