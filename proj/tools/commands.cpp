// Copyright 2026 The qlab Authors
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "cli.hpp"
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

namespace qlab::cli {

namespace {

constexpr double kAmplitudeBytes = 16.0;

json optional_index(const std::optional<uint64_t>& i) { return i ? json(*i) : json(nullptr); }

Backend make_backend(const Params& p, uint64_t seed) {
  Backend b(parse_backend(p.str("backend")), seed);
  if (p.has("nested-reps")) b.nested_reps = static_cast<int>(p.integer("nested-reps"));
  return b;
}

// Oracle from --bits, or --n with the --oracle generator. For grover,
// --marked t places t marks at multiples of floor(n / t).
BooleanOracle make_oracle(const Params& p) {
  if (p.has("bits")) return BooleanOracle::from_bits(parse_bits(p.str("bits")));
  const uint64_t n = p.index("n");
  if (p.has("marked")) {
    const uint64_t t = p.index("marked");
    if (t > n) throw ValidationError("--marked exceeds --n");
    std::vector<uint8_t> bits(n, 0);
    for (uint64_t k = 0; k < t; ++k) bits[k * (n / t)] = 1;
    return BooleanOracle::from_bits(bits);
  }
  return BooleanOracle::from_generator(p.str("oracle"), n);
}

std::vector<uint64_t> scan_ones(const BooleanOracle& f) { return f.marked(); }

double rate(const std::vector<TrialOut>& trials, const char* key) {
  double ok = 0;
  for (const auto& t : trials) ok += t.result.at(key).get<bool>();
  return ok / static_cast<double>(trials.size());
}

json rate_summary(const std::vector<TrialOut>& trials, const char* key) {
  const double r = rate(trials, key);
  return {{std::string(key) + "_rate", r},
          {"sigma", std::sqrt(r * (1 - r) / static_cast<double>(trials.size()))}};
}

std::function<json(const Params&, const std::vector<TrialOut>&)> summarize(const char* key) {
  return [key](const Params&, const std::vector<TrialOut>& t) { return rate_summary(t, key); };
}

Graph load_graph(const Params& p) {
  const std::string text = read_file(p.str("graph"));
  const bool directed = p.flag("directed");
  if (p.str("rep") == "matrix" && text.find_first_not_of("01 \t\r\n") == std::string::npos &&
      text.find('\n') != std::string::npos) {
    // A square 0/1 matrix file.
    std::istringstream in(text);
    std::string first;
    std::getline(in, first);
    std::istringstream fl(first);
    int cols = 0;
    std::string tok;
    while (fl >> tok) ++cols;
    if (cols > 2) return parse_adjacency_matrix(text, directed);
  }
  return parse_edge_list(text, directed, parse_graph_rep(p.str("rep")));
}

std::vector<BitString> load_strings(const Params& p) {
  std::vector<BitString> out;
  if (p.has("file")) {
    std::istringstream in(read_file(p.str("file")));
    std::string line;
    while (std::getline(in, line)) {
      const auto h = line.find('#');
      if (h != std::string::npos) line.resize(h);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_bits(line));
    }
  } else {
    for (const auto& s : p.list("strings")) out.push_back(parse_bits(s));
  }
  if (out.empty()) throw ValidationError("no strings given");
  return out;
}

json path_json(const std::optional<std::vector<int>>& path) { return path ? json(*path) : json(nullptr); }

json dist_json(const std::vector<int64_t>& d) {
  json out = json::array();
  for (int64_t x : d) out.push_back(x == kUnreachable ? json(nullptr) : json(x));
  return out;
}

StateVector parse_state(const std::string& text) {
  std::vector<cplx> a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Params one;
    one.set("amplitude", item);
    a.emplace_back(one.real("amplitude"), 0.0);
  }
  if (a.empty() || !is_pow2(a.size())) throw ValidationError("state needs 2^q real amplitudes");
  double nrm = 0;
  for (auto x : a) nrm += std::norm(x);
  if (nrm <= 0) throw ValidationError("state must be nonzero");
  for (auto& x : a) x /= std::sqrt(nrm);
  return StateVector(a);
}

// H on every qubit of a q-qubit register.
DenseUnitary hadamard_layer(int q) {
  const size_t d = size_t{1} << q;
  std::vector<cplx> m(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) m[r * d + c] = std::popcount(r & c) % 2 ? -s : s;
  return DenseUnitary(d, m);
}

std::string fraction(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

const OptionSpec kBackend{"backend", "analytic", "statevector | analytic | analytic-ideal"};

std::vector<Command> build() {
  std::vector<Command> cs;

  cs.push_back({"grover", "Grover search with known or unknown marked count (state vector)",
                {{"n", "", "search space size"},
                 {"marked", "", "number of marked indices, placed at multiples of n/t"},
                 {"oracle", "single-marked:0", "oracle generator when --marked and --bits are absent"},
                 {"bits", "", "oracle truth table as a 0/1 string"},
                 {"mode", "known", "known | unknown"}},
                [](const Params& p, uint64_t seed) {
                  BooleanOracle f = make_oracle(p);
                  check_memory(kAmplitudeBytes * static_cast<double>(f.size()));
                  Rng rng(seed);
                  const std::string mode = p.str("mode");
                  SearchResult r;
                  if (mode == "known") {
                    r = grover_known_t(f, f.size(), f.marked().size(), rng);
                  } else if (mode == "unknown") {
                    r = grover_unknown_t(f, f.size(), rng);
                  } else {
                    throw ValidationError("--mode must be known or unknown");
                  }
                  return TrialOut{{{"index", optional_index(r.index)}, {"success", r.index && f.peek(*r.index)}},
                                  r.cost.queries};
                },
                [](const Params& p, const std::vector<TrialOut>& t) {
                  json s = rate_summary(t, "success");
                  BooleanOracle f = make_oracle(p);
                  const uint64_t marks = f.marked().size();
                  if (p.str("mode") == "known" && marks > 0) {
                    const GroverPlan plan = GroverPlan::make(f.size(), marks);
                    s["analytic_success"] = analytic_success(f.size(), marks, plan.L);
                    s["iterations"] = plan.L;
                  }
                  return s;
                }});

  cs.push_back({"aamp", "Amplitude amplification of a Hadamard layer with good set {i < good}",
                {{"qubits", "3", "register size"},
                 {"good", "1", "good indices are 0..good-1"},
                 {"p", "", "success probability of A|0>; read off the state when absent"}},
                [](const Params& p, uint64_t seed) {
                  const int q = static_cast<int>(p.integer("qubits"));
                  if (q < 1 || q > 12) throw ValidationError("--qubits must lie in [1, 12]");
                  check_memory(kAmplitudeBytes * std::ldexp(1.0, 2 * q));
                  const uint64_t good = p.index("good");
                  Rng rng(seed);
                  std::optional<double> prob;
                  if (p.has("p")) prob = p.real("p");
                  const auto r = amplitude_amplify(hadamard_layer(q), [good](uint64_t i) { return i < good; },
                                                   prob, rng);
                  return TrialOut{{{"index", optional_index(r.index)},
                                   {"success", r.index.has_value()},
                                   {"p", r.p},
                                   {"iterations", r.L}},
                                  r.cost.queries};
                },
                summarize("success")});

  cs.push_back({"minsearch", "Durr-Hoyer minimum search",
                {{"values", "", "comma-separated integers"},
                 {"n", "", "size of a random permutation when --values is absent"},
                 {"boost", "1", "independent runs, best kept"},
                 {"max", "0", "search the maximum instead"},
                 kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  std::vector<int64_t> a;
                  if (p.has("values")) {
                    a = p.integers("values");
                  } else {
                    a.resize(p.index("n"));
                    std::iota(a.begin(), a.end(), 1);
                    std::shuffle(a.begin(), a.end(), b.rng);
                  }
                  if (a.empty()) throw ValidationError("no values");
                  const bool mx = p.flag("max");
                  const int boost = static_cast<int>(p.integer("boost"));
                  MinSearchResult r;
                  if (mx) {
                    r = maximum_search(a, b);
                  } else {
                    r = minimum_search_boosted(a, boost, b);
                  }
                  const int64_t best = mx ? *std::max_element(a.begin(), a.end()) : *std::min_element(a.begin(), a.end());
                  return TrialOut{{{"index", r.index}, {"value", a[r.index]}, {"correct", a[r.index] == best}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"firstone", "Smallest index with f = 1",
                {{"bits", "", "oracle truth table"},
                 {"n", "", "domain size with --oracle"},
                 {"oracle", "none", "oracle generator"},
                 {"variant", "via-minimum", "via-minimum | binary | bounded"},
                 kBackend},
                [](const Params& p, uint64_t seed) {
                  BooleanOracle f = make_oracle(p);
                  Backend b = make_backend(p, seed);
                  const std::string v = p.str("variant");
                  IndexResult r = v == "bounded" ? bounded_first_one(f, b)
                                                 : first_one_search(f, 0, f.size() - 1, parse_first_one_variant(v), b);
                  const auto ones = scan_ones(f);
                  const std::optional<uint64_t> want = ones.empty() ? std::nullopt : std::optional<uint64_t>(ones[0]);
                  return TrialOut{{{"index", optional_index(r.index)}, {"correct", r.index == want}}, r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"allones", "All indices with f = 1",
                {{"bits", "", "oracle truth table"},
                 {"n", "", "domain size with --oracle"},
                 {"oracle", "none", "oracle generator"},
                 kBackend},
                [](const Params& p, uint64_t seed) {
                  BooleanOracle f = make_oracle(p);
                  Backend b = make_backend(p, seed);
                  auto r = all_ones(f, 0, f.size() - 1, b);
                  std::sort(r.indices.begin(), r.indices.end());
                  return TrialOut{{{"indices", r.indices}, {"correct", r.indices == scan_ones(f)}}, r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"streq", "String equality",
                {{"s", "", "bit string"}, {"t", "", "bit string"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const BitString s = parse_bits(p.str("s")), t = parse_bits(p.str("t"));
                  const auto r = strings_equal(s, t, b);
                  return TrialOut{{{"equal", r.value}, {"witness", optional_index(r.witness)}, {"correct", r.value == (s == t)}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"palindrome", "Palindrome check",
                {{"s", "", "bit string"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const BitString s = parse_bits(p.str("s"));
                  const auto r = palindrome_check(s, b);
                  const bool want = std::equal(s.begin(), s.end(), s.rbegin());
                  return TrialOut{{{"palindrome", r.value}, {"witness", optional_index(r.witness)}, {"correct", r.value == want}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"lcp", "Longest common prefix",
                {{"s", "", "bit string"}, {"t", "", "bit string"}, {"reps", "1", "first-mismatch repetitions"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const BitString s = parse_bits(p.str("s")), t = parse_bits(p.str("t"));
                  const auto r = lcp(s, t, b, static_cast<int>(p.integer("reps")));
                  uint64_t want = 0;
                  while (want < s.size() && want < t.size() && s[want] == t[want]) ++want;
                  return TrialOut{{{"length", r.length}, {"correct", r.length == want}}, r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"strcmp", "Lexicographic comparison (-1, 0, 1)",
                {{"s", "", "bit string"}, {"t", "", "bit string"}, {"reps", "1", "first-mismatch repetitions"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const BitString s = parse_bits(p.str("s")), t = parse_bits(p.str("t"));
                  const auto r = compare_lex(s, t, b, static_cast<int>(p.integer("reps")));
                  const int want = s < t ? -1 : (t < s ? 1 : 0);
                  return TrialOut{{{"order", r.order}, {"correct", r.order == want}}, r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"strsort", "Sort strings with a balanced tree and quantum comparisons",
                {{"strings", "", "comma-separated bit strings"},
                 {"file", "", "one bit string per line"},
                 {"reps", "", "comparator repetitions (default 3 ceil(log2 n))"},
                 kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const auto strs = load_strings(p);
                  std::optional<int> reps;
                  if (p.has("reps")) reps = static_cast<int>(p.integer("reps"));
                  const auto r = string_sort(strs, b, reps);
                  std::vector<uint64_t> want(strs.size());
                  std::iota(want.begin(), want.end(), 0);
                  std::stable_sort(want.begin(), want.end(), [&](uint64_t a, uint64_t c) { return strs[a] < strs[c]; });
                  return TrialOut{{{"order", r.order}, {"comparator_errors", r.comparator_errors}, {"correct", r.order == want}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"mostfreq", "Most frequent string",
                {{"strings", "", "comma-separated bit strings"},
                 {"file", "", "one bit string per line"},
                 {"reps", "", "comparator repetitions"},
                 kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const auto strs = load_strings(p);
                  std::optional<int> reps;
                  if (p.has("reps")) reps = static_cast<int>(p.integer("reps"));
                  const auto r = most_frequent(strs, b, reps);
                  uint64_t best = 0;
                  for (const auto& s : strs) best = std::max<uint64_t>(best, std::count(strs.begin(), strs.end(), s));
                  const bool ok = static_cast<uint64_t>(std::count(strs.begin(), strs.end(), strs[r.index])) == best;
                  return TrialOut{{{"index", r.index}, {"string", format_bits(strs[r.index])}, {"frequency", r.frequency},
                                   {"correct", ok}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"dyck", "Dyck language membership with depth at most k",
                {{"x", "", "parentheses or 0/1 string (0 opens)"}, {"k", "", "depth bound"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const BitString x = parse_dyck(p.str("x"));
                  const int k = static_cast<int>(p.integer("k"));
                  const auto r = dyck_decide(x, k, b);
                  json w = nullptr;
                  if (r.witness) w = {{"i", r.witness->i}, {"j", r.witness->j}, {"sign", r.witness->sign}};
                  return TrialOut{{{"member", r.member}, {"witness", w}, {"correct", r.member == dyck_classical(x, k)}},
                                  r.cost.queries};
                },
                summarize("correct")});

  const OptionSpec graph{"graph", "", "edge-list file (u v [w] lines) or 0/1 matrix with --rep matrix"};
  const OptionSpec directed{"directed", "0", "treat edges as directed", true};
  const OptionSpec rep{"rep", "list", "list | matrix"};

  cs.push_back({"dfs", "Depth-first search preorder",
                {graph, directed, rep, {"start", "0", "start vertex"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const Graph g = load_graph(p);
                  const int s = static_cast<int>(p.integer("start"));
                  const auto r = qdfs(g, s, b);
                  return TrialOut{{{"order", r.order}, {"matches_classical", r.order == dfs_classical(g, s).order}},
                                  r.cost.queries};
                },
                summarize("matches_classical")});

  cs.push_back({"bfs", "Breadth-first distances (null when unreachable)",
                {graph, directed, rep, {"start", "0", "start vertex"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const Graph g = load_graph(p);
                  const int s = static_cast<int>(p.integer("start"));
                  const auto r = qbfs(g, s, b);
                  return TrialOut{{{"dist", dist_json(r.dist)}, {"correct", r.dist == bfs_classical(g, s).dist}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"topsort", "Topological order of a DAG",
                {graph, {"directed", "1", "edges are directed", true}, rep, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const Graph g = load_graph(p);
                  const auto r = qtopsort(g, b);
                  std::vector<int> pos(g.n());
                  for (size_t i = 0; i < r.order.size(); ++i) pos[r.order[i]] = static_cast<int>(i);
                  bool ok = static_cast<int>(r.order.size()) == g.n();
                  for (int v = 0; v < g.n() && ok; ++v)
                    for (int x : g.neighbors(v)) ok = ok && pos[v] < pos[x];
                  return TrialOut{{{"order", r.order}, {"valid", ok}}, r.cost.queries};
                },
                summarize("valid")});

  cs.push_back({"daggame", "Winning positions of the stone game on a DAG",
                {graph, {"directed", "1", "edges are directed", true}, rep, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const Graph g = load_graph(p);
                  const auto r = dag_game_solve(g, b);
                  return TrialOut{{{"win", r.win}}, r.cost.queries};
                },
                nullptr});

  cs.push_back({"daglongest", "Longest path (in edges) from a source in a DAG",
                {graph, {"directed", "1", "edges are directed", true}, rep, {"source", "0", "source vertex"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const Graph g = load_graph(p);
                  const auto r = dag_longest_path(g, static_cast<int>(p.integer("source")), b);
                  return TrialOut{{{"length", r.length}}, r.cost.queries};
                },
                nullptr});

  cs.push_back({"hampath", "Hamiltonian path",
                {graph, directed, rep, {"variant", "dp", "brute | dp | quantum-bf | quantum-dp"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const Graph g = load_graph(p);
                  const auto r = hamiltonian_path(g, parse_ham_variant(p.str("variant")), b);
                  return TrialOut{{{"path", path_json(r.path)}, {"exists", r.path.has_value()}}, r.cost.queries};
                },
                summarize("exists")});

  cs.push_back({"tsp", "Minimum-weight Hamiltonian path",
                {graph, directed, rep, {"variant", "dp", "dp | quantum-dp"}, kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const Graph g = load_graph(p);
                  const auto r = tsp(g, parse_tsp_variant(p.str("variant")), b);
                  return TrialOut{{{"path", path_json(r.path)}, {"weight", r.path ? json(r.weight) : json(nullptr)}},
                                  r.cost.queries};
                },
                nullptr});

  cs.push_back({"subsetsum", "Subset sum",
                {{"values", "", "comma-separated positive integers"},
                 {"k", "", "target"},
                 {"variant", "mitm-quantum", "brute | grover | mitm-classical | mitm-quantum"},
                 {"set", "ordered", "ordered | hashed"},
                 kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  const SubsetSumInstance inst{p.integers("values"), p.integer("k")};
                  const auto r = subset_sum(inst, parse_subset_sum_variant(p.str("variant")), b, parse_set_kind(p.str("set")));
                  return TrialOut{{{"subset", path_json(r.subset)}, {"found", r.subset.has_value()}}, r.cost.queries};
                },
                summarize("found")});

  cs.push_back({"collision", "1-to-1 versus 2-to-1 decision",
                {{"values", "", "comma-separated integers"},
                 {"n", "", "instance size when --values is absent"},
                 {"two-to-one", "0", "random instance is 2-to-1", true},
                 {"variant", "mitm", "simple | mitm"},
                 {"set", "ordered", "ordered | hashed"},
                 kBackend},
                [](const Params& p, uint64_t seed) {
                  Backend b = make_backend(p, seed);
                  std::vector<int64_t> a;
                  bool want;
                  if (p.has("values")) {
                    a = p.integers("values");
                    std::vector<int64_t> s = a;
                    std::sort(s.begin(), s.end());
                    want = std::adjacent_find(s.begin(), s.end()) == s.end();
                  } else {
                    want = !p.flag("two-to-one");
                    a = make_collision_instance(p.index("n"), !want, b.rng);
                  }
                  const auto r = collision_decide(a, parse_collision_variant(p.str("variant")), b, parse_set_kind(p.str("set")));
                  return TrialOut{{{"label", r.label()}, {"correct", r.one_to_one == want}}, r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"fpclassic", "Streaming equality by a random prime fingerprint",
                {{"stream", "", "file with u, a single 2, then v"},
                 {"u", "", "bit string (with --v)"},
                 {"v", "", "bit string"},
                 {"eps", "0.1", "error bound"}},
                [](const Params& p, uint64_t seed) {
                  const FingerprintStream s = p.has("stream")
                                                  ? parse_fingerprint_stream(read_file(p.str("stream")))
                                                  : FingerprintStream{parse_bits(p.str("u")), parse_bits(p.str("v"))};
                  Rng rng(seed);
                  const auto r = classical_fingerprint_stream(s, p.real("eps"), rng);
                  return TrialOut{{{"equal", r.equal},
                                   {"prime", r.prime},
                                   {"memory_bits", r.memory_bits},
                                   {"correct", r.equal == (s.u == s.v)}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"fpquantum", "Quantum fingerprint with t random coefficients",
                {{"u", "", "bit string"},
                 {"v", "", "bit string"},
                 {"eps", "0.1", "error bound used when --t is absent"},
                 {"t", "", "coefficient count (power of two)"},
                 {"q", "", "modulus (default: smallest prime above 2^|u|)"}},
                [](const Params& p, uint64_t seed) {
                  const BitString u = parse_bits(p.str("u")), v = parse_bits(p.str("v"));
                  Rng rng(seed);
                  const uint64_t t = p.has("t") ? p.index("t") : fingerprint_coefficient_count(u.size(), p.real("eps"));
                  check_memory(kAmplitudeBytes * 2.0 * static_cast<double>(t));
                  const uint64_t q = p.has("q") ? p.index("q") : fingerprint_modulus(static_cast<int>(u.size()));
                  const auto params = random_fingerprint_params(q, t, rng);
                  const auto r = quantum_fingerprint_multi(u, v, params, rng);
                  return TrialOut{{{"equal", r.equal},
                                   {"outcome", r.outcome},
                                   {"p_error", r.p_error},
                                   {"t", t},
                                   {"correct", r.equal == (u == v)}},
                                  0};
                },
                summarize("correct")});

  cs.push_back({"swaptest", "SWAP test on two states given by real amplitudes",
                {{"a", "", "comma-separated amplitudes (normalized here)"},
                 {"b", "", "comma-separated amplitudes"},
                 {"reps", "1", "repetitions; equal iff no outcome 1"}},
                [](const Params& p, uint64_t seed) {
                  const StateVector a = parse_state(p.str("a")), b = parse_state(p.str("b"));
                  check_memory(kAmplitudeBytes * 2.0 * static_cast<double>(a.size() * b.size()));
                  Rng rng(seed);
                  const auto r = swap_test(a, b, static_cast<int>(p.integer("reps")), rng);
                  return TrialOut{{{"equal", r.equal}, {"observed_pr0", r.observed_pr0}, {"exact_pr0", r.exact_pr0}}, 0};
                },
                summarize("equal")});

  Command walk1d{"walk1d", "Walk on the integer line: coined quantum walk, or the classical walk with --classical",
                 {{"steps", "", "number of steps"},
                  {"coin", "H", "coin gate: H, X, Z, S, T, I, Rx, Ry, Rz"},
                  {"angle", "", "rotation angle for Rx, Ry, Rz"},
                  {"direction", "0", "initial direction: 0 left, 1 right"},
                  {"classical", "0", "classical random walk", true},
                  {"q", "0.5", "classical probability of a right step"},
                  {"exact", "0", "exact rational probabilities (classical only)", true}}};
  walk1d.distribution = [](const Params& p) {
    const int steps = static_cast<int>(p.integer("steps"));
    Distribution d;
    if (p.flag("classical")) {
      if (p.flag("exact")) {
        Rational q;
        if (p.str("q").find('/') != std::string::npos) {
          try {
            q = Rational(p.str("q"));
          } catch (const std::exception&) {
            throw ValidationError("--q must be a fraction such as 1/2 in exact mode");
          }
        } else {
          q = Rational(static_cast<int64_t>(std::llround(p.real("q") * 1e6)), 1000000);
        }
        const auto r = random_walk_line_exact(steps, q);
        for (size_t i = 0; i < r.prob.size(); ++i) {
          d.index.push_back(std::to_string(r.first + static_cast<int64_t>(i)));
          d.probability.push_back(fraction(r.prob[i]));
        }
        return d;
      }
      const auto r = random_walk_line(steps, p.real("q"));
      for (size_t i = 0; i < r.prob.size(); ++i) {
        d.index.push_back(std::to_string(r.first + static_cast<int64_t>(i)));
        d.probability.push_back(r.prob[i]);
      }
      return d;
    }
    check_memory(kAmplitudeBytes * 2.0 * (2.0 * steps + 3));
    const std::string coin = p.str("coin");
    const Gate1Q g = p.has("angle") ? standard_gate(coin, p.real("angle")) : standard_gate(coin);
    const auto r = coined_walk_1d(steps, g, {0, static_cast<int>(p.integer("direction"))});
    for (size_t i = 0; i < r.prob.size(); ++i) {
      d.index.push_back(std::to_string(r.first + static_cast<int64_t>(i)));
      d.probability.push_back(r.prob[i]);
    }
    return d;
  };
  cs.push_back(walk1d);

  Command circle{"walkcircle", "Classical symmetric walk on a cycle from vertex 0",
                 {{"size", "", "cycle length"}, {"steps", "", "number of steps"}, {"exact", "0", "exact rational mode", true}}};
  circle.distribution = [](const Params& p) {
    const int size = static_cast<int>(p.integer("size")), steps = static_cast<int>(p.integer("steps"));
    Distribution d;
    if (p.flag("exact")) {
      const auto r = random_walk_circle_exact(size, steps);
      for (size_t i = 0; i < r.size(); ++i) {
        d.index.push_back(std::to_string(i));
        d.probability.push_back(fraction(r[i]));
      }
    } else {
      const auto r = random_walk_circle(size, steps);
      for (size_t i = 0; i < r.size(); ++i) {
        d.index.push_back(std::to_string(i));
        d.probability.push_back(r[i]);
      }
    }
    return d;
  };
  cs.push_back(circle);

  cs.push_back({"walkgrid", "Coined walk search on the n x n torus",
                {{"n", "", "torus side"},
                 {"marked", "", "marked vertex as x,y (none when absent)"},
                 {"steps", "", "step limit (default ceil(8 n log2 n))"}},
                [](const Params& p, uint64_t seed) {
                  const int n = static_cast<int>(p.integer("n"));
                  check_memory(kAmplitudeBytes * 8.0 * n * n);
                  std::optional<std::pair<int, int>> marked;
                  if (p.has("marked")) {
                    const auto xy = p.integers("marked");
                    if (xy.size() != 2) throw ValidationError("--marked must be x,y");
                    marked = std::make_pair(static_cast<int>(xy[0]), static_cast<int>(xy[1]));
                  }
                  const int64_t steps = p.has("steps") ? p.integer("steps") : grid_step_budget(n);
                  Rng rng(seed);
                  const auto r = grid_walk_search(n, marked, steps, rng);
                  const bool hit = marked && r.sampled == *marked;
                  return TrialOut{{{"best_step", r.best_step},
                                   {"peak", r.peak},
                                   {"factor", r.factor},
                                   {"sampled", {r.sampled.first, r.sampled.second}},
                                   {"hit", hit}},
                                  r.cost.queries};
                },
                summarize("hit")});

  cs.push_back({"nand", "Balanced NAND tree evaluation by a coined walk",
                {{"x", "", "leaf values, length a power of two up to 64"},
                 {"runs", "25", "measurements for the majority vote (odd)"},
                 {"steps", "0", "walk steps (0 selects the calibrated count)"}},
                [](const Params& p, uint64_t seed) {
                  const BitString x = parse_bits(p.str("x"));
                  Rng rng(seed);
                  const auto r = nand_evaluate(x, rng, static_cast<int>(p.integer("runs")), p.integer("steps"));
                  return TrialOut{{{"value", r.value},
                                   {"ones", r.ones},
                                   {"runs", r.runs},
                                   {"steps", r.steps},
                                   {"p_one", r.p_one},
                                   {"correct", r.value == nand_classical(x)}},
                                  r.cost.queries};
                },
                summarize("correct")});

  cs.push_back({"johnson", "Element distinctness by a walk on the Johnson graph J(n, r)",
                {{"values", "", "comma-separated integers"},
                 {"n", "", "size of a random instance with one colliding pair"},
                 {"r", "", "subset size"}},
                [](const Params& p, uint64_t seed) {
                  Rng rng(seed);
                  std::vector<int64_t> x;
                  if (p.has("values")) {
                    x = p.integers("values");
                  } else {
                    const uint64_t n = p.index("n");
                    if (n < 2) throw ValidationError("--n must be at least 2");
                    x.resize(n);
                    std::iota(x.begin(), x.end(), 0);
                    const uint64_t i = uniform_index(rng, n), j = (i + 1 + uniform_index(rng, n - 1)) % n;
                    x[j] = x[i];
                  }
                  const auto r = johnson_walk_distinctness(x, static_cast<int>(p.integer("r")), rng);
                  json pair = nullptr;
                  if (r.pair) pair = {r.pair->first, r.pair->second};
                  return TrialOut{{{"pair", pair},
                                   {"found", r.pair.has_value()},
                                   {"moves", r.moves},
                                   {"move_budget", r.move_budget},
                                   {"eps", r.eps},
                                   {"delta", r.delta},
                                   {"numeric_delta", r.numeric_delta ? json(*r.numeric_delta) : json(nullptr)}},
                                  r.cost.queries};
                },
                summarize("found")});

  Command mnrs{"mnrscost", "Search-via-walk cost of the three solutions",
               {{"S", "", "setup cost"},
                {"U", "", "update cost"},
                {"C", "", "checking cost"},
                {"eps", "", "marked fraction"},
                {"delta", "", "spectral gap"},
                {"n", "", "element distinctness size (sets S, U, C, eps, delta)"},
                {"r", "", "subset size for --n (default n^(2/3))"}}};
  mnrs.single = [](const Params& p, const RunSpec&) {
    MnrsCosts c;
    if (p.has("n")) {
      const double n = p.real("n");
      c = distinctness_costs(n, p.has("r") ? p.real("r") : std::cbrt(n * n));
    } else {
      c = {p.real("S"), p.real("U"), p.real("C"), p.real("eps"), p.real("delta")};
    }
    json out = {{"S", c.S}, {"U", c.U}, {"C", c.C}, {"eps", c.eps}, {"delta", c.delta}};
    for (int s = 1; s <= 3; ++s) {
      out["solution" + std::to_string(s)] = {{"classical", mnrs_cost(c, s, MnrsRegime::classical)},
                                             {"quantum", mnrs_cost(c, s, MnrsRegime::quantum)}};
    }
    return out;
  };
  cs.push_back(mnrs);

  Command hr{"hrcheck", "Hitting time versus 2 W R on an electric network",
             {{"graph", "", "edge-list file (u v [w]), vertices from 0"},
              {"marked", "", "comma-separated marked vertices"},
              {"sigma", "", "start distribution (default stationary)"}}};
  hr.single = [](const Params& p, const RunSpec&) {
    ElectricNetwork net = parse_network(read_file(p.str("graph")));
    for (int64_t m : p.integers("marked")) net.marked.push_back(static_cast<int>(m));
    if (p.has("sigma")) net.sigma = p.reals("sigma");
    const auto r = hitting_resistance_check(net);
    return json{{"H", r.hitting}, {"R", r.resistance}, {"W", r.total_weight}, {"twoWR", r.two_wr}, {"gap", r.relative_gap}};
  };
  cs.push_back(hr);

  cs.push_back({"backtrack", "Marked-vertex detection in a tree by phase estimation",
                {{"tree", "", "file of 'parent child' lines and 'm v' marks, root 0"},
                 {"nodes", "", "random tree size when --tree is absent (<= 31)"},
                 {"p-marked", "0.5", "probability that a random tree has marked leaves"},
                 {"bits", "0", "precision bits (0 selects ceil(log2(4 sqrt T)) + 2)"},
                 {"C1", "4", "root weight constant"}},
                [](const Params& p, uint64_t seed) {
                  Rng rng(seed);
                  const BacktrackTree t = p.has("tree")
                                              ? parse_backtrack_tree(read_file(p.str("tree")))
                                              : random_backtrack_tree(static_cast<int>(p.integer("nodes")), p.real("p-marked"), rng);
                  BacktrackOptions opt;
                  opt.precision_bits = static_cast<int>(p.integer("bits"));
                  opt.C1 = p.real("C1");
                  check_memory(kAmplitudeBytes * std::ldexp(32.0, std::max(opt.precision_bits, 8)));
                  const auto r = backtracking_detect(t, rng, opt);
                  const bool any = std::any_of(t.marked.begin(), t.marked.end(), [](char m) { return m != 0; });
                  return TrialOut{{{"exists", r.exists},
                                   {"estimate", r.estimate},
                                   {"bits", r.bits},
                                   {"p_zero", r.p_zero},
                                   {"nodes", t.parent.size()},
                                   {"correct", r.exists == any}},
                                  r.cost.queries};
                },
                summarize("correct")});

  Command sweep{"sweep", "Run a stochastic command over values of one numeric option",
                {{"command", "", "command to sweep"},
                 {"axis", "", "option name to vary"},
                 {"values", "", "comma-separated values"},
                 {"set", "", "fixed options as key=value;key=value"},
                 {"loglog", "0", "fit the exponent of mean queries against the axis", true}}};
  sweep.single = [](const Params& p, const RunSpec& spec) {
    const Command* inner = find_command(p.str("command"));
    if (!inner || !inner->trial) throw ValidationError("sweep needs a stochastic command");
    Params base;
    if (p.has("set")) {
      std::stringstream ss(p.str("set"));
      std::string item;
      while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("--set entries must be key=value");
        base.set(item.substr(0, eq), item.substr(eq + 1));
      }
    }
    for (const auto& o : inner->options)
      if (!o.fallback.empty() && !base.has(o.name)) base.set(o.name, o.fallback);
    const std::string axis = p.str("axis");
    json rows = json::array();
    std::vector<double> xs, ys;
    for (double v : p.reals("values")) {
      Params point = base;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      point.set(axis, buf);
      const auto trials = run_trials(*inner, point, spec);
      std::vector<int64_t> q;
      double total = 0;
      for (const auto& t : trials) {
        q.push_back(t.queries);
        total += static_cast<double>(t.queries);
      }
      std::sort(q.begin(), q.end());
      const double mean = total / static_cast<double>(q.size());
      const size_t p95 = std::min(q.size() - 1, static_cast<size_t>(std::ceil(0.95 * static_cast<double>(q.size()))) - 1);
      rows.push_back({{"value", v}, {"mean_queries", mean}, {"median_queries", q[q.size() / 2]}, {"p95_queries", q[p95]}});
      xs.push_back(v);
      ys.push_back(mean);
    }
    json out = {{"rows", rows}};
    if (p.flag("loglog")) {
      if (xs.size() < 2) throw ValidationError("an exponent fit needs two values");
      double mx = 0, my = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0 || ys[i] <= 0) throw ValidationError("log-log fit needs positive values");
        mx += std::log(xs[i]) / static_cast<double>(xs.size());
        my += std::log(ys[i]) / static_cast<double>(xs.size());
      }
      double sxy = 0, sxx = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
        sxx += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
      }
      out["exponent"] = sxy / sxx;
    }
    return out;
  };
  cs.push_back(sweep);
  return cs;
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> cs = build();
  return cs;
}

}  // namespace qlab::cli
