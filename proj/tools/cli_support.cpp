// Copyright 2026 The qlab Authors
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "cli.hpp"

namespace qlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw ValidationError("invalid value '" + value + "' for --" + key);
}

}  // namespace

std::string Params::str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ValidationError("missing required option --" + key);
  return it->second;
}

int64_t Params::integer(const std::string& key) const {
  const std::string v = str(key);
  try {
    size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) bad_value(key, v);
    return x;
  } catch (const std::logic_error&) {
    bad_value(key, v);
  }
}

uint64_t Params::index(const std::string& key) const {
  const int64_t x = integer(key);
  if (x < 0) bad_value(key, str(key));
  return static_cast<uint64_t>(x);
}

double Params::real(const std::string& key) const {
  const std::string v = str(key);
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(x)) bad_value(key, v);
    return x;
  } catch (const std::logic_error&) {
    bad_value(key, v);
  }
}

bool Params::flag(const std::string& key) const {
  if (!has(key)) return false;
  const std::string v = str(key);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  bad_value(key, v);
}

std::vector<std::string> Params::list(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream ss(str(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int64_t> Params::integers(const std::string& key) const {
  std::vector<int64_t> out;
  for (const auto& item : list(key)) {
    Params one;
    one.set(key, item);
    out.push_back(one.integer(key));
  }
  return out;
}

std::vector<double> Params::reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : list(key)) {
    Params one;
    one.set(key, item);
    out.push_back(one.real(key));
  }
  return out;
}

const Command* find_command(const std::string& name) {
  for (const auto& c : commands())
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<TrialOut> run_trials(const Command& c, const Params& p, const RunSpec& spec) {
  if (spec.trials < 1) throw ValidationError("--trials must be positive");
  if (spec.parallel < 1) throw ValidationError("--parallel must be positive");
  if (!spec.seeded) throw ValidationError("--seed is required for " + c.name);
  std::vector<TrialOut> out(static_cast<size_t>(spec.trials));
  const int workers = static_cast<int>(std::min<int64_t>(spec.parallel, spec.trials));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      for (int64_t i = w; i < spec.trials; i += workers)
        out[i] = c.trial(p, derive_seed(spec.seed, static_cast<uint64_t>(i)));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

json cost_stats(std::vector<int64_t> q) {
  std::sort(q.begin(), q.end());
  const size_t n = q.size();
  double total = 0;
  for (int64_t x : q) total += static_cast<double>(x);
  const double median = n % 2 ? static_cast<double>(q[n / 2]) : 0.5 * static_cast<double>(q[n / 2 - 1] + q[n / 2]);
  const size_t p95 = std::min(n - 1, static_cast<size_t>(std::ceil(0.95 * static_cast<double>(n))) - 1);
  return {{"mean", total / static_cast<double>(n)},
          {"median", median},
          {"p95", q[p95]},
          {"min", q.front()},
          {"max", q.back()},
          {"total", total}};
}

}  // namespace

json run_command(const Command& c, const Params& p, const RunSpec& spec) {
  json doc;
  doc["command"] = c.name;
  json config = json::object();
  for (const auto& [k, v] : p.all()) config[k] = v;
  doc["config"] = config;
  if (spec.seeded) doc["seed"] = spec.seed;
  if (c.trial) {
    const auto trials = run_trials(c, p, spec);
    doc["trials"] = spec.trials;
    std::vector<int64_t> q;
    json results = json::array();
    for (const auto& t : trials) {
      q.push_back(t.queries);
      if (spec.trials <= 100) results.push_back(t.result);
    }
    if (spec.trials <= 100) doc["results"] = results;
    doc["cost"] = cost_stats(q);
    if (c.summary) doc["summary"] = c.summary(p, trials);
  } else if (c.single) {
    doc["results"] = c.single(p, spec);
  } else {
    const Distribution d = c.distribution(p);
    json rows = json::array();
    for (size_t i = 0; i < d.index.size(); ++i)
      rows.push_back({{"index", d.index[i]}, {"probability", d.probability[i]}});
    doc["results"] = rows;
  }
  return doc;
}

namespace {

void emit(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map keeps keys sorted
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        emit(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);
        out += buf;
      }
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_json(const json& j) {
  std::string out;
  emit(j, out);
  return out + "\n";
}

std::string distribution_csv(const Distribution& d) {
  std::string out = "index,probability\n";
  for (size_t i = 0; i < d.index.size(); ++i) {
    out += d.index[i] + ",";
    const json& p = d.probability[i];
    if (p.is_string()) {
      out += p.get<std::string>();
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", p.get<double>());
      out += buf;
    }
    out += "\n";
  }
  return out;
}

void check_memory(double bytes) {
  const char* cap = std::getenv("QLAB_MEMORY_CAP_MB");
  if (!cap || !*cap) return;
  char* end = nullptr;
  const double mb = std::strtod(cap, &end);
  if (*end != '\0' || !(mb > 0)) throw ValidationError("QLAB_MEMORY_CAP_MB must be a positive number");
  if (bytes > mb * 1024 * 1024)
    throw ResourceError("state needs " + std::to_string(static_cast<int64_t>(bytes / (1024 * 1024))) +
                        " MB, above QLAB_MEMORY_CAP_MB");
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty()) throw ValidationError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qlab::cli
