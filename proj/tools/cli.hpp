// Copyright 2026 The qlab Authors
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qlab/common.hpp"

namespace qlab::cli {

using nlohmann::json;

// Parameter values as given on the command line or in the config file.
// Typed getters raise ValidationError on malformed values.
class Params {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::map<std::string, std::string>& all() const { return values_; }

  std::string str(const std::string& key) const;
  int64_t integer(const std::string& key) const;
  uint64_t index(const std::string& key) const;  // non-negative integer
  double real(const std::string& key) const;
  bool flag(const std::string& key) const;
  std::vector<int64_t> integers(const std::string& key) const;  // comma separated
  std::vector<double> reals(const std::string& key) const;
  std::vector<std::string> list(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

struct TrialOut {
  json result;
  int64_t queries = 0;
};

struct Distribution {
  std::vector<std::string> index;  // printed verbatim in the CSV
  std::vector<json> probability;   // number or exact fraction string
};

struct OptionSpec {
  std::string name;
  std::string fallback;  // empty: optional with no default
  std::string help;
  bool is_flag = false;
};

struct RunSpec {
  uint64_t seed = 0;
  bool seeded = false;
  int64_t trials = 1;
  int parallel = 1;
};

struct Command {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
  // Stochastic commands run `trial` once per trial with seed
  // derive_seed(seed, trial index); `summary` folds the trials.
  std::function<TrialOut(const Params&, uint64_t seed)> trial;
  std::function<json(const Params&, const std::vector<TrialOut>&)> summary;
  // Deterministic commands (and sweep, which drives other commands).
  std::function<json(const Params&, const RunSpec&)> single;
  // Distribution commands emit CSV by default.
  std::function<Distribution(const Params&)> distribution;
};

const std::vector<Command>& commands();
const Command* find_command(const std::string& name);

// Runs one command on resolved parameters and returns the output document.
json run_command(const Command& c, const Params& p, const RunSpec& spec);
std::vector<TrialOut> run_trials(const Command& c, const Params& p, const RunSpec& spec);

// Sorted keys, 12 significant digits for non-integers.
std::string canonical_json(const json& j);
std::string distribution_csv(const Distribution& d);

// Raises ResourceError when `bytes` exceeds the QLAB_MEMORY_CAP_MB limit.
void check_memory(double bytes);

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> parse_config(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace qlab::cli
