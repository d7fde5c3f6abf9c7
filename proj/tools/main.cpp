// Copyright 2026 The qlab Authors
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

using namespace qlab;
using namespace qlab::cli;

struct Common {
  std::string seed, trials, parallel, output, format, config;
};

std::string render(const Command& c, const json& doc, const std::string& format, const Params& p) {
  std::string fmt = format;
  if (fmt.empty()) fmt = c.distribution ? "csv" : "json";
  if (fmt == "json") return canonical_json(doc);
  if (fmt != "csv") throw ValidationError("--format must be json or csv");
  if (!c.distribution) throw ValidationError("csv output is only available for distribution commands");
  return distribution_csv(c.distribution(p));
}

int run(int argc, char** argv) {
  CLI::App app{"qlab: quantum algorithm emulation and query accounting"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "random seed (required for stochastic commands)");
  app.add_option("--trials", common.trials, "independent trials (default 1)");
  app.add_option("--parallel", common.parallel, "worker threads (default 1)");
  app.add_option("--output", common.output, "write the result to this file");
  app.add_option("--format", common.format, "json | csv");
  app.add_option("--config", common.config, "file of key = value lines, overridden by the command line");

  std::map<std::string, std::map<std::string, std::string>> given;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    auto& store = given[c.name];
    for (const auto& o : c.options) {
      std::string help = o.help;
      if (!o.fallback.empty() && !o.is_flag) help += " [" + o.fallback + "]";
      if (o.is_flag) {
        sub->add_flag_callback("--" + o.name, [&store, name = o.name] { store[name] = "1"; }, help);
      } else {
        sub->add_option_function<std::string>(
            "--" + o.name, [&store, name = o.name](const std::string& v) { store[name] = v; }, help);
      }
    }
    subs[c.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands())
    if (subs[c.name]->parsed()) cmd = &c;

  std::set<std::string> known;
  for (const auto& o : cmd->options) known.insert(o.name);

  std::map<std::string, std::string> merged;
  if (!common.config.empty()) {
    for (const auto& [k, v] : parse_config(read_file(common.config))) {
      std::string* slot = k == "seed"       ? &common.seed
                          : k == "trials"   ? &common.trials
                          : k == "parallel" ? &common.parallel
                          : k == "format"   ? &common.format
                          : k == "output"   ? &common.output
                                            : nullptr;
      if (slot) {
        if (slot->empty()) *slot = v;
      } else if (known.count(k)) {
        merged[k] = v;
      } else {
        throw ValidationError("config key '" + k + "' is not an option of " + cmd->name);
      }
    }
  }
  for (const auto& [k, v] : given[cmd->name]) merged[k] = v;

  Params p;
  for (const auto& o : cmd->options) {
    auto it = merged.find(o.name);
    if (it != merged.end()) {
      p.set(o.name, it->second);
    } else if (!o.fallback.empty()) {
      p.set(o.name, o.fallback);
    }
  }

  Params numbers;
  numbers.set("seed", common.seed);
  numbers.set("trials", common.trials.empty() ? "1" : common.trials);
  numbers.set("parallel", common.parallel.empty() ? "1" : common.parallel);
  RunSpec spec;
  if (!common.seed.empty()) {
    spec.seed = numbers.index("seed");
    spec.seeded = true;
  }
  spec.trials = numbers.integer("trials");
  spec.parallel = static_cast<int>(numbers.integer("parallel"));
  if (spec.trials < 1) throw ValidationError("--trials must be positive");
  if (spec.parallel < 1) throw ValidationError("--parallel must be positive");

  const json doc = run_command(*cmd, p, spec);
  const std::string text = render(*cmd, doc, common.format, p);
  if (common.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(common.output, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + common.output);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qlab::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
