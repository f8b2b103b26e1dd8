// Copyright 2026 The tiltfock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tiltfock/cli.hpp"

#include "tiltfock/bridge.hpp"
#include "tiltfock/cache.hpp"
#include "tiltfock/serialize.hpp"
#include "tiltfock/soergel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <thread>

#ifndef TILTFOCK_VERSION
#define TILTFOCK_VERSION "dev"
#endif

namespace tiltfock {

const char* version_string() { return TILTFOCK_VERSION; }

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CanonOptions {
  int l = 0;
  int n = 0;
  std::string format = "table";
  bool expand = false;
};

struct PatternOptions {
  int l = 0;
  std::string weight;
  std::string partition;
  int m = 0;
  std::string route = "singular";
  std::string path;
  std::string format = "table";
  bool at_one = false;
};

struct CrosscheckOptions {
  int l = 0;
  int n_max = 0;
  int jobs = 1;
  bool perturb = false;
  int pairs = 20;
  std::uint64_t seed = 1;
  std::string format = "table";
};

void require_level(int l) {
  if (l < 2) throw UsageError("--l must be at least 2");
}

// Runs compute() unless the cache already holds its output.
std::string cached(bool use_cache, const std::string& params, const std::function<std::string()>& compute) {
  if (!use_cache) return compute();
  const Cache cache(Cache::default_directory(), version_string());
  if (auto hit = cache.get(params)) return *hit;
  std::string payload = compute();
  try {
    cache.put(params, payload);
  } catch (const std::exception& e) {
    std::cerr << "warning: " << e.what() << "\n";
  }
  return payload;
}

std::string canon_output(const CanonOptions& o) {
  if (o.expand) return render_expansions(o.l, o.n);
  const DecompositionMatrix d = decomposition_matrix(o.l, o.n);
  if (o.format == "json") return to_json(d).dump(2) + "\n";
  if (o.format == "latex") return render_latex(d);
  return render_table(d);
}

std::vector<Weight> parse_path(const std::string& text, int level) {
  std::vector<Weight> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(Weight::parse(item, level));
  if (out.empty()) throw UsageError("--path is empty");
  return out;
}

Weight pattern_weight(const PatternOptions& o) {
  if (o.weight.empty() == o.partition.empty()) throw UsageError("give exactly one of --weight and --partition");
  Weight w;
  try {
    if (!o.weight.empty()) {
      w = Weight::parse(o.weight, o.l);
      if (o.m != 0 && o.m != w.rank()) throw UsageError("--m does not match the length of --weight");
    } else {
      const Partition p = Partition::parse(o.partition);
      w = weight_of(p, o.m != 0 ? o.m : p.length() + 1, o.l);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (w.rank() < 2) throw UsageError("weights need at least two coordinates");
  if (!is_dominant(w)) throw UsageError(w.to_string() + " is not dominant");
  return w;
}

std::string pattern_output(const PatternOptions& o, const Weight& w) {
  BlockPattern p;
  if (o.route == "regular") {
    if (!Orbit(w).is_regular()) throw UsageError(w.to_string() + " is not regular; use --route singular");
    if (!o.path.empty()) throw UsageError("--path applies to the singular route only");
    static_cast<Pattern&>(p) = regular_pattern(w);
    p.block = Orbit(w);
  } else {
    std::optional<std::vector<Weight>> path;
    if (!o.path.empty()) path = parse_path(o.path, o.l);
    p = compute_pattern(w, path);
  }
  if (o.format == "json") {
    Json j = to_json(p);
    if (o.at_one) {
      Json ones = Json::array();
      for (const Weight& v : p.support_descending()) ones.push_back(p.terms.at(v).at_one().str());
      j["at_one"] = std::move(ones);
    }
    return j.dump(2) + "\n";
  }
  if (o.format == "latex") return render_latex(p, o.at_one);
  return render_table(p, o.at_one);
}

struct Suite {
  std::string name;
  Report report;
};

// Runs tasks on `jobs` threads; results keep the task order.
std::vector<Report> run_tasks(const std::vector<std::function<Report()>>& tasks, int jobs) {
  std::vector<Report> out(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        out[t] = tasks[t]();
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (!errors[t].empty()) out[t].record(false, {"task " + std::to_string(t), "error", errors[t]});
  return out;
}

std::vector<Suite> crosscheck(const CrosscheckOptions& o) {
  const NodeOrder order = o.perturb ? NodeOrder::LaterRows : NodeOrder::EarlierRows;
  const int l = o.l;
  std::vector<std::pair<std::string, std::function<Report()>>> tasks;
  for (int n = 0; n <= o.n_max; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int i = 0; i < l; ++i) tasks.emplace_back("theorem1", [=] { return check_theorem1(p, i, l, order); });
  for (int n = 0; n <= o.n_max; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int i = 0; i < l; ++i)
        for (int k = 2; k <= 3; ++k) {
          if (static_cast<int>(addable_nodes(p, i, l).size()) < k) continue;
          tasks.emplace_back("theorem2", [=] { return check_theorem2(p, i, k, l, order); });
        }
  for (int n = 0; n <= o.n_max; ++n)
    for (const Partition& p : enumerate_partitions(n))
      tasks.emplace_back("paths", [=] { return check_path_independence(p, l, o.pairs, o.seed + 7919ULL * n); });
  for (int n = 0; n <= o.n_max; ++n) tasks.emplace_back("main", [=] { return check_main(l, n); });

  std::vector<std::function<Report()>> fns;
  for (const auto& t : tasks) fns.push_back(t.second);
  const auto reports = run_tasks(fns, std::max(1, o.jobs));
  std::vector<Suite> suites{{"theorem1", {}}, {"theorem2", {}}, {"paths", {}}, {"main", {}}};
  for (std::size_t t = 0; t < tasks.size(); ++t)
    for (auto& s : suites)
      if (s.name == tasks[t].first) s.report.merge(reports[t]);
  return suites;
}

int cmd_crosscheck(const CrosscheckOptions& o, std::ostream& out) {
  require_level(o.l);
  if (o.n_max < 0) throw UsageError("--n-max must be non-negative");
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  const auto suites = crosscheck(o);
  bool ok = true;
  for (const auto& s : suites) ok = ok && s.report.ok();
  if (o.format == "json") {
    Json j;
    j["l"] = o.l;
    j["n_max"] = o.n_max;
    for (const auto& s : suites) j[s.name] = to_json(s.report);
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "crosscheck l = " << o.l << ", n <= " << o.n_max << (o.perturb ? " (perturbed)" : "") << "\n";
    for (const auto& s : suites) {
      out << (s.report.ok() ? "PASS " : "FAIL ") << s.name << " " << s.report.passed << "/" << s.report.checked << "\n";
      for (std::size_t k = 0; k < s.report.failures.size() && k < 5; ++k) {
        const auto& f = s.report.failures[k];
        out << "  " << f.input << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
      }
      if (s.report.failures.size() > 5) out << "  ... " << s.report.failures.size() - 5 << " more\n";
    }
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decomposition matrices of Hecke algebras at roots of unity and tilting patterns"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Neither read nor write the on-disk cache");

  const std::vector<std::string> formats{"json", "latex", "table"};

  CanonOptions co;
  auto* canon = app.add_subcommand("canon", "Canonical basis / decomposition matrix for partitions of n");
  canon->add_option("--l", co.l, "Quantum characteristic (l >= 2)")->required();
  canon->add_option("--n", co.n, "Size of the partitions")->required()->check(CLI::NonNegativeNumber);
  canon->add_option("--format", co.format, "Output format")->check(CLI::IsMember(formats));
  canon->add_flag("--expand", co.expand, "Print each G(lambda) as a sum of partitions");

  PatternOptions po;
  auto* pattern = app.add_subcommand("pattern", "Tilting pattern of a dominant weight");
  pattern->add_option("--l", po.l, "Level (l >= 2)")->required();
  auto* wopt = pattern->add_option("--weight", po.weight, "Weight, e.g. [4,2,0]");
  auto* popt = pattern->add_option("--partition", po.partition, "Partition, e.g. [3,1]");
  wopt->excludes(popt);
  pattern->add_option("--m", po.m, "Rank for --partition (default: parts + 1)")->check(CLI::PositiveNumber);
  pattern->add_option("--route", po.route, "regular or singular")->check(CLI::IsMember({"regular", "singular"}));
  pattern->add_option("--path", po.path, "Weights separated by ';' from a base weight to the target");
  pattern->add_option("--format", po.format, "Output format")->check(CLI::IsMember(formats));
  pattern->add_flag("--at-one", po.at_one, "Add the values at q = 1");

  CrosscheckOptions xo;
  auto* cross = app.add_subcommand("crosscheck", "Compare the Fock space and the alcove computations");
  cross->add_option("--l", xo.l, "Quantum characteristic (l >= 2)")->required();
  cross->add_option("--n-max", xo.n_max, "Largest partition size")->required();
  cross->add_option("--jobs", xo.jobs, "Worker threads");
  cross->add_flag("--perturb", xo.perturb, "Use the reversed node order (negative control)");
  cross->add_option("--pairs", xo.pairs, "Random paths per target")->check(CLI::PositiveNumber);
  cross->add_option("--seed", xo.seed, "Seed of the random paths");
  cross->add_option("--format", xo.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* cache = app.add_subcommand("cache", "Inspect or clear the on-disk cache");
  cache->require_subcommand(1);
  auto* inspect = cache->add_subcommand("inspect", "List cached entries");
  auto* clear = cache->add_subcommand("clear", "Remove all cached entries");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << version_string() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (canon->parsed()) {
      require_level(co.l);
      std::ostringstream params;
      params << "canon l=" << co.l << " n=" << co.n << " format=" << co.format << " expand=" << co.expand;
      out << cached(!no_cache, params.str(), [&] { return canon_output(co); });
      return kExitOk;
    }
    if (pattern->parsed()) {
      require_level(po.l);
      const Weight w = pattern_weight(po);
      std::ostringstream params;
      params << "pattern l=" << po.l << " weight=" << w.to_string() << " route=" << po.route
             << " format=" << po.format << " at_one=" << po.at_one;
      // explicit paths are for experiments and skip the cache
      const bool use_cache = !no_cache && po.path.empty();
      out << cached(use_cache, params.str(), [&] { return pattern_output(po, w); });
      return kExitOk;
    }
    if (cross->parsed()) return cmd_crosscheck(xo, out);
    if (cache->parsed()) {
      const Cache c(Cache::default_directory(), version_string());
      if (inspect->parsed()) {
        const auto entries = c.entries();
        out << "directory " << c.directory().string() << "\n";
        out << entries.size() << " entries\n";
        for (const auto& e : entries)
          out << e.key << "  " << e.version << "  " << e.created << "  " << e.payload.size() << " bytes  " << e.params
              << "\n";
      } else if (clear->parsed()) {
        out << "removed " << c.clear() << " entries from " << c.directory().string() << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace tiltfock
