// Copyright 2026 The Medalloc Authors
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

#include "medalloc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "medalloc/allocation.hpp"
#include "medalloc/io.hpp"
#include "medalloc/kvip.hpp"
#include "medalloc/mediator.hpp"
#include "medalloc/optimal_set.hpp"

namespace medalloc {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("file " + path + ": " + e.what());
  }
}

// {0..7} for prefixes, {0..3,5,8} in general.
std::string format_set(const OptimalSet& set) {
  std::ostringstream os;
  os << '{';
  std::size_t i = 0;
  bool first = true;
  while (i < set.members.size()) {
    std::size_t j = i;
    while (j + 1 < set.members.size() &&
           set.members[j + 1] == set.members[j] + 1) {
      ++j;
    }
    if (!first) os << ',';
    first = false;
    if (j > i) {
      os << set.members[i] << ".." << set.members[j];
    } else {
      os << set.members[i];
    }
    i = j + 1;
  }
  os << '}';
  return os.str();
}

int cmd_nstar(const std::string& path, std::optional<int> cap_override,
              std::ostream& out) {
  const json doc = load_json(path);
  if (!doc.contains("job") || !doc.contains("coi")) {
    throw std::invalid_argument("file " + path +
                                ": requires \"job\" and \"coi\" fields");
  }
  const Job job = job_from_json(doc.at("job"));
  const CoIModel coi = coi_from_json(doc.at("coi"));
  int n_cap = 0;
  if (cap_override) {
    n_cap = *cap_override;
  } else if (doc.contains("n_cap") && doc.at("n_cap").is_number_integer()) {
    n_cap = doc.at("n_cap").get<int>();
  } else {
    throw std::invalid_argument("file " + path +
                                ": requires \"n_cap\" (or pass --cap)");
  }
  out << format_set(optimal_set(job, coi, n_cap)) << '\n';
  return 0;
}

KvipInstance random_kvip(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> item_count(1, 4);
  std::uniform_int_distribution<int> version_count(1, 3);
  std::uniform_int_distribution<int> weight(0, 12);
  std::uniform_int_distribution<int> value(0, 20);
  std::uniform_int_distribution<int> capacity(0, 12);

  KvipInstance inst;
  inst.capacity = capacity(rng);
  const int items = item_count(rng);
  for (int i = 0; i < items; ++i) {
    KvipItem item;
    const int versions = version_count(rng);
    for (int j = 0; j < versions; ++j) {
      item.versions.push_back({weight(rng), static_cast<double>(value(rng))});
    }
    inst.items.push_back(std::move(item));
  }
  inst.target = static_cast<double>(value(rng));
  return inst;
}

void print_kvip_result(const KvipInstance& inst, const KvipResult& result,
                       bool csv, std::ostream& out) {
  if (csv) {
    out << "item,choice,weight,value\n";
    for (std::size_t i = 0; i < result.selection.choice.size(); ++i) {
      const int j = result.selection.choice[i];
      out << (i + 1) << ',';
      if (j == kSkipItem) {
        out << "skip,0,0\n";
      } else {
        const auto& v = inst.items[i].versions[static_cast<std::size_t>(j)];
        out << (j + 1) << ',' << v.weight << ',' << format_number(v.value)
            << '\n';
      }
    }
  } else {
    for (std::size_t i = 0; i < result.selection.choice.size(); ++i) {
      const int j = result.selection.choice[i];
      out << "item " << (i + 1) << ": ";
      if (j == kSkipItem) {
        out << "skip\n";
      } else {
        const auto& v = inst.items[i].versions[static_cast<std::size_t>(j)];
        out << "version " << (j + 1) << " (weight " << v.weight << ", value "
            << format_number(v.value) << ")\n";
      }
    }
  }
  out << "value=" << format_number(result.value) << '\n';
  out << "weight=" << result.total_weight << '\n';
  out << "decision: " << (result.value >= inst.target ? "yes" : "no")
      << " (Kprime=" << format_number(inst.target) << ")\n";
}

int cmd_kvip(const std::string& path, bool random, std::uint64_t seed,
             const std::string& emit_path, bool brute, bool csv,
             std::ostream& out) {
  KvipInstance inst;
  if (random) {
    inst = random_kvip(seed);
  } else {
    if (path.empty()) {
      throw std::invalid_argument("kvip: pass --file or --random");
    }
    inst = kvip_from_json(load_json(path));
  }
  if (!emit_path.empty()) {
    std::ofstream ofs(emit_path);
    if (!ofs) {
      throw std::invalid_argument("cannot open file: " + emit_path);
    }
    ofs << kvip_to_json(inst).dump(2) << '\n';
  }
  const KvipResult result = brute ? kvip_bruteforce(inst) : kvip_optimize(inst);
  print_kvip_result(inst, result, csv, out);
  return 0;
}

int cmd_solve(const std::string& path, bool csv, std::ostream& out) {
  const ApInstance ap = ap_from_json(load_json(path));
  const Allocation alloc = solve_ap(ap);
  for (const auto& warning : alloc.warnings) {
    out << "warning: " << warning << '\n';
  }
  if (csv) {
    out << "job_id,granted_n,running_time,cost\n";
    for (std::size_t i = 0; i < alloc.grants.size(); ++i) {
      const auto& g = alloc.grants[i];
      const double t =
          g.granted_n > 0 ? ap.jobs[i].rt.eval(g.granted_n) : 0.0;
      out << g.job_id << ',' << g.granted_n << ',' << format_number(t) << ','
          << format_number(g.cost) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < alloc.grants.size(); ++i) {
      const auto& g = alloc.grants[i];
      out << "job " << g.job_id << ": ";
      if (g.granted_n == 0) {
        out << "not run\n";
      } else {
        out << g.granted_n << " processors, time "
            << format_number(ap.jobs[i].rt.eval(g.granted_n)) << ", cost "
            << format_number(g.cost) << '\n';
      }
    }
  }
  out << "revenue=" << format_number(alloc.revenue) << '\n';
  out << "decision: " << (alloc.meets_target ? "yes" : "no")
      << " (K=" << format_number(ap.target) << ")\n";
  return 0;
}

int cmd_simulate(const std::string& path, const std::string& out_path,
                 std::ostream& out) {
  const Scenario scenario = scenario_from_json(load_json(path));
  const std::vector<RoundTrace> traces = run_scenario(scenario);
  if (out_path.empty()) {
    write_trace_csv(out, traces);
  } else {
    std::ofstream ofs(out_path);
    if (!ofs) {
      throw std::invalid_argument("cannot open file: " + out_path);
    }
    write_trace_csv(ofs, traces);
  }
  return 0;
}

bool report(std::ostream& out, const std::string& label,
            const std::string& expected, const std::string& computed) {
  const bool ok = expected == computed;
  out << "  " << label << ": expected " << expected << ", computed "
      << computed << " ... " << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

// Four built-in fixtures with independently known answers; each pits the
// recursion against its closed form.
int cmd_examples(std::ostream& out) {
  bool all_ok = true;

  {
    out << "example 1: even-split workload under usage pricing\n";
    const Job job{"J1", RunningTimeModel::even_split(100.0),
                  UtilityModel::constant(1.0)};
    const CoIModel coi = CoIModel::linear_ktn(2.0);
    bool flat = true;
    for (int n : {1, 3, 7, 100, 9999}) {
      flat = flat && job_cost(job, coi, n) == ExtMoney(200.0);
    }
    all_ok &= report(out, "cost invariance", "200 at every n",
                     flat ? "200 at every n" : "varies");
    all_ok &= report(out, "optimal set (cap 10)",
                     format_set(even_split_optimal_set(100.0, 2.0, 10)),
                     format_set(optimal_set(job, coi, 10)));
  }

  {
    out << "example 2: power-law speedup with a hard deadline at 40\n";
    const Job job{"J2", RunningTimeModel::power_law(100.0, 0.0, 0.5),
                  UtilityModel::step_to_infinity(40.0)};
    const CoIModel coi = CoIModel::linear_ktn(1.0);
    all_ok &= report(out, "optimal set (cap 20)",
                     format_set(step_cutoff_optimal_set(1.0, 100.0, 0.0, 0.5,
                                                        40.0, 20)),
                     format_set(optimal_set(job, coi, 20)));
  }

  {
    out << "example 3: saturating table under flat-rate pricing\n";
    const RunningTimeModel rt = RunningTimeModel::table({10.0, 6.0, 5.0, 5.0});
    const Job job{"J3", rt, UtilityModel::constant(2.0)};
    const CoIModel coi = CoIModel::constant_price(9.0);
    all_ok &= report(out, "optimal set (cap 10)",
                     format_set(flat_price_optimal_set(rt, 10)),
                     format_set(optimal_set(job, coi, 10)));
  }

  {
    out << "example 4: constant marginal utility against rising cost\n";
    const PlateauParams params{1.0, 10.0, 0.5, 100.0, 0.0};
    const int plateau = constant_utility_plateau(params);
    all_ok &= report(out, "plateau", "10", std::to_string(plateau));
    const Job job{"J4", RunningTimeModel::power_law(100.0, 0.0, 0.5),
                  UtilityModel::constant(10.0)};
    const CoIModel coi = CoIModel::linear_ktn(1.0);
    OptimalSet expected;
    expected.n_cap = 20;
    for (int n = 0; n <= plateau; ++n) expected.members.push_back(n);
    all_ok &= report(out, "optimal set (cap 20)", format_set(expected),
                     format_set(optimal_set(job, coi, 20)));
  }

  out << (all_ok ? "all examples PASS" : "some examples FAIL") << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"processor-allocation mediation engine"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string output_mode = "table";
  app.add_option("--output", output_mode, "output format")
      ->check(CLI::IsMember({"table", "csv"}));
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for randomized generation");

  auto* nstar = app.add_subcommand("nstar", "optimal processor set of a job");
  std::string nstar_file;
  nstar->add_option("--file", nstar_file, "job spec (JSON)")->required();
  int nstar_cap = 0;
  auto* cap_opt = nstar->add_option("--cap", nstar_cap, "evaluation cap");

  auto* kvip = app.add_subcommand("kvip", "solve a versioned-item knapsack");
  std::string kvip_file;
  kvip->add_option("--file", kvip_file, "instance file (JSON)");
  bool kvip_random = false;
  kvip->add_flag("--random", kvip_random, "generate a random instance");
  std::string kvip_emit;
  kvip->add_option("--emit", kvip_emit, "write the solved instance to a file");
  bool kvip_brute = false;
  kvip->add_flag("--brute", kvip_brute, "use the exhaustive reference solver");

  auto* solve = app.add_subcommand("solve", "allocate a batch of jobs");
  std::string solve_file;
  solve->add_option("--file", solve_file, "allocation instance (JSON)")
      ->required();

  auto* simulate = app.add_subcommand("simulate", "replay a mediation scenario");
  std::string sim_file;
  simulate->add_option("--file", sim_file, "scenario file (JSON)")->required();
  std::string sim_out;
  simulate->add_option("--out", sim_out, "trace CSV path (default stdout)");

  app.add_subcommand("examples", "run the built-in fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const bool csv = output_mode == "csv";
    if (app.got_subcommand("nstar")) {
      return cmd_nstar(nstar_file,
                       cap_opt->count() > 0 ? std::optional<int>(nstar_cap)
                                            : std::nullopt,
                       out);
    }
    if (app.got_subcommand("kvip")) {
      return cmd_kvip(kvip_file, kvip_random, seed, kvip_emit, kvip_brute, csv,
                      out);
    }
    if (app.got_subcommand("solve")) {
      return cmd_solve(solve_file, csv, out);
    }
    if (app.got_subcommand("simulate")) {
      return cmd_simulate(sim_file, sim_out, out);
    }
    return cmd_examples(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace medalloc
