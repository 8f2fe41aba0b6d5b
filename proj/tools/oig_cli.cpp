// oig: instance generation, single solves and benchmark reports.
#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "oig/instance.hpp"
#include "oig/report.hpp"
#include "oig/tsplib.hpp"

#ifndef OIG_DEFAULT_NU_TABLE
#define OIG_DEFAULT_NU_TABLE "data/nu.txt"
#endif

namespace fs = std::filesystem;
using namespace oig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitTimeOut = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  std::string scheme = "u";
  int q = 5;
  int depot = 1;  // TSPLIB numbering
  std::string nu_table = OIG_DEFAULT_NU_TABLE;
  bool collect_depot = false;
};

bool is_tsplib(const fs::path& p) { return p.extension() == ".tsp"; }

Instance from_tsplib(const fs::path& path, PrizeScheme scheme, int q, const InstanceArgs& args) {
  RawTsp raw;
  try {
    raw = read_tsplib(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  NuTable table;
  try {
    table = NuTable::load(args.nu_table);
  } catch (const std::exception& e) {
    throw ConfigError("cannot read TSP optimum table '" + args.nu_table + "': " + e.what());
  }
  const auto nu = table.find(raw.name);
  if (!nu) throw ConfigError("no TSP optimum for '" + raw.name + "' in table '" + args.nu_table + "'");
  Instance inst = build_instance(raw, scheme, q, {1, 2}, args.depot - 1, *nu);
  inst.collect_depot = args.collect_depot;
  inst.validate();
  return inst;
}

/// A .tsp file is generated on the fly; anything else is an instance file.
Instance load_any(const fs::path& path, PrizeScheme scheme, int q, const InstanceArgs& args) {
  if (is_tsplib(path)) return from_tsplib(path, scheme, q, args);
  try {
    return load_instance(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("--scheme", a.scheme, "prize scheme: u (unit) or r (random)")
      ->check(CLI::IsMember({"u", "r"}))
      ->envname("OIG_SCHEME");
  cmd->add_option("--depot", a.depot, "depot node, 1-based")->envname("OIG_DEPOT");
  cmd->add_option("--nu-table", a.nu_table, "file with optimal TSP lengths")->envname("OIG_NU_TABLE");
  cmd->add_flag("--collect-depot", a.collect_depot, "the follower also collects the depot prize");
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

RunSpec make_spec(const std::string& mode_or_setting, double time_limit, std::uint64_t seed) {
  RunSpec spec;
  spec.time_limit = time_limit;
  spec.seed = seed;
  if (mode_or_setting == "GA" || mode_or_setting == "ga") {
    spec.mode = Mode::Ga;
  } else if (mode_or_setting == "oracle") {
    spec.mode = Mode::Oracle;
  } else {
    spec.mode = Mode::Exact;
    spec.setting = parse_setting(mode_or_setting);
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orienteering interdiction game solvers"};
  app.require_subcommand(1);

  // gen
  InstanceArgs gen_args;
  std::string gen_in, gen_out;
  auto* gen = app.add_subcommand("gen", "build an instance file from a TSPLIB file");
  gen->add_option("--instance", gen_in, "TSPLIB file")->required()->envname("OIG_INSTANCE");
  gen->add_option("--q", gen_args.q, "leader budget")->envname("OIG_Q");
  gen->add_option("--out", gen_out, "instance file to write (default: stdout)")->envname("OIG_OUT");
  add_instance_options(gen, gen_args);

  // solve
  InstanceArgs solve_args;
  std::string solve_in, solve_out, solve_mode = "exact", solve_setting = "IFHC", solve_csv;
  double solve_limit = 3600.0;
  std::uint64_t solve_seed = 1;
  auto* solve = app.add_subcommand("solve", "solve one instance and print its CSV row");
  solve->add_option("--instance", solve_in, "instance file or TSPLIB file")->required()->envname("OIG_INSTANCE");
  solve->add_option("--q", solve_args.q, "leader budget (TSPLIB input only)")->envname("OIG_Q");
  solve->add_option("--mode", solve_mode, "exact, ga or oracle")
      ->check(CLI::IsMember({"exact", "ga", "oracle"}))
      ->envname("OIG_MODE");
  solve->add_option("--setting", solve_setting, "exact setting: I, IF, IFH, IFHC or IFHCP")
      ->check(CLI::IsMember({"I", "IF", "IFH", "IFHC", "IFHCP"}))
      ->envname("OIG_SETTING");
  solve->add_option("--time-limit", solve_limit, "seconds, 0 for none")->envname("OIG_TIME_LIMIT");
  solve->add_option("--seed", solve_seed, "GA seed")->envname("OIG_SEED");
  solve->add_option("--out", solve_out, "solution file to write")->envname("OIG_OUT");
  solve->add_option("--csv", solve_csv, "also write the CSV row to this file");
  add_instance_options(solve, solve_args);

  // bench
  InstanceArgs bench_args;
  std::vector<std::string> bench_in;
  std::string bench_schemes = "u,r", bench_qs = "5,8", bench_settings = "IFHC", bench_seeds = "1", bench_out;
  double bench_limit = 3600.0;
  int bench_jobs = 1;
  bool bench_no_timings = false;
  auto* bench = app.add_subcommand("bench", "run a grid of instances and settings into one CSV report");
  bench->add_option("--instance", bench_in, "TSPLIB or instance files")->required()->envname("OIG_INSTANCE");
  bench->add_option("--scheme", bench_schemes, "comma list of prize schemes")->envname("OIG_SCHEME");
  bench->add_option("--q", bench_qs, "comma list of leader budgets")->envname("OIG_Q");
  bench->add_option("--setting", bench_settings, "comma list of I, IF, IFH, IFHC, IFHCP, GA, oracle")
      ->envname("OIG_SETTING");
  bench->add_option("--seed", bench_seeds, "comma list of seeds")->envname("OIG_SEED");
  bench->add_option("--time-limit", bench_limit, "seconds per run, 0 for none")->envname("OIG_TIME_LIMIT");
  bench->add_option("--jobs", bench_jobs, "concurrent runs")->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "CSV file to write (default: stdout)")->envname("OIG_OUT");
  bench->add_flag("--no-timings", bench_no_timings, "write '-' in the wall-clock columns");
  bench->add_option("--depot", bench_args.depot, "depot node, 1-based")->envname("OIG_DEPOT");
  bench->add_option("--nu-table", bench_args.nu_table, "file with optimal TSP lengths")->envname("OIG_NU_TABLE");
  bench->add_flag("--collect-depot", bench_args.collect_depot, "the follower also collects the depot prize");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) {
      const Instance inst = from_tsplib(gen_in, parse_prize_scheme(gen_args.scheme), gen_args.q, gen_args);
      if (gen_out.empty()) std::cout << write_instance(inst);
      else save_instance(inst, gen_out);
      return kExitOk;
    }

    if (*solve) {
      const Instance inst = load_any(solve_in, parse_prize_scheme(solve_args.scheme), solve_args.q, solve_args);
      const RunSpec spec = make_spec(solve_mode == "exact" ? solve_setting : solve_mode, solve_limit, solve_seed);
      const RunOutcome out = run_one(inst, spec);
      const std::string row = csv_row(out.record);
      std::cout << csv_header() << "\n" << row << "\n";
      if (!solve_csv.empty()) write_file(solve_csv, csv_header() + "\n" + row + "\n");
      if (!solve_out.empty()) write_file(solve_out, write_solution(inst, out));
      if (out.record.status == "error") {
        std::cerr << "error: " << out.record.error << "\n";
        return kExitError;
      }
      return out.record.status == "time_out" ? kExitTimeOut : kExitOk;
    }

    // bench
    struct Job {
      fs::path path;
      PrizeScheme scheme;
      int q;
      std::string setting;
      std::uint64_t seed;
    };
    std::vector<Job> jobs;
    const auto schemes = split(bench_schemes);
    const auto qs = split(bench_qs);
    const auto settings = split(bench_settings);
    const auto seeds = split(bench_seeds);
    for (const auto& s : settings) make_spec(s, 0.0, 0);  // validate early
    for (const auto& path : bench_in)
      for (const auto& sc : schemes)
        for (const auto& q : qs)
          for (const auto& st : settings)
            for (const auto& sd : seeds)
              jobs.push_back({path, parse_prize_scheme(sc), std::stoi(q), st, std::stoull(sd)});

    std::vector<RunRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    auto worker = [&] {
      for (std::size_t k = next++; k < jobs.size(); k = next++) {
        const Job& job = jobs[k];
        RunSpec spec = make_spec(job.setting, bench_limit, job.seed);
        try {
          const Instance inst = load_any(job.path, job.scheme, job.q, bench_args);
          records[k] = run_one(inst, spec).record;
        } catch (const std::exception& e) {
          // Per-row failure: record it and keep going.
          RunRecord& r = records[k];
          r.instance = job.path.stem().string();
          r.scheme = std::string(to_string(job.scheme));
          r.q = job.q;
          r.setting = job.setting;
          r.seed = job.seed;
          r.status = "error";
          r.error = e.what();
        }
        std::lock_guard lock(log_mutex);
        std::cerr << records[k].instance << ' ' << records[k].scheme << " Q=" << records[k].q << ' '
                  << records[k].setting << " seed=" << records[k].seed << ": " << records[k].status
                  << (records[k].error.empty() ? "" : " (" + records[k].error + ")") << "\n";
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < bench_jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    fill_deltas(records);
    CsvOptions copt;
    copt.timings = !bench_no_timings;
    const std::string csv = write_csv(records, true, copt);
    if (bench_out.empty()) std::cout << csv;
    else write_file(bench_out, csv);
    for (const auto& r : records)
      if (r.status == "time_out") return kExitTimeOut;
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
