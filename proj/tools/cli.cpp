#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "dmect/baseline.hpp"
#include "dmect/json_io.hpp"
#include "dmect/netgen.hpp"
#include "dmect/oracle.hpp"
#include "dmect/ordering.hpp"
#include "dmect/schedule.hpp"

namespace dmect::cli {

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

namespace {

namespace fs = std::filesystem;

// Raised for bad flag combinations discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_cost(const std::optional<double>& cost) {
  return cost ? format_real(*cost) : "inf";
}

// --out wins; otherwise DMECT_OUTPUT_DIR/<fallback>; otherwise stdout.
std::optional<fs::path> output_path(const std::string& out, const std::string& fallback) {
  if (!out.empty()) return fs::path(out);
  if (const char* dir = std::getenv(kOutputDirVariable); dir && *dir) return fs::path(dir) / fallback;
  return std::nullopt;
}

void emit_text(const std::optional<fs::path>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  if (path->has_parent_path()) fs::create_directories(path->parent_path());
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path->string());
  file << text;
  if (!file) throw std::runtime_error("write failed: " + path->string());
}

void emit_json(const std::optional<fs::path>& path, const nlohmann::json& doc, std::ostream& out) {
  emit_text(path, doc.dump(2) + "\n", out);
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

Accumulation parse_accum(const std::string& text) {
  try {
    return accumulation_from_string(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown accumulation mode '" + text + "' (expected ea or mia)");
  }
}

Ordering make_ordering(const std::string& choice, const Instance& instance, int slots) {
  if (choice == "dijkstra") return dijkstra_ordering(instance);
  if (choice == "gain") return gain_ordering(instance);
  if (choice == "brute") return brute_force_ordering(instance, slots).ordering;
  if (choice.rfind("file:", 0) == 0) {
    const Ordering ord = ordering_from_json(read_json_file(choice.substr(5)), instance.source());
    if (ord.size() != instance.size())
      throw SchemaError("ordering file has " + std::to_string(ord.size()) + " nodes, instance has " +
                        std::to_string(instance.size()));
    return ord;
  }
  throw UsageError("unknown ordering '" + choice + "' (expected dijkstra, gain, brute or file:<path>)");
}

DmectResult run_solver(const std::string& solver, const Instance& instance, const Ordering& ordering,
                       int slots) {
  if (solver == "coop") return dmect_go(instance, ordering, slots);
  if (solver == "noncoop") return noncoop_solve(instance, ordering, slots);
  throw UsageError("unknown solver '" + solver + "' (expected coop or noncoop)");
}

void require_valid(const Instance& instance, const Schedule& schedule, int slots) {
  const Verdict v = verify_schedule(instance, schedule, kDecodingTolerance, slots);
  if (!v.feasible()) throw std::logic_error("solver produced an invalid schedule: " + v.message);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) items.push_back(item);
  return items;
}

// Runs fn(0..count-1) over a few worker threads; rethrows the first failure.
template <class Fn>
void parallel_for(int count, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  TopologyConfig config;
  std::string accum = "ea";
  std::string out;
};

void add_topology_flags(CLI::App* cmd, TopologyConfig& config) {
  cmd->add_option("--n", config.n, "Number of nodes, source included")->capture_default_str();
  cmd->add_option("--width", config.width, "Field width")->capture_default_str();
  cmd->add_option("--height", config.height, "Field height")->capture_default_str();
  cmd->add_option("--eta", config.eta, "Path-loss exponent")->capture_default_str();
  cmd->add_option("--theta", config.theta, "Decoding threshold in nats/Hz")->capture_default_str();
  cmd->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  TopologyConfig config = a.config;
  config.accumulation = parse_accum(a.accum);
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Instance instance = generate(config);
  const auto path = output_path(
      a.out, "instance_n" + std::to_string(config.n) + "_seed" + std::to_string(config.seed) + ".json");
  emit_json(path, instance_to_json(instance), out);
  if (path) err << "wrote " << config.n << "-node instance to " << path->string() << "\n";
  return kExitOk;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string mode = "broadcast";
  std::string accum;
  int slots = 0;
  std::string ordering = "dijkstra";
  std::string solver = "coop";
  bool heuristic = false;
  int dest = -1;
  std::string dests;
  bool oracle = false;
  std::string dump_costs;
  std::string out;
};

std::string cost_table_csv(const CostMatrix& table) {
  std::string csv = "j,t,cost,argmin_k\n";
  for (int j = 1; j <= table.prefixes(); ++j)
    for (int t = 0; t <= table.slots(); ++t)
      csv += std::to_string(j) + "," + std::to_string(t) + "," + format_cost(table.cost(j, t)) + "," +
             std::to_string(table.argmin(j, t)) + "\n";
  return csv;
}

// Unicast table in the same layout: j is the node, argmin_k its previous hop.
std::string cost_table_csv(const UnicastTable& table) {
  std::string csv = "j,t,cost,argmin_k\n";
  for (NodeId i = 0; i < table.n; ++i)
    for (int t = 0; t <= table.slots; ++t)
      csv += std::to_string(i) + "," + std::to_string(t) + "," + format_cost(table.at(i, t)) + "," +
             std::to_string(table.parent_of(i, t)) + "\n";
  return csv;
}

Instance solve_target(const SolveArgs& a, const Instance& base) {
  if (a.mode == "broadcast") {
    if (a.dest >= 0 || !a.dests.empty()) throw UsageError("broadcast takes no destination flags");
    return base.as_broadcast();
  }
  if (a.mode == "multicast") {
    if (a.dest >= 0) throw UsageError("multicast uses --dests, not --dest");
    if (a.dests.empty()) return base;
    std::vector<NodeId> ids;
    for (const std::string& item : split_list(a.dests)) {
      try {
        std::size_t used = 0;
        ids.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("bad destination '" + item + "'");
      }
    }
    try {
      return base.with_destinations(std::move(ids));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (a.mode == "unicast") {
    if (a.dest < 0) throw UsageError("unicast needs --dest");
    if (!a.dests.empty()) throw UsageError("unicast uses --dest, not --dests");
    try {
      return base.with_destinations({a.dest});
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown mode '" + a.mode + "' (expected broadcast, multicast or unicast)");
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Instance instance = load_instance(a.instance);
  if (!a.accum.empty()) instance = instance.with_accumulation(parse_accum(a.accum));
  instance = solve_target(a, instance);
  if (a.slots < 0) throw UsageError("-T must be at least 1");
  const int slots = a.slots > 0 ? a.slots : instance.size() - 1;

  const bool unicast = a.mode == "unicast";
  if (unicast && instance.accumulation() == Accumulation::mia && !a.heuristic)
    throw UsageError(
        "unicast under mutual information accumulation is NP-complete; pass --heuristic to run the "
        "ordering-based cooperative DP instead");
  const bool exact_unicast =
      unicast && instance.accumulation() == Accumulation::ea && a.solver == "coop";

  nlohmann::json doc;
  doc["mode"] = a.mode;
  doc["accumulation"] = to_string(instance.accumulation());
  doc["solver"] = a.solver;
  doc["slots"] = slots;

  std::optional<double> cost;
  Schedule schedule;
  std::optional<Ordering> ordering;
  std::string csv;
  if (exact_unicast) {
    const UnicastResult r = unicast_ea(instance, a.dest, slots);
    cost = r.cost;
    schedule = r.schedule;
    doc["path"] = r.path;
    if (!a.dump_costs.empty()) csv = cost_table_csv(r.table);
    if (!cost) {
      err << "infeasible: node " << a.dest << " is unreachable within " << slots << " slots\n";
      if (!csv.empty()) emit_text(fs::path(a.dump_costs), csv, out);
      return kExitInfeasible;
    }
  } else {
    ordering = make_ordering(a.ordering, instance, slots);
    const DmectResult r = run_solver(a.solver, instance, *ordering, slots);
    cost = r.cost;
    schedule = r.schedule;
    doc["ordering"] = ordering_to_json(*ordering);
    if (!a.dump_costs.empty()) csv = cost_table_csv(r.table);
    if (!cost) {
      err << "infeasible: no schedule within " << slots << " slots";
      if (r.blocking)
        err << "; node " << r.blocking->node << " (ordering position " << r.blocking->position
            << ") cannot be reached";
      err << "\n";
      if (!csv.empty()) emit_text(fs::path(a.dump_costs), csv, out);
      return kExitInfeasible;
    }
  }
  require_valid(instance, schedule, slots);
  doc["cost"] = *cost;
  doc["schedule"] = schedule_to_json(schedule);

  if (a.oracle) {
    nlohmann::json oracle;
    if (ordering) {
      const auto part = exhaustive_partition(instance, *ordering, slots);
      oracle["partition"] = part ? nlohmann::json(*part) : nlohmann::json(nullptr);
    }
    if (instance.size() <= kGlobalMaxNodes) {
      const auto global = exhaustive_global(instance, slots);
      oracle["global"] = global ? nlohmann::json(*global) : nlohmann::json(nullptr);
    } else {
      oracle["global"] = "skipped: needs n <= " + std::to_string(kGlobalMaxNodes);
    }
    doc["oracle"] = oracle;
  }

  const auto path = output_path(a.out, "solution.json");
  emit_json(path, doc, out);
  if (!csv.empty()) emit_text(fs::path(a.dump_costs), csv, out);

  std::ostream& summary = path ? out : err;
  summary << a.mode << " " << to_string(instance.accumulation()) << " " << a.solver << " T=" << slots
          << ": cost " << format_real(*cost) << " in " << schedule.slots.size() << " slot(s)";
  if (ordering) summary << ", ordering " << a.ordering;
  summary << "\n";
  if (doc.contains("oracle")) summary << "oracle: " << doc["oracle"].dump() << "\n";
  return kExitOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string instance;
  int t_min = 1;
  int t_max = 0;
  std::string accums = "ea,mia";
  std::string solvers = "coop,noncoop";
  std::string ordering = "dijkstra";
  bool no_timing = false;
  int threads = 0;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const Instance base = load_instance(a.instance);
  const int t_max = a.t_max > 0 ? a.t_max : base.size() - 1;
  if (a.t_min < 1 || t_max < a.t_min) throw UsageError("need 1 <= --t-min <= --t-max");

  std::vector<Accumulation> accums;
  for (const std::string& s : split_list(a.accums)) accums.push_back(parse_accum(s));
  std::sort(accums.begin(), accums.end());
  accums.erase(std::unique(accums.begin(), accums.end()), accums.end());
  std::vector<std::string> solvers = split_list(a.solvers);
  std::sort(solvers.begin(), solvers.end());
  solvers.erase(std::unique(solvers.begin(), solvers.end()), solvers.end());
  for (const std::string& s : solvers)
    if (s != "coop" && s != "noncoop") throw UsageError("unknown solver '" + s + "'");
  if (accums.empty() || solvers.empty()) throw UsageError("empty --accum or --solver list");

  // One ordering for the whole sweep so every cell is comparable.
  const Ordering ordering = make_ordering(a.ordering, base, t_max);

  struct Cell {
    int slots;
    Accumulation accum;
    std::string solver;
    std::optional<double> cost;
    double runtime_ms = 0.0;
  };
  std::vector<Cell> cells;
  for (int t = a.t_min; t <= t_max; ++t)
    for (Accumulation m : accums)
      for (const std::string& s : solvers) cells.push_back({t, m, s, std::nullopt});

  parallel_for(static_cast<int>(cells.size()), a.threads > 0 ? a.threads : default_threads(),
               [&](int i) {
                 Cell& cell = cells[i];
                 const Instance instance = base.with_accumulation(cell.accum);
                 const auto start = std::chrono::steady_clock::now();
                 const DmectResult r = run_solver(cell.solver, instance, ordering, cell.slots);
                 cell.runtime_ms = std::chrono::duration<double, std::milli>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
                 if (r.cost) require_valid(instance, r.schedule, cell.slots);
                 cell.cost = r.cost;
               });

  std::string csv = "T,accum,solver,cost,runtime_ms\n";
  for (const Cell& c : cells)
    csv += std::to_string(c.slots) + "," + to_string(c.accum) + "," + c.solver + "," +
           format_cost(c.cost) + "," + (a.no_timing ? "" : format_real(c.runtime_ms)) + "\n";
  const auto path = output_path(a.out, "sweep.csv");
  emit_text(path, csv, out);
  if (path) err << "wrote " << cells.size() << " rows to " << path->string() << "\n";
  return kExitOk;
}

// ---- compare-ordering ------------------------------------------------------

struct CompareArgs {
  TopologyConfig config;
  int count = 50;
  int slots = 3;
  std::string accum = "ea";
  int threads = 0;
  std::string out;
};

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  TopologyConfig config = a.config;
  config.accumulation = parse_accum(a.accum);
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (config.n > kBruteForceCap)
    throw CapExceededError("compare-ordering runs brute force, which is capped at n <= " +
                           std::to_string(kBruteForceCap));
  if (a.count < 1) throw UsageError("--count must be at least 1");
  if (a.slots < 1) throw UsageError("-T must be at least 1");

  struct Row {
    std::uint64_t seed;
    double brute = 0.0;
    double dijkstra = 0.0;
    double ratio = 0.0;
  };
  std::vector<Row> rows(static_cast<std::size_t>(a.count));
  parallel_for(a.count, a.threads > 0 ? a.threads : default_threads(), [&](int i) {
    TopologyConfig c = config;
    c.seed = config.seed + static_cast<std::uint64_t>(i);
    const Instance instance = generate(c);
    const BruteForceResult best = brute_force_ordering(instance, a.slots);
    const DmectResult heuristic = dmect_go(instance, dijkstra_ordering(instance), a.slots);
    if (!best.cost || !heuristic.cost)
      throw InfeasibleError("instance seed " + std::to_string(c.seed) + " is infeasible", -1);
    require_valid(instance, heuristic.schedule, a.slots);
    rows[i] = {c.seed, *best.cost, *heuristic.cost, *heuristic.cost / *best.cost};
  });

  std::vector<double> ratios;
  std::string csv = "instance_seed,brute_cost,dijkstra_cost,ratio\n";
  for (const Row& r : rows) {
    csv += std::to_string(r.seed) + "," + format_real(r.brute) + "," + format_real(r.dijkstra) + "," +
           format_real(r.ratio) + "\n";
    ratios.push_back(r.ratio);
  }
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  std::sort(ratios.begin(), ratios.end());
  const std::size_t mid = ratios.size() / 2;
  const double median =
      ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
  csv += "mean,,," + format_real(mean) + "\n";
  csv += "median,,," + format_real(median) + "\n";

  const auto path = output_path(a.out, "compare_ordering.csv");
  emit_text(path, csv, out);
  err << "mean ratio " << format_real(mean) << ", median " << format_real(median) << ", max "
      << format_real(ratios.back()) << " over " << a.count << " instances\n";
  return kExitOk;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
  std::string instance;
  std::string accum;
  int slots = 0;
  std::string ordering = "dijkstra";
  bool global = false;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream&) {
  Instance instance = load_instance(a.instance);
  if (!a.accum.empty()) instance = instance.with_accumulation(parse_accum(a.accum));
  const int slots = a.slots > 0 ? a.slots : instance.size() - 1;
  const Ordering ordering = make_ordering(a.ordering, instance, slots);
  const DmectResult dp = dmect_go(instance, ordering, slots);
  const std::optional<double> part = exhaustive_partition(instance, ordering, slots);
  bool agree = dp.cost.has_value() == part.has_value() &&
               (!part || std::abs(*dp.cost - *part) <= 1e-7);
  out << "dmect_go:  " << format_cost(dp.cost) << "\n";
  out << "partition: " << format_cost(part) << "\n";
  if (a.global) {
    const std::optional<double> global = exhaustive_global(instance, slots);
    out << "global:    " << format_cost(global) << "\n";
    // The best ordering can only match or beat this one.
    if (dp.cost && (!global || *global > *dp.cost + 1e-7)) agree = false;
  }
  out << (agree ? "agree" : "MISMATCH") << "\n";
  return agree ? kExitOk : kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delay-constrained minimum-energy cooperative broadcast: solvers and experiments",
               "dmect"};
  app.require_subcommand(1);
  app.footer(std::string("Output files default to $") + kOutputDirVariable +
             " when --out is not given, else stdout.\n"
             "Exit codes: 0 ok, 1 error, 2 infeasible, 3 usage, 4 cap exceeded.");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  add_topology_flags(gen_cmd, gen.config);
  gen_cmd->add_option("--accum", gen.accum, "Accumulation mode: ea or mia")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output JSON file");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", solve.instance, "Instance JSON file")->required();
  solve_cmd->add_option("--mode", solve.mode, "broadcast, multicast or unicast")->capture_default_str();
  solve_cmd->add_option("--accum", solve.accum, "Override the instance's accumulation: ea or mia");
  solve_cmd->add_option("-T,--slots", solve.slots, "Slot budget (default n-1)");
  solve_cmd->add_option("--ordering", solve.ordering, "dijkstra, gain, brute or file:<path>")
      ->capture_default_str();
  solve_cmd->add_option("--solver", solve.solver, "coop or noncoop")->capture_default_str();
  solve_cmd->add_flag("--heuristic", solve.heuristic,
                      "Allow unicast under MIA via the ordering-based DP");
  solve_cmd->add_option("--dest", solve.dest, "Unicast destination");
  solve_cmd->add_option("--dests", solve.dests, "Multicast destinations, comma separated");
  solve_cmd->add_flag("--oracle", solve.oracle, "Also run the brute-force references (small n)");
  solve_cmd->add_option("--dump-costs", solve.dump_costs, "Write the DP table as CSV");
  solve_cmd->add_option("--out", solve.out, "Result JSON file");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Cost versus slot budget, CSV");
  sweep_cmd->add_option("instance", sweep.instance, "Instance JSON file")->required();
  sweep_cmd->add_option("--t-min", sweep.t_min, "Smallest slot budget")->capture_default_str();
  sweep_cmd->add_option("--t-max", sweep.t_max, "Largest slot budget (default n-1)");
  sweep_cmd->add_option("--accum", sweep.accums, "Comma-separated modes")->capture_default_str();
  sweep_cmd->add_option("--solver", sweep.solvers, "Comma-separated solvers")->capture_default_str();
  sweep_cmd->add_option("--ordering", sweep.ordering, "dijkstra, gain, brute or file:<path>")
      ->capture_default_str();
  sweep_cmd->add_flag("--no-timing", sweep.no_timing,
                      "Leave runtime_ms empty so output is byte-reproducible");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (default: all cores)");
  sweep_cmd->add_option("--out", sweep.out, "Output CSV file");

  CompareArgs compare;
  compare.config.n = 6;
  CLI::App* compare_cmd =
      app.add_subcommand("compare-ordering", "Brute-force versus Dijkstra ordering, CSV");
  add_topology_flags(compare_cmd, compare.config);
  compare_cmd->add_option("--count", compare.count, "Number of instances")->capture_default_str();
  compare_cmd->add_option("-T,--slots", compare.slots, "Slot budget")->capture_default_str();
  compare_cmd->add_option("--accum", compare.accum, "ea or mia")->capture_default_str();
  compare_cmd->add_option("--threads", compare.threads, "Worker threads (default: all cores)");
  compare_cmd->add_option("--out", compare.out, "Output CSV file");

  OracleArgs oracle;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Check the DP against brute-force enumeration (small n)");
  oracle_cmd->add_option("instance", oracle.instance, "Instance JSON file")->required();
  oracle_cmd->add_option("--accum", oracle.accum, "Override accumulation: ea or mia");
  oracle_cmd->add_option("-T,--slots", oracle.slots, "Slot budget (default n-1)");
  oracle_cmd->add_option("--ordering", oracle.ordering, "dijkstra, gain, brute or file:<path>")
      ->capture_default_str();
  oracle_cmd->add_flag("--global", oracle.global, "Also search over all decoded-set chains (n <= 6)");

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*compare_cmd) return cmd_compare(compare, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const DisconnectedError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace dmect::cli
