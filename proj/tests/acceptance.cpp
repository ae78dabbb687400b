// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dmect/baseline.hpp"
#include "dmect/oracle.hpp"
#include "dmect/ordering.hpp"
#include "dmect/schedule.hpp"
#include "test_support.hpp"

namespace {

using namespace dmect;
using dmect::testing::random_instance;
using dmect::testing::random_multicast;
using dmect::testing::random_ordering;
using dmect::testing::uniform_int;

using Clock = std::chrono::steady_clock;

constexpr Accumulation kModes[] = {Accumulation::ea, Accumulation::mia};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

// Shared between criteria: cases solved for 1 and 2 feed 4 and 5.
struct DeskCase {
  std::string label;
  double ea = 0.0;
  double mia = 0.0;
};
std::vector<DeskCase> desk_cases;

struct DominanceCase {
  std::string label;
  double coop = 0.0;
  double noncoop = 0.0;
};
std::vector<DominanceCase> dominance_cases;

std::vector<NodeId> without_source(const Instance& inst) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < inst.size(); ++i)
    if (i != inst.source()) out.push_back(i);
  return out;
}

std::optional<double> best_over_orderings(const Instance& inst, int slots) {
  std::vector<NodeId> rest = without_source(inst);
  std::optional<double> best;
  do {
    std::vector<NodeId> order{inst.source()};
    order.insert(order.end(), rest.begin(), rest.end());
    const DmectResult r = dmect_go(inst, Ordering(order, inst.source()), slots);
    if (r.cost && (!best || *r.cost < *best)) best = r.cost;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(101);
  int checked = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = uniform_int(rng, 2, 6);
    const int slots = uniform_int(rng, 1, 3);
    Instance base = random_instance(n, 10000 + trial);
    if (trial % 3 == 0) base = random_multicast(base, rng);
    const Ordering ord = random_ordering(base, rng);
    DeskCase desk{fmt("c1 trial %d", trial)};
    for (Accumulation mode : kModes) {
      const Instance inst = base.with_accumulation(mode);
      const DmectResult dp = dmect_go(inst, ord, slots);
      const std::optional<double> oracle = exhaustive_partition(inst, ord, slots);
      ++checked;
      if (dp.cost.has_value() != oracle.has_value() || !dp.cost) {
        o.fail(fmt("trial %d %s: feasibility mismatch or infeasible", trial, to_string(mode).c_str()));
        continue;
      }
      const double diff = std::abs(*dp.cost - *oracle);
      worst = std::max(worst, diff);
      if (diff > 1e-7) o.fail(fmt("trial %d %s: dp %.12g vs oracle %.12g", trial, to_string(mode).c_str(), *dp.cost, *oracle));
      (mode == Accumulation::ea ? desk.ea : desk.mia) = *dp.cost;
      if (mode == Accumulation::ea) {
        const DmectResult greedy = noncoop_solve(inst, ord, slots);
        if (greedy.cost) dominance_cases.push_back({desk.label, *dp.cost, *greedy.cost});
      }
    }
    desk_cases.push_back(desk);
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) o.fail(fmt("took %.1f s", elapsed));
  o.detail = fmt("%d instance/mode pairs (n<=6, T<=3), max |dp - partition| = %.3g, %.2f s", checked,
                 worst, elapsed);
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(202);
  int checked = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 2, 5);
    const int slots = uniform_int(rng, 1, 3);
    Instance base = random_instance(n, 20000 + trial);
    if (trial % 4 == 0) base = random_multicast(base, rng);
    DeskCase desk{fmt("c2 trial %d", trial)};
    for (Accumulation mode : kModes) {
      const Instance inst = base.with_accumulation(mode);
      const std::optional<double> dp = best_over_orderings(inst, slots);
      const std::optional<double> global = exhaustive_global(inst, slots);
      ++checked;
      if (!dp || !global) {
        o.fail(fmt("trial %d %s: infeasible", trial, to_string(mode).c_str()));
        continue;
      }
      const double diff = std::abs(*dp - *global);
      worst = std::max(worst, diff);
      if (diff > 1e-7) o.fail(fmt("trial %d %s: min over orderings %.12g vs global %.12g", trial, to_string(mode).c_str(), *dp, *global));
      (mode == Accumulation::ea ? desk.ea : desk.mia) = *dp;
    }
    desk_cases.push_back(desk);
  }
  o.detail = fmt("%d instance/mode pairs (n<=5, T<=3), max |min_order dp - global| = %.3g", checked, worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(303);
  double worst_ea = 0.0, worst_mia = 0.0;
  for (int trial = 0; trial < 600; ++trial) {
    const SlotProblem pb = dmect::testing::random_slot(rng, uniform_int(rng, 1, 4), uniform_int(rng, 1, 4),
                                                       Accumulation::ea);
    const double got = solve_slot(pb).cost;
    const double want = dmect::testing::lp_vertex_enumeration(pb);
    const double diff = std::abs(got - want);
    worst_ea = std::max(worst_ea, diff);
    if (diff > 1e-7) o.fail(fmt("EA slot %d: %.12g vs vertices %.12g", trial, got, want));
  }
  for (int trial = 0; trial < 600; ++trial) {
    const SlotProblem pb = dmect::testing::random_slot(rng, uniform_int(rng, 1, 4), 1, Accumulation::mia);
    std::vector<double> gains;
    for (int s = 0; s < pb.sender_count(); ++s)
      if (pb.gain(s, 0) > 0.0) gains.push_back(pb.gain(s, 0));
    const double got = solve_slot(pb).cost;
    const double want = waterfill_single_receiver(gains, pb.theta()).cost;
    const double diff = std::abs(got - want);
    worst_mia = std::max(worst_mia, diff);
    if (diff > 1e-7) o.fail(fmt("MIA slot %d: %.12g vs water-filling %.12g", trial, got, want));
  }
  o.detail = fmt("600 EA slots vs vertex enumeration (max diff %.3g); 600 MIA single-receiver slots vs water-filling (max diff %.3g)",
                 worst_ea, worst_mia);
  return o;
}

Outcome criterion4() {
  Outcome o;
  int checked = 0;
  double worst = -INFINITY;  // largest mia - ea
  for (const DeskCase& c : desk_cases) {
    ++checked;
    worst = std::max(worst, c.mia - c.ea);
    if (c.mia > c.ea + 1e-8) o.fail(fmt("%s: mia %.12g > ea %.12g", c.label.c_str(), c.mia, c.ea));
  }
  // The table of a T = 10 run holds every smaller budget in its columns.
  for (int trial = 0; trial < 100; ++trial) {
    const Instance ea = random_instance(30, 40000 + trial);
    const Instance mia = ea.with_accumulation(Accumulation::mia);
    const Ordering ord = dijkstra_ordering(ea);
    const DmectResult r_ea = dmect_go(ea, ord, 10);
    const DmectResult r_mia = dmect_go(mia, ord, 10);
    const DmectResult r_greedy = noncoop_solve(ea, ord, 10);
    for (int t = 3; t <= 10; ++t) {
      const auto c_ea = r_ea.table.cost(r_ea.target, t);
      const auto c_mia = r_mia.table.cost(r_mia.target, t);
      const auto c_greedy = r_greedy.table.cost(r_greedy.target, t);
      ++checked;
      if (!c_ea || !c_mia) {
        o.fail(fmt("n=30 seed %d T=%d infeasible", 40000 + trial, t));
        continue;
      }
      worst = std::max(worst, *c_mia - *c_ea);
      if (*c_mia > *c_ea + 1e-8)
        o.fail(fmt("n=30 seed %d T=%d: mia %.12g > ea %.12g", 40000 + trial, t, *c_mia, *c_ea));
      if (c_greedy)
        dominance_cases.push_back({fmt("n=30 seed %d T=%d", 40000 + trial, t), *c_ea, *c_greedy});
    }
  }
  o.detail = fmt("%d comparisons (criteria 1-2 cases + 100 n=30 instances x T=3..10), max (mia - ea) = %.3g",
                 checked, worst);
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(505);
  // Extra mixed-mode cases on top of those gathered by criteria 1 and 4.
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 2, 20);
    const Instance inst = random_instance(n, 50000 + trial, kModes[trial % 2]);
    const Ordering ord = random_ordering(inst, rng);
    const int slots = uniform_int(rng, 1, n - 1);
    const DmectResult coop = dmect_go(inst, ord, slots);
    const DmectResult greedy = noncoop_solve(inst, ord, slots);
    if (!coop.cost || !greedy.cost) {
      o.fail(fmt("trial %d infeasible", trial));
      continue;
    }
    dominance_cases.push_back({fmt("c5 trial %d", trial), *coop.cost, *greedy.cost});
  }
  double worst = -INFINITY;  // largest coop - noncoop
  double mean_gain = 0.0;
  for (const DominanceCase& c : dominance_cases) {
    worst = std::max(worst, c.coop - c.noncoop);
    mean_gain += c.noncoop / c.coop;
    if (c.noncoop < c.coop - 1e-9)
      o.fail(fmt("%s: noncoop %.12g < coop %.12g", c.label.c_str(), c.noncoop, c.coop));
  }
  mean_gain /= static_cast<double>(dominance_cases.size());
  o.detail = fmt("%zu cases, max (coop - noncoop) = %.3g, mean noncoop/coop = %.4f", dominance_cases.size(),
                 worst, mean_gain);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const int n = 30;
  double worst_rise = -INFINITY;
  double worst_tail = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = random_instance(n, 60000 + trial, kModes[trial % 2]);
    const Ordering ord = dijkstra_ordering(inst);
    const DmectResult r = dmect_go(inst, ord, n + 2);
    std::optional<double> prev;
    for (int t = 1; t <= n + 2; ++t) {
      const auto c = r.table.cost(r.target, t);
      if (!c) {
        o.fail(fmt("seed %d T=%d infeasible", 60000 + trial, t));
        break;
      }
      if (prev) {
        worst_rise = std::max(worst_rise, *c - *prev);
        if (*c > *prev + 1e-9) o.fail(fmt("seed %d: C(T=%d) = %.12g > C(T=%d) = %.12g", 60000 + trial, t, *c, t - 1, *prev));
      }
      if (t > n - 1) {
        const double tail = std::abs(*c - *r.table.cost(r.target, n - 1));
        worst_tail = std::max(worst_tail, tail);
        if (tail > 1e-9) o.fail(fmt("seed %d: C(T=%d) differs from C(T=n-1) by %.3g", 60000 + trial, t, tail));
      }
      prev = c;
    }
    // The standalone solve at T = n-1 matches the table column and the
    // unconstrained recurrence.
    const DmectResult at_limit = dmect_go(inst, ord, n - 1);
    const UnconstrainedResult free = dmect_unconstrained(inst, ord);
    if (std::abs(*at_limit.cost - *r.table.cost(r.target, n - 1)) > 1e-9 ||
        std::abs(*free.cost - *at_limit.cost) > 1e-9)
      o.fail(fmt("seed %d: T=n-1 solve, table and unconstrained disagree", 60000 + trial));
  }
  o.detail = fmt("50 instances (n=30, both modes), T=1..%d: max step increase %.3g, max deviation past n-1 %.3g",
                 n + 2, worst_rise, worst_tail);
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(707);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 2, 50);
    const Instance inst = random_instance(n, 70000 + trial);
    const std::vector<double> dist = shortest_path_distances(inst);
    for (NodeId d = 1; d < n; ++d) {
      const UnicastResult r = unicast_ea(inst, d, n - 1 + trial % 3);
      ++checked;
      if (!r.cost || *r.cost != dist[d])
        o.fail(fmt("seed %d dest %d: unicast %.17g vs shortest path %.17g", 70000 + trial, d,
                   r.cost.value_or(INFINITY), dist[d]));
    }
  }
  o.detail = fmt("100 instances (n<=50), %d destinations, bitwise equality with Dijkstra distances", checked);
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(808);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 2, 7);
    const Instance inst = random_instance(n, 80000 + trial);
    const DmectResult greedy = dmect_go(inst, gain_ordering(inst), 2);
    const BruteForceResult best = brute_force_ordering(inst, 2);
    if (!greedy.cost || !best.cost) {
      o.fail(fmt("seed %d infeasible", 80000 + trial));
      continue;
    }
    const double diff = std::abs(*greedy.cost - *best.cost);
    worst = std::max(worst, diff);
    if (diff > 1e-7) o.fail(fmt("seed %d (n=%d): gain ordering %.12g vs brute force %.12g", 80000 + trial, n, *greedy.cost, *best.cost));
  }
  o.detail = fmt("100 EA instances (n<=7), T=2: max |gain - brute| = %.3g", worst);
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"dmect", "compare-ordering", "--n", "6", "-T", "3", "--count", "50", "--seed", "0"},
                            out, err);
  if (code != cli::kExitOk) {
    o.fail("compare-ordering exited with " + std::to_string(code) + ": " + err.str());
    return o;
  }
  std::istringstream csv(out.str());
  std::string line;
  std::getline(csv, line);
  int rows = 0;
  double min_ratio = INFINITY;
  std::string mean, median;
  while (std::getline(csv, line)) {
    const std::string ratio = line.substr(line.rfind(',') + 1);
    if (line.rfind("mean,", 0) == 0) {
      mean = ratio;
    } else if (line.rfind("median,", 0) == 0) {
      median = ratio;
    } else {
      ++rows;
      min_ratio = std::min(min_ratio, std::stod(ratio));
    }
  }
  if (rows != 50) o.fail(fmt("expected 50 rows, got %d", rows));
  if (min_ratio < 1.0 - 1e-9) o.fail(fmt("ratio %.12g below 1", min_ratio));
  if (mean.empty() || median.empty()) o.fail("summary rows missing");
  o.detail = fmt("n=6, T=3, 50 seeds: min ratio %.9g, mean ratio %s, median ratio %s", min_ratio, mean.c_str(),
                 median.c_str());
  return o;
}

Outcome criterion10() {
  Outcome o;
  Rng rng(1010);
  double worst = 0.0;
  int checked = 0;
  auto compare = [&](const std::string& what, std::optional<double> base, std::optional<double> scaled,
                     double c) {
    ++checked;
    if (!base || !scaled) {
      o.fail(what + ": infeasible");
      return;
    }
    const double rel = std::abs(*scaled * c - *base) / *base;
    worst = std::max(worst, rel);
    if (rel > 1e-7) o.fail(fmt("%s c=%g: %.12g vs %.12g/c", what.c_str(), c, *scaled, *base));
  };
  for (int trial = 0; trial < 20; ++trial) {
    const int n = uniform_int(rng, 3, 6);
    const int slots = uniform_int(rng, 1, n - 1);
    const Instance ea = random_instance(n, 90000 + trial);
    const Ordering ord = dijkstra_ordering(ea);
    for (Accumulation mode : kModes) {
      const Instance inst = ea.with_accumulation(mode);
      for (double c : {0.1, 10.0}) {
        const Instance scaled = inst.with_scaled_gains(c);
        const std::string tag = fmt("seed %d %s", 90000 + trial, to_string(mode).c_str());
        compare(tag + " dmect_go", dmect_go(inst, ord, slots).cost, dmect_go(scaled, ord, slots).cost, c);
        compare(tag + " unconstrained", dmect_unconstrained(inst, ord).cost,
                dmect_unconstrained(scaled, ord).cost, c);
        compare(tag + " noncoop", noncoop_solve(inst, ord, slots).cost, noncoop_solve(scaled, ord, slots).cost, c);
        compare(tag + " brute", brute_force_ordering(inst, slots).cost, brute_force_ordering(scaled, slots).cost, c);
        compare(tag + " global", exhaustive_global(inst, slots), exhaustive_global(scaled, slots), c);
        const std::vector<NodeId> rx = without_source(inst);
        const std::vector<NodeId> tx{inst.source()};
        compare(tag + " slot", solve_slot(SlotProblem::from_instance(inst, tx, rx)).cost,
                solve_slot(SlotProblem::from_instance(scaled, tx, rx)).cost, c);
        compare(tag + " greedy slot", greedy_slot(tx, rx, inst).allocation.cost,
                greedy_slot(tx, rx, scaled).allocation.cost, c);
        if (mode == Accumulation::ea)
          compare(tag + " unicast", unicast_ea(inst, n - 1, slots).cost, unicast_ea(scaled, n - 1, slots).cost, c);
      }
    }
  }
  o.detail = fmt("20 instances, both modes, c in {0.1, 10}, %d solver comparisons, max relative error %.3g",
                 checked, worst);
  return o;
}

Outcome criterion11() {
  Outcome o;
  TopologyConfig config;
  config.n = 100;
  config.seed = 11;
  const Instance inst = generate(config);
  const auto start = Clock::now();
  const Ordering ord = dijkstra_ordering(inst);
  const DmectResult r = dmect_go(inst, ord, 10);
  const double elapsed = seconds_since(start);
  if (!r.cost) o.fail("infeasible");
  else if (!verify_schedule(inst, r.schedule, kDecodingTolerance, 10).feasible()) o.fail("schedule fails verification");
  if (elapsed >= 60.0) o.fail(fmt("took %.2f s", elapsed));
  o.detail = fmt("n=100, T=10, EA broadcast: cost %.9g in %.3f s", r.cost.value_or(INFINITY), elapsed);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle equivalence (scheduling)", criterion1},
      {"global optimality at desk scale", criterion2},
      {"power-allocation correctness", criterion3},
      {"mode dominance", criterion4},
      {"cooperation dominance", criterion5},
      {"delay monotonicity", criterion6},
      {"unicast exactness", criterion7},
      {"T=2 gain-ordering optimality", criterion8},
      {"ordering-heuristic quality", criterion9},
      {"scaling law", criterion10},
      {"performance envelope", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %zu, %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    for (const std::string& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
