#include "dmect/schedule.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmect/power.hpp"

namespace dmect {
namespace {

// Lazily solved slot subproblems keyed by breakpoints (k, j): the first k
// ordered nodes transmit, positions k..j-1 receive.
class SlotCache {
 public:
  SlotCache(const Ordering& ordering, int target, const SlotSolver& solve)
      : ordering_(ordering), target_(target), solve_(solve),
        entries_(static_cast<std::size_t>(target + 1) * (target + 1)) {}

  const std::optional<PowerAllocation>& get(int k, int j) {
    auto& entry = entries_[static_cast<std::size_t>(k) * (target_ + 1) + j];
    if (!entry) entry = solve_(ordering_.slice(0, k), ordering_.slice(k, j));
    return *entry;
  }

 private:
  const Ordering& ordering_;
  int target_;
  const SlotSolver& solve_;
  std::vector<std::optional<std::optional<PowerAllocation>>> entries_;
};

Slot make_slot(const Ordering& ordering, int k, int j, const PowerAllocation& alloc) {
  Slot slot;
  for (const auto& [node, p] : alloc.powers) slot.senders.push_back(node);
  slot.receivers = ordering.slice(k, j);
  std::sort(slot.receivers.begin(), slot.receivers.end());
  slot.powers = alloc.powers;
  return slot;
}

template <typename Lookup>
Schedule trace_back(const Ordering& ordering, const CostMatrix& table, int j, int t,
                    Lookup&& lookup) {
  Schedule schedule;
  while (j > 1) {
    if (t <= 0) throw std::logic_error("traceback ran out of slots");
    const int k = table.argmin(j, t);
    if (k < 1 || k > j) throw std::logic_error("traceback hit an infeasible cell");
    if (k < j) {
      const std::optional<PowerAllocation>& alloc = lookup(k, j);
      if (!alloc) throw std::logic_error("traceback hit an infeasible slot");
      schedule.slots.push_back(make_slot(ordering, k, j, *alloc));
    }
    j = k;
    --t;
  }
  std::reverse(schedule.slots.begin(), schedule.slots.end());
  return schedule;
}

SlotSolver cooperative_solver(const Instance& instance) {
  return [&instance](const std::vector<NodeId>& senders,
                     const std::vector<NodeId>& receivers) -> std::optional<PowerAllocation> {
    const SlotProblem problem = SlotProblem::from_instance(instance, senders, receivers);
    if (problem.unreachable_receiver()) return std::nullopt;
    return solve_slot(problem);
  };
}

void check_budget(int slots) {
  if (slots < 1) throw std::invalid_argument("slot budget must be at least 1");
}

}  // namespace

int target_prefix(const Instance& instance, const Ordering& ordering) {
  if (ordering.size() != instance.size())
    throw std::invalid_argument("ordering size does not match the instance");
  if (ordering[0] != instance.source())
    throw std::invalid_argument("ordering must start with the instance source");
  int last = 0;
  for (NodeId d : instance.destinations()) last = std::max(last, ordering.position_of(d));
  return last + 1;
}

DmectResult prefix_dp(const Instance& instance, const Ordering& ordering, int slots,
                      const SlotSolver& solve) {
  check_budget(slots);
  const int target = target_prefix(instance, ordering);
  SlotCache cache(ordering, target, solve);

  DmectResult result{std::nullopt, {}, CostMatrix(instance.size(), slots), target, std::nullopt};
  CostMatrix& table = result.table;
  table.set(1, 0, 0.0, 1);

  // Taking k = j carries C(j, t-1) forward: "t slots or fewer".
  for (int t = 1; t <= slots; ++t) {
    for (int j = 1; j <= target; ++j) {
      std::optional<double> best;
      int best_k = -1;
      for (int k = 1; k <= j; ++k) {
        const std::optional<double> before = table.cost(k, t - 1);
        if (!before) continue;
        double candidate = *before;
        if (k < j) {
          const std::optional<PowerAllocation>& alloc = cache.get(k, j);
          if (!alloc) continue;
          candidate += alloc->cost;
        }
        if (!best || candidate < *best) {
          best = candidate;
          best_k = k;
        }
      }
      table.set(j, t, best, best_k);
    }
  }

  result.cost = table.cost(target, slots);
  if (result.cost) {
    result.schedule = trace_back(ordering, table, target, slots,
                                 [&](int k, int j) -> const auto& { return cache.get(k, j); });
  } else {
    for (int j = 2; j <= target; ++j) {
      if (!table.cost(j, slots)) {
        result.blocking = Blocking{j - 1, ordering[j - 1]};
        break;
      }
    }
  }
  return result;
}

DmectResult dmect_go(const Instance& instance, const Ordering& ordering, int slots) {
  return prefix_dp(instance, ordering, slots, cooperative_solver(instance));
}

Schedule reconstruct(const Instance& instance, const Ordering& ordering, const CostMatrix& table,
                     int j, int t, const SlotSolver& solve) {
  if (!table.cost(j, t)) throw std::invalid_argument("cannot reconstruct an infeasible cell");
  SlotCache cache(ordering, target_prefix(instance, ordering), solve);
  return trace_back(ordering, table, j, t,
                    [&](int k, int jj) -> const auto& { return cache.get(k, jj); });
}

UnconstrainedResult dmect_unconstrained(const Instance& instance, const Ordering& ordering) {
  const int target = target_prefix(instance, ordering);
  const SlotSolver solve = cooperative_solver(instance);
  SlotCache cache(ordering, target, solve);

  UnconstrainedResult result;
  result.prefix_cost.assign(target + 1, std::nullopt);
  std::vector<int> argmin(target + 1, -1);
  result.prefix_cost[1] = 0.0;
  for (int j = 2; j <= target; ++j) {
    for (int k = 1; k < j; ++k) {
      if (!result.prefix_cost[k]) continue;
      const std::optional<PowerAllocation>& alloc = cache.get(k, j);
      if (!alloc) continue;
      const double candidate = *result.prefix_cost[k] + alloc->cost;
      if (!result.prefix_cost[j] || candidate < *result.prefix_cost[j]) {
        result.prefix_cost[j] = candidate;
        argmin[j] = k;
      }
    }
  }

  result.cost = result.prefix_cost[target];
  if (result.cost) {
    for (int j = target; j > 1; j = argmin[j])
      result.schedule.slots.push_back(make_slot(ordering, argmin[j], j, *cache.get(argmin[j], j)));
    std::reverse(result.schedule.slots.begin(), result.schedule.slots.end());
  }
  return result;
}

UnicastResult unicast_ea(const Instance& instance, NodeId dest, int slots) {
  check_budget(slots);
  if (instance.accumulation() != Accumulation::ea)
    throw std::invalid_argument("exact unicast is only available under energy accumulation");
  const int n = instance.size();
  const NodeId source = instance.source();
  if (dest < 0 || dest >= n) throw std::invalid_argument("destination out of range");
  if (dest == source) throw std::invalid_argument("destination equals the source");

  UnicastResult result;
  UnicastTable& table = result.table;
  table.n = n;
  table.slots = slots;
  table.cost.assign(static_cast<std::size_t>(n) * (slots + 1), std::nullopt);
  table.parent.assign(table.cost.size(), -1);
  table.cost[table.index(source, 0)] = 0.0;
  table.parent[table.index(source, 0)] = source;

  for (int t = 1; t <= slots; ++t) {
    for (NodeId i = 0; i < n; ++i) {
      std::optional<double> best = table.at(i, t - 1);
      NodeId via = best ? i : -1;
      for (NodeId k = 0; k < n; ++k) {
        if (k == i || instance.gain(k, i) <= 0.0) continue;
        const std::optional<double> before = table.at(k, t - 1);
        if (!before) continue;
        const double candidate = *before + direct_link_power(instance.theta(), instance.gain(k, i));
        if (!best || candidate < *best) {
          best = candidate;
          via = k;
        }
      }
      table.cost[table.index(i, t)] = best;
      table.parent[table.index(i, t)] = via;
    }
  }

  result.cost = table.at(dest, slots);
  if (!result.cost) return result;

  NodeId node = dest;
  result.path.push_back(dest);
  for (int t = slots; node != source; --t) {
    const NodeId prev = table.parent_of(node, t);
    if (prev == node) continue;
    Slot slot;
    slot.senders = {prev};
    slot.receivers = {node};
    slot.powers[prev] = direct_link_power(instance.theta(), instance.gain(prev, node));
    result.schedule.slots.push_back(std::move(slot));
    result.path.push_back(prev);
    node = prev;
  }
  std::reverse(result.schedule.slots.begin(), result.schedule.slots.end());
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace dmect
