#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dmect/model.hpp"

namespace dmect {

/// Cost of covering the first j ordered nodes within t slots, plus the
/// breakpoint k that achieves it. Rows j = 0..n (row 0 unused), columns
/// t = 0..T. Infeasible cells hold no value.
class CostMatrix {
 public:
  CostMatrix(int n, int slots)
      : n_(n), slots_(slots), cost_(static_cast<std::size_t>(n + 1) * (slots + 1)),
        argmin_(cost_.size(), -1) {}

  int prefixes() const noexcept { return n_; }
  int slots() const noexcept { return slots_; }
  std::optional<double> cost(int j, int t) const { return cost_[index(j, t)]; }
  int argmin(int j, int t) const { return argmin_[index(j, t)]; }
  void set(int j, int t, std::optional<double> cost, int argmin) {
    cost_[index(j, t)] = cost;
    argmin_[index(j, t)] = argmin;
  }

 private:
  std::size_t index(int j, int t) const {
    return static_cast<std::size_t>(j) * (slots_ + 1) + static_cast<std::size_t>(t);
  }

  int n_;
  int slots_;
  std::vector<std::optional<double>> cost_;
  std::vector<int> argmin_;
};

/// Where an infeasible solve gets stuck: the first ordered node that no
/// schedule within the budget can turn on.
struct Blocking {
  int position = -1;
  NodeId node = -1;
};

struct DmectResult {
  std::optional<double> cost;  // empty when infeasible
  Schedule schedule;
  CostMatrix table;
  int target = 0;  // prefix length that must be covered
  std::optional<Blocking> blocking;

  bool feasible() const noexcept { return cost.has_value(); }
};

/// Prefix length that must decode: the furthest destination's position + 1.
int target_prefix(const Instance& instance, const Ordering& ordering);

/// Slot subproblem used by the prefix DP: powers for `senders` to turn on
/// `receivers`, or nothing when no allocation exists.
using SlotSolver =
    std::function<std::optional<PowerAllocation>(const std::vector<NodeId>& senders,
                                                 const std::vector<NodeId>& receivers)>;

/// Minimum-energy schedule under a fixed ordering within `slots` slots,
/// with each slot's powers from `solve`. Shared by the cooperative and
/// non-cooperative solvers.
DmectResult prefix_dp(const Instance& instance, const Ordering& ordering, int slots,
                      const SlotSolver& solve);

/// Cooperative solve: every decoded prefix node may help in each slot.
DmectResult dmect_go(const Instance& instance, const Ordering& ordering, int slots);

/// Rebuilds the schedule that covers the first `j` nodes within `t` slots
/// from a filled table. Requires the cell to be feasible.
Schedule reconstruct(const Instance& instance, const Ordering& ordering, const CostMatrix& table,
                     int j, int t, const SlotSolver& solve);

struct UnconstrainedResult {
  std::optional<double> cost;
  Schedule schedule;
  std::vector<std::optional<double>> prefix_cost;  // C(j), j = 0..n
};

/// No delay bound: one-dimensional recurrence over breakpoints.
UnconstrainedResult dmect_unconstrained(const Instance& instance, const Ordering& ordering);

struct UnicastTable {
  int n = 0;
  int slots = 0;
  std::vector<std::optional<double>> cost;  // n x (slots + 1)
  std::vector<NodeId> parent;               // previous hop, or the node itself when carried

  std::optional<double> at(NodeId i, int t) const { return cost[index(i, t)]; }
  NodeId parent_of(NodeId i, int t) const { return parent[index(i, t)]; }
  std::size_t index(NodeId i, int t) const {
    return static_cast<std::size_t>(i) * (slots + 1) + static_cast<std::size_t>(t);
  }
};

struct UnicastResult {
  std::optional<double> cost;
  Schedule schedule;  // one hop per slot
  std::vector<NodeId> path;
  UnicastTable table;

  bool feasible() const noexcept { return cost.has_value(); }
};

/// Exact energy-accumulation unicast within `slots` hops. Throws
/// std::invalid_argument for MIA instances or dest == source.
UnicastResult unicast_ea(const Instance& instance, NodeId dest, int slots);

}  // namespace dmect
