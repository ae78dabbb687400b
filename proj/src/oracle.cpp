#include "dmect/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

#include "dmect/power.hpp"

namespace dmect {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<double> slot_cost(const Instance& instance, std::span<const NodeId> senders,
                                std::span<const NodeId> receivers) {
  try {
    return solve_slot(SlotProblem::from_instance(instance, senders, receivers)).cost;
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

struct PartitionSearch {
  const Instance& instance;
  const Ordering& ordering;
  int slots;
  int target;
  double best = kInf;

  // Slot t (1-based) starts with `prev` nodes decoded.
  void extend(int t, int prev, double spent) {
    const int lo = t == slots ? target : prev;
    for (int k = lo; k <= target; ++k) {
      double total = spent;
      if (k > prev) {
        const std::optional<double> c =
            slot_cost(instance, ordering.slice(0, prev), ordering.slice(prev, k));
        if (!c) continue;
        total += *c;
      }
      if (t == slots)
        best = std::min(best, total);
      else
        extend(t + 1, k, total);
    }
  }
};

std::vector<NodeId> members(unsigned mask, int n) {
  std::vector<NodeId> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

struct GlobalSearch {
  const Instance& instance;
  unsigned all;
  unsigned wanted;
  std::map<std::pair<unsigned, unsigned>, std::optional<double>> slot_memo;

  const std::optional<double>& cost(unsigned decoded, unsigned fresh) {
    auto [it, inserted] = slot_memo.try_emplace({decoded, fresh});
    if (inserted)
      it->second = slot_cost(instance, members(decoded, instance.size()),
                             members(fresh, instance.size()));
    return it->second;
  }

  double best_from(unsigned decoded, int slots_left) {
    if ((decoded & wanted) == wanted) return 0.0;
    if (slots_left == 0) return kInf;
    double best = kInf;
    const unsigned rest = all & ~decoded;
    for (unsigned fresh = rest; fresh != 0; fresh = (fresh - 1) & rest) {
      const std::optional<double>& c = cost(decoded, fresh);
      if (!c) continue;
      best = std::min(best, *c + best_from(decoded | fresh, slots_left - 1));
    }
    return best;
  }
};

}  // namespace

std::optional<double> exhaustive_partition(const Instance& instance, const Ordering& ordering,
                                           int slots) {
  if (instance.size() > kPartitionMaxNodes || slots > kPartitionMaxSlots)
    throw CapExceededError("exhaustive_partition is capped at n <= 10, T <= 5");
  if (slots < 1) throw std::invalid_argument("slot budget must be at least 1");
  if (ordering.size() != instance.size() || ordering[0] != instance.source())
    throw std::invalid_argument("ordering does not match the instance");

  int target = 0;
  for (NodeId d : instance.destinations()) target = std::max(target, ordering.position_of(d) + 1);

  PartitionSearch search{instance, ordering, slots, target};
  search.extend(1, 1, 0.0);
  if (search.best == kInf) return std::nullopt;
  return search.best;
}

std::optional<double> exhaustive_global(const Instance& instance, int slots) {
  const int n = instance.size();
  if (n > kGlobalMaxNodes) throw CapExceededError("exhaustive_global is capped at n <= 6");
  if (slots < 1) throw std::invalid_argument("slot budget must be at least 1");

  unsigned wanted = 0;
  for (NodeId d : instance.destinations()) wanted |= 1u << d;
  GlobalSearch search{instance, (1u << n) - 1, wanted, {}};
  const double best = search.best_from(1u << instance.source(), std::min(slots, n - 1));
  if (best == kInf) return std::nullopt;
  return best;
}

double exact_integral_slot(std::span<const NodeId> senders, std::span<const NodeId> receivers,
                           const Instance& instance) {
  const SlotProblem problem = SlotProblem::from_instance(instance, senders, receivers);
  const int nr = problem.receiver_count();
  if (nr > kIntegralMaxReceivers)
    throw CapExceededError("exact_integral_slot is capped at 12 receivers");
  if (auto r = problem.unreachable_receiver())
    throw InfeasibleError("receiver " + std::to_string(*r) + " has no link from any sender", *r);
  if (nr == 0) return 0.0;

  const double snr = decode_snr(problem.theta());
  const unsigned full = (1u << nr) - 1;
  std::vector<double> best(full + 1, kInf);
  best[0] = 0.0;

  // Each sender picks at most one power level; a level is identified by the
  // receiver whose gain it just reaches.
  for (int s = 0; s < problem.sender_count(); ++s) {
    std::vector<double> next = best;
    for (int anchor = 0; anchor < nr; ++anchor) {
      const double threshold = problem.gain(s, anchor);
      if (threshold <= 0.0) continue;
      unsigned reach = 0;
      for (int r = 0; r < nr; ++r)
        if (problem.gain(s, r) >= threshold) reach |= 1u << r;
      const double power = snr / threshold;
      for (unsigned mask = 0; mask <= full; ++mask) {
        if (best[mask] == kInf) continue;
        next[mask | reach] = std::min(next[mask | reach], best[mask] + power);
      }
    }
    best = std::move(next);
  }
  return best[full];
}

}  // namespace dmect
