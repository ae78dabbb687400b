#include "dmect/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dmect/power.hpp"

namespace dmect {
namespace {

constexpr double kRatioTieTol = 1e-12;

struct Candidate {
  double ratio = std::numeric_limits<double>::infinity();
  int covered = 0;
  int sender = -1;  // index into the slot's sender list
  double threshold = 0.0;
  double power = 0.0;
};

bool better(const Candidate& c, const Candidate& best) {
  if (best.sender < 0) return true;
  const double tol = kRatioTieTol * best.ratio;
  if (c.ratio < best.ratio - tol) return true;
  if (c.ratio > best.ratio + tol) return false;
  if (c.covered != best.covered) return c.covered > best.covered;
  return c.sender < best.sender;
}

}  // namespace

GreedyCover greedy_slot(std::span<const NodeId> senders, std::span<const NodeId> receivers,
                        const Instance& instance) {
  const SlotProblem problem = SlotProblem::from_instance(instance, senders, receivers);
  if (auto r = problem.unreachable_receiver())
    throw InfeasibleError("receiver " + std::to_string(*r) + " has no link from any sender", *r);

  const int ns = problem.sender_count();
  const int nr = problem.receiver_count();
  const double snr = decode_snr(problem.theta());

  GreedyCover out;
  std::vector<double> level(ns, 0.0);
  std::vector<bool> covered(nr, false);
  int remaining = nr;
  std::vector<double> gains;

  while (remaining > 0) {
    Candidate best;
    for (int s = 0; s < ns; ++s) {
      gains.clear();
      for (int r = 0; r < nr; ++r)
        if (!covered[r] && problem.gain(s, r) > 0.0) gains.push_back(problem.gain(s, r));
      std::sort(gains.begin(), gains.end(), std::greater<>());
      for (std::size_t k = 0; k < gains.size(); ++k) {
        // Equal gains are reached together; only the last of a run is a level.
        if (k + 1 < gains.size() && gains[k + 1] == gains[k]) continue;
        Candidate c;
        c.covered = static_cast<int>(k + 1);
        c.sender = s;
        c.threshold = gains[k];
        c.power = snr / gains[k];
        c.ratio = c.power / c.covered;
        if (better(c, best)) best = c;
      }
    }

    level[best.sender] = std::max(level[best.sender], best.power);
    for (int r = 0; r < nr; ++r) {
      if (!covered[r] && problem.gain(best.sender, r) >= best.threshold) {
        covered[r] = true;
        --remaining;
        out.assignment[problem.receivers()[r]] = problem.senders()[best.sender];
      }
    }
  }

  PowerMap powers;
  for (int s = 0; s < ns; ++s)
    if (level[s] > 0.0) powers[problem.senders()[s]] = level[s];
  out.allocation = PowerAllocation::from_powers(std::move(powers));
  return out;
}

DmectResult noncoop_solve(const Instance& instance, const Ordering& ordering, int slots) {
  const SlotSolver solve = [&instance](const std::vector<NodeId>& senders,
                                       const std::vector<NodeId>& receivers)
      -> std::optional<PowerAllocation> {
    const SlotProblem problem = SlotProblem::from_instance(instance, senders, receivers);
    if (problem.unreachable_receiver()) return std::nullopt;
    return greedy_slot(senders, receivers, instance).allocation;
  };
  return prefix_dp(instance, ordering, slots, solve);
}

}  // namespace dmect
