#pragma once

#include <map>
#include <span>

#include "dmect/model.hpp"
#include "dmect/schedule.hpp"

namespace dmect {

/// Non-cooperative slot: each receiver decodes from exactly one sender.
struct GreedyCover {
  PowerAllocation allocation;
  std::map<NodeId, NodeId> assignment;  // receiver -> covering sender
};

/// Greedy weighted set cover over (sender, power level) candidates, where a
/// level is the power that reaches one of the sender's uncovered receivers
/// by direct link. Picks the lowest power per newly covered receiver; ties
/// go to more coverage, then to the lower sender index. A sender picked
/// twice transmits at the larger of its powers.
/// Throws InfeasibleError if a receiver has zero gain from every sender.
GreedyCover greedy_slot(std::span<const NodeId> senders, std::span<const NodeId> receivers,
                        const Instance& instance);

/// The prefix DP with greedy_slot in place of the cooperative allocation.
DmectResult noncoop_solve(const Instance& instance, const Ordering& ordering, int slots);

}  // namespace dmect
