#pragma once

#include <optional>
#include <span>

#include "dmect/model.hpp"

// Brute-force references for testing. None of these touch the DP code; they
// share only the single-slot solver.

namespace dmect {

inline constexpr int kPartitionMaxNodes = 10;
inline constexpr int kPartitionMaxSlots = 5;
inline constexpr int kGlobalMaxNodes = 6;
inline constexpr int kIntegralMaxReceivers = 12;

/// Minimum over every nondecreasing breakpoint sequence along `ordering`
/// of the summed slot costs, by plain enumeration. Empty if infeasible.
std::optional<double> exhaustive_partition(const Instance& instance, const Ordering& ordering,
                                           int slots);

/// Minimum over every strictly growing chain of decoded sets from {source}
/// that ends covering all destinations within `slots` steps.
std::optional<double> exhaustive_global(const Instance& instance, int slots);

/// Exact single-transmitter cover of one slot (each receiver hears exactly
/// one sender at its direct-link power). Throws InfeasibleError if a
/// receiver is unreachable.
double exact_integral_slot(std::span<const NodeId> senders, std::span<const NodeId> receivers,
                           const Instance& instance);

}  // namespace dmect
