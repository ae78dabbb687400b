#pragma once

#include <optional>
#include <vector>

#include "dmect/model.hpp"

namespace dmect {

/// Single-source shortest-path distances from the source, with each link
/// weighted by its direct-transmission power (e^theta - 1) / h_ij. Links
/// with zero gain are absent; unreachable nodes get +infinity.
std::vector<double> shortest_path_distances(const Instance& instance);

/// Nodes by increasing shortest-path distance, ties by index.
/// Throws DisconnectedError listing unreachable nodes.
Ordering dijkstra_ordering(const Instance& instance);

/// Nodes by decreasing gain from the source, ties by index.
Ordering gain_ordering(const Instance& instance);

struct BruteForceResult {
  Ordering ordering;
  std::optional<double> cost;
};

inline constexpr int kBruteForceCap = 8;

/// Exhaustive search over all (n-1)! orderings for the cheapest dmect_go
/// schedule; ties go to the lexicographically smallest ordering.
/// Throws CapExceededError when n > cap.
BruteForceResult brute_force_ordering(const Instance& instance, int slots,
                                      int cap = kBruteForceCap);

}  // namespace dmect
