#include "dmect/ordering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/dijkstra_shortest_paths.hpp>

#include "dmect/power.hpp"
#include "dmect/schedule.hpp"

namespace dmect {
namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                    boost::property<boost::edge_weight_t, double>>;

Ordering sorted_by(const Instance& instance, const std::vector<double>& key, bool descending) {
  std::vector<NodeId> rest;
  for (NodeId i = 0; i < instance.size(); ++i)
    if (i != instance.source()) rest.push_back(i);
  std::stable_sort(rest.begin(), rest.end(), [&](NodeId a, NodeId b) {
    return descending ? key[a] > key[b] : key[a] < key[b];
  });
  rest.insert(rest.begin(), instance.source());
  return Ordering(std::move(rest), instance.source());
}

}  // namespace

std::vector<double> shortest_path_distances(const Instance& instance) {
  const int n = instance.size();
  Graph graph(n);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (instance.gain(i, j) > 0.0)
        boost::add_edge(i, j, direct_link_power(instance.theta(), instance.gain(i, j)), graph);

  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  boost::dijkstra_shortest_paths(graph, instance.source(), boost::distance_map(dist.data()));
  // Boost marks unreached vertices with the largest finite value.
  for (double& d : dist)
    if (d == std::numeric_limits<double>::max()) d = std::numeric_limits<double>::infinity();
  return dist;
}

Ordering dijkstra_ordering(const Instance& instance) {
  const std::vector<double> dist = shortest_path_distances(instance);
  std::vector<NodeId> unreachable;
  for (NodeId i = 0; i < instance.size(); ++i)
    if (dist[i] == std::numeric_limits<double>::infinity()) unreachable.push_back(i);
  if (!unreachable.empty()) {
    std::string list;
    for (NodeId v : unreachable) list += (list.empty() ? "" : ", ") + std::to_string(v);
    throw DisconnectedError("nodes unreachable from the source: " + list, unreachable);
  }
  return sorted_by(instance, dist, false);
}

Ordering gain_ordering(const Instance& instance) {
  std::vector<double> gain(instance.size());
  for (NodeId i = 0; i < instance.size(); ++i) gain[i] = instance.gain(instance.source(), i);
  return sorted_by(instance, gain, true);
}

BruteForceResult brute_force_ordering(const Instance& instance, int slots, int cap) {
  if (instance.size() > cap)
    throw CapExceededError("brute-force ordering is capped at n = " + std::to_string(cap) +
                           " (got " + std::to_string(instance.size()) +
                           "); use the dijkstra or gain heuristic instead");

  std::vector<NodeId> rest;
  for (NodeId i = 0; i < instance.size(); ++i)
    if (i != instance.source()) rest.push_back(i);

  BruteForceResult best{Ordering::identity(instance.size(), instance.source()), std::nullopt};
  // next_permutation walks orderings in lexicographic order, so strict
  // improvement keeps the smallest tied ordering.
  do {
    std::vector<NodeId> order{instance.source()};
    order.insert(order.end(), rest.begin(), rest.end());
    Ordering ordering(std::move(order), instance.source());
    const DmectResult run = dmect_go(instance, ordering, slots);
    if (run.cost && (!best.cost || *run.cost < *best.cost)) {
      best.cost = run.cost;
      best.ordering = std::move(ordering);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

}  // namespace dmect
