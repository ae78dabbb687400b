#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dmect/baseline.hpp"
#include "dmect/oracle.hpp"
#include "dmect/schedule.hpp"
#include "test_support.hpp"

namespace dmect {
namespace {

using testing::random_instance;
using testing::uniform_int;

double slot_cost(const Instance& inst, const std::vector<NodeId>& s, const std::vector<NodeId>& r) {
  return solve_slot(SlotProblem::from_instance(inst, s, r)).cost;
}

std::vector<NodeId> all_but_source(const Instance& inst) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < inst.size(); ++i)
    if (i != inst.source()) out.push_back(i);
  return out;
}

TEST(ExhaustivePartition, Examples) {
  const Instance two = testing::pair(0.5);
  EXPECT_DOUBLE_EQ(*exhaustive_partition(two, Ordering::identity(2, 0), 1), 2.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = random_instance(6, seed, seed % 2 ? Accumulation::mia : Accumulation::ea);
    EXPECT_EQ(*exhaustive_partition(inst, Ordering::identity(6, 0), 1),
              slot_cost(inst, {0}, all_but_source(inst)));
  }
  EXPECT_NEAR(*exhaustive_partition(testing::line3(), Ordering::identity(3, 0), 2), 2.0, 1e-12);
}

TEST(ExhaustiveGlobal, Examples) {
  EXPECT_DOUBLE_EQ(*exhaustive_global(testing::pair(0.5), 1), 2.0);
  GainMatrix g(4);
  for (NodeId i = 1; i < 4; ++i) g.set_symmetric(0, i, 0.5 * i);
  const Instance star(g, 0, {1, 2, 3}, std::log(2.0), Accumulation::mia);
  EXPECT_EQ(*exhaustive_global(star, 1), slot_cost(star, {0}, {1, 2, 3}));
}

TEST(ExhaustiveGlobal, EqualsBestOrdering) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 2, 5);
    const int slots = uniform_int(rng, 1, 3);
    Instance inst = random_instance(n, 50 + trial, trial % 2 ? Accumulation::mia : Accumulation::ea);
    if (trial % 3 == 0) inst = testing::random_multicast(inst, rng);
    std::vector<NodeId> rest = all_but_source(inst);
    double best = INFINITY;
    do {
      std::vector<NodeId> order{inst.source()};
      order.insert(order.end(), rest.begin(), rest.end());
      const DmectResult r = dmect_go(inst, Ordering(order, inst.source()), slots);
      if (r.feasible()) best = std::min(best, *r.cost);
    } while (std::next_permutation(rest.begin(), rest.end()));
    EXPECT_NEAR(*exhaustive_global(inst, slots), best, 1e-7);
  }
}

TEST(ExactIntegral, Examples) {
  const Instance inst = random_instance(5, 12);
  const std::vector<NodeId> tx{0, 1, 2};
  const std::vector<NodeId> rx{4};
  double best = INFINITY;
  for (NodeId s : tx) best = std::min(best, decode_snr(inst.theta()) / inst.gain(s, 4));
  EXPECT_DOUBLE_EQ(exact_integral_slot(tx, rx, inst), best);
}

TEST(ExactIntegral, SandwichedBetweenCooperativeAndGreedy) {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = random_instance(8, 4000 + trial, trial % 2 ? Accumulation::mia : Accumulation::ea);
    const std::vector<NodeId> tx{0, 1, 2};
    const std::vector<NodeId> rx{3, 4, 5, 6, 7};
    const double coop = slot_cost(inst, tx, rx);
    const double exact = exact_integral_slot(tx, rx, inst);
    const double greedy = greedy_slot(tx, rx, inst).allocation.cost;
    EXPECT_LE(coop, exact * (1.0 + 1e-9));
    EXPECT_LE(exact, greedy * (1.0 + 1e-12));
  }
}

TEST(Oracle, CapsAreHardErrors) {
  const Instance big = random_instance(11, 1);
  EXPECT_THROW(exhaustive_partition(big, Ordering::identity(11, 0), 2), CapExceededError);
  const Instance mid = random_instance(6, 1);
  EXPECT_THROW(exhaustive_partition(mid, Ordering::identity(6, 0), 6), CapExceededError);
  EXPECT_THROW(exhaustive_global(random_instance(7, 1), 2), CapExceededError);
  const Instance wide = random_instance(14, 1);
  std::vector<NodeId> rx;
  for (NodeId i = 1; i < 14; ++i) rx.push_back(i);
  EXPECT_THROW(exact_integral_slot(std::vector<NodeId>{0}, rx, wide), CapExceededError);
}

}  // namespace
}  // namespace dmect
