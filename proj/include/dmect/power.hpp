#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dmect/model.hpp"

namespace dmect {

/// SNR a single link must deliver to meet `theta`: e^theta - 1.
double decode_snr(double theta);

/// Power for one node to turn on a neighbour by direct transmission.
/// Infinite when the gain is zero.
double direct_link_power(double theta, double gain);

/// One slot's covering problem: every receiver must reach the threshold
/// from the senders' combined transmission at minimum total power.
class SlotProblem {
 public:
  /// Explicit gains, row-major |senders| x |receivers|.
  SlotProblem(std::vector<NodeId> senders, std::vector<NodeId> receivers,
              std::vector<double> gains, double theta, Accumulation accumulation);

  /// Extracts the sub-matrix from `instance`. Sender and receiver lists are
  /// sorted and deduplicated so equal sets always produce equal problems.
  static SlotProblem from_instance(const Instance& instance, std::span<const NodeId> senders,
                                   std::span<const NodeId> receivers);

  const std::vector<NodeId>& senders() const noexcept { return senders_; }
  const std::vector<NodeId>& receivers() const noexcept { return receivers_; }
  int sender_count() const noexcept { return static_cast<int>(senders_.size()); }
  int receiver_count() const noexcept { return static_cast<int>(receivers_.size()); }
  double gain(int sender_idx, int receiver_idx) const {
    return gains_[static_cast<std::size_t>(sender_idx) * receivers_.size() + receiver_idx];
  }
  double theta() const noexcept { return theta_; }
  Accumulation accumulation() const noexcept { return accumulation_; }

  /// First receiver with zero gain from every sender, if any.
  std::optional<NodeId> unreachable_receiver() const;

 private:
  std::vector<NodeId> senders_;
  std::vector<NodeId> receivers_;
  std::vector<double> gains_;
  double theta_;
  Accumulation accumulation_;
};

/// Globally optimal powers for one slot. EA is solved as a linear program,
/// MIA by the barrier method. Throws InfeasibleError naming the first
/// unreachable receiver.
PowerAllocation solve_slot(const SlotProblem& problem);

/// Dense simplex on the EA covering LP (Bland's rule). Mode field ignored.
PowerAllocation ea_lp(const SlotProblem& problem);

struct BarrierOptions {
  double gap_tolerance = 1e-10;  // relative to max(1, objective)
  double growth = 10.0;          // barrier weight multiplier per outer step
  int max_newton_steps = 2000;
  bool polish = true;            // active-set KKT refinement after the barrier
};

/// Log-barrier Newton method for the MIA covering problem. Mode field ignored.
/// Throws ConvergenceError when the Newton budget runs out.
PowerAllocation mia_barrier(const SlotProblem& problem, const BarrierOptions& options = {});

/// Closed-form MIA optimum for a single receiver. Powers are keyed by the
/// position of each gain in `gains`. Throws InfeasibleError if all gains are
/// zero.
PowerAllocation waterfill_single_receiver(std::span<const double> gains, double theta);

}  // namespace dmect
