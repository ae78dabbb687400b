#include "dmect/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dmect {

double decode_snr(double theta) { return std::expm1(theta); }

double direct_link_power(double theta, double gain) {
  if (gain <= 0.0) return std::numeric_limits<double>::infinity();
  return decode_snr(theta) / gain;
}

SlotProblem::SlotProblem(std::vector<NodeId> senders, std::vector<NodeId> receivers,
                         std::vector<double> gains, double theta, Accumulation accumulation)
    : senders_(std::move(senders)),
      receivers_(std::move(receivers)),
      gains_(std::move(gains)),
      theta_(theta),
      accumulation_(accumulation) {
  if (gains_.size() != senders_.size() * receivers_.size())
    throw std::invalid_argument("slot gain matrix has the wrong shape");
  if (!std::isfinite(theta_) || theta_ <= 0.0)
    throw std::invalid_argument("theta must be finite and strictly positive");
  for (double h : gains_)
    if (!std::isfinite(h) || h < 0.0) throw std::invalid_argument("gains must be nonnegative");
  for (NodeId s : senders_)
    if (std::find(receivers_.begin(), receivers_.end(), s) != receivers_.end())
      throw std::invalid_argument("a node cannot send and receive in the same slot");
}

SlotProblem SlotProblem::from_instance(const Instance& instance, std::span<const NodeId> senders,
                                       std::span<const NodeId> receivers) {
  auto canonical = [&](std::span<const NodeId> nodes) {
    std::vector<NodeId> out(nodes.begin(), nodes.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (NodeId v : out)
      if (v < 0 || v >= instance.size()) throw std::invalid_argument("node index out of range");
    return out;
  };
  std::vector<NodeId> s = canonical(senders);
  std::vector<NodeId> r = canonical(receivers);
  std::vector<double> gains;
  gains.reserve(s.size() * r.size());
  for (NodeId a : s)
    for (NodeId b : r) gains.push_back(instance.gain(a, b));
  return SlotProblem(std::move(s), std::move(r), std::move(gains), instance.theta(),
                     instance.accumulation());
}

std::optional<NodeId> SlotProblem::unreachable_receiver() const {
  for (int j = 0; j < receiver_count(); ++j) {
    bool reached = false;
    for (int i = 0; i < sender_count() && !reached; ++i) reached = gain(i, j) > 0.0;
    if (!reached) return receivers_[j];
  }
  return std::nullopt;
}

PowerAllocation solve_slot(const SlotProblem& problem) {
  if (problem.receiver_count() == 0) return {};
  if (auto r = problem.unreachable_receiver())
    throw InfeasibleError("receiver " + std::to_string(*r) + " has no link from any sender", *r);

  // One sender: both modes need the weakest receiver's direct-link power.
  if (problem.sender_count() == 1) {
    double weakest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < problem.receiver_count(); ++j) weakest = std::min(weakest, problem.gain(0, j));
    return PowerAllocation::from_powers(
        {{problem.senders()[0], direct_link_power(problem.theta(), weakest)}});
  }
  return problem.accumulation() == Accumulation::ea ? ea_lp(problem) : mia_barrier(problem);
}

PowerAllocation waterfill_single_receiver(std::span<const double> gains, double theta) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(gains.size()); ++i)
    if (gains[i] > 0.0) idx.push_back(i);
  if (idx.empty()) throw InfeasibleError("all channel gains are zero", -1);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return gains[a] > gains[b]; });

  // With the m strongest channels active, p_i = level - 1/h_i and the
  // constraint sum log(level * h_i) = theta fixes the level.
  double log_sum = 0.0;
  double level = 0.0;
  std::size_t active = 0;
  while (active < idx.size()) {
    log_sum += std::log(gains[idx[active]]);
    ++active;
    level = std::exp((theta - log_sum) / static_cast<double>(active));
    const double next_floor =
        active < idx.size() ? 1.0 / gains[idx[active]] : std::numeric_limits<double>::infinity();
    if (level <= next_floor) break;
  }

  PowerMap powers;
  for (std::size_t k = 0; k < active; ++k) {
    const double p = level - 1.0 / gains[idx[k]];
    if (p > 0.0) powers[idx[k]] = p;
  }
  return PowerAllocation::from_powers(std::move(powers));
}

}  // namespace dmect
