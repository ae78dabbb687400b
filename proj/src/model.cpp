#include "dmect/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dmect {

std::string to_string(Accumulation mode) {
  return mode == Accumulation::ea ? "ea" : "mia";
}

Accumulation accumulation_from_string(const std::string& text) {
  if (text == "ea") return Accumulation::ea;
  if (text == "mia") return Accumulation::mia;
  throw std::invalid_argument("unknown accumulation mode '" + text + "' (expected ea or mia)");
}

GainMatrix GainMatrix::scaled(double factor) const {
  GainMatrix out = *this;
  for (double& v : out.values_) v *= factor;
  return out;
}

Instance::Instance(GainMatrix gains, NodeId source, std::vector<NodeId> destinations, double theta,
                   Accumulation accumulation, std::optional<std::vector<Point>> positions)
    : gains_(std::move(gains)),
      source_(source),
      destinations_(std::move(destinations)),
      theta_(theta),
      accumulation_(accumulation),
      positions_(std::move(positions)) {
  const int n = gains_.size();
  if (n < 1) throw std::invalid_argument("instance needs at least one node");
  if (source_ < 0 || source_ >= n) throw std::invalid_argument("source index out of range");
  if (!std::isfinite(theta_) || theta_ <= 0.0)
    throw std::invalid_argument("theta must be finite and strictly positive");
  if (destinations_.empty()) throw std::invalid_argument("destination set is empty");

  std::sort(destinations_.begin(), destinations_.end());
  destinations_.erase(std::unique(destinations_.begin(), destinations_.end()),
                      destinations_.end());
  for (NodeId d : destinations_) {
    if (d < 0 || d >= n) throw std::invalid_argument("destination index out of range");
    if (d == source_) throw std::invalid_argument("source cannot be a destination");
  }

  for (NodeId i = 0; i < n; ++i) {
    if (gains_(i, i) != 0.0) throw std::invalid_argument("gain matrix diagonal must be zero");
    for (NodeId j = 0; j < n; ++j) {
      const double h = gains_(i, j);
      if (!std::isfinite(h) || h < 0.0)
        throw std::invalid_argument("gains must be finite and nonnegative");
      if (h != gains_(j, i)) throw std::invalid_argument("gain matrix must be symmetric");
    }
  }
  if (positions_ && static_cast<int>(positions_->size()) != n)
    throw std::invalid_argument("positions must list one point per node");
}

bool Instance::is_destination(NodeId node) const {
  return std::binary_search(destinations_.begin(), destinations_.end(), node);
}

Instance Instance::with_accumulation(Accumulation mode) const {
  Instance copy = *this;
  copy.accumulation_ = mode;
  return copy;
}

Instance Instance::with_destinations(std::vector<NodeId> destinations) const {
  return Instance(gains_, source_, std::move(destinations), theta_, accumulation_, positions_);
}

Instance Instance::as_broadcast() const {
  std::vector<NodeId> all;
  for (NodeId i = 0; i < size(); ++i)
    if (i != source_) all.push_back(i);
  return with_destinations(std::move(all));
}

Instance Instance::with_scaled_gains(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("gain scale factor must be positive");
  return Instance(gains_.scaled(factor), source_, destinations_, theta_, accumulation_,
                  positions_);
}

Ordering::Ordering(std::vector<NodeId> order, NodeId source)
    : order_(std::move(order)), positions_(order_.size(), -1) {
  const int n = static_cast<int>(order_.size());
  if (n == 0 || order_[0] != source)
    throw std::invalid_argument("ordering must start with the source");
  for (int pos = 0; pos < n; ++pos) {
    const NodeId node = order_[pos];
    if (node < 0 || node >= n) throw std::invalid_argument("ordering index out of range");
    if (positions_[node] != -1) throw std::invalid_argument("ordering repeats a node");
    positions_[node] = pos;
  }
}

Ordering Ordering::identity(int n, NodeId source) {
  std::vector<NodeId> order{source};
  for (NodeId i = 0; i < n; ++i)
    if (i != source) order.push_back(i);
  return Ordering(std::move(order), source);
}

std::vector<NodeId> Ordering::slice(int first, int last) const {
  return {order_.begin() + first, order_.begin() + last};
}

PowerAllocation PowerAllocation::from_powers(PowerMap powers) {
  PowerAllocation out;
  out.powers = std::move(powers);
  for (const auto& [node, p] : out.powers) out.cost += p;
  return out;
}

double PowerAllocation::power_of(NodeId node) const {
  auto it = powers.find(node);
  return it == powers.end() ? 0.0 : it->second;
}

double Schedule::total_power() const {
  double total = 0.0;
  for (const Slot& slot : slots)
    for (const auto& [node, p] : slot.powers) total += p;
  return total;
}

double accumulated_info(std::span<const NodeId> senders, const PowerMap& powers, NodeId receiver,
                        const Instance& instance) {
  double snr = 0.0;
  double info = 0.0;
  for (NodeId s : senders) {
    auto it = powers.find(s);
    if (it == powers.end()) continue;
    const double term = it->second * instance.gain(s, receiver);
    if (instance.accumulation() == Accumulation::ea)
      snr += term;
    else
      info += std::log1p(term);
  }
  return instance.accumulation() == Accumulation::ea ? std::log1p(snr) : info;
}

std::string to_string(Violation violation) {
  switch (violation) {
    case Violation::none: return "none";
    case Violation::bad_index: return "bad_index";
    case Violation::negative_power: return "negative_power";
    case Violation::power_without_sender: return "power_without_sender";
    case Violation::half_duplex: return "half_duplex";
    case Violation::ineligible_sender: return "ineligible_sender";
    case Violation::repeated_decode: return "repeated_decode";
    case Violation::decoding: return "decoding";
    case Violation::destination_uncovered: return "destination_uncovered";
    case Violation::slot_budget: return "slot_budget";
  }
  return "unknown";
}

namespace {

Verdict violated(Violation v, int slot, NodeId node, std::string message) {
  return Verdict{v, slot, node, std::move(message)};
}

std::string at(int slot, NodeId node) {
  return " (slot " + std::to_string(slot) + ", node " + std::to_string(node) + ")";
}

}  // namespace

Verdict verify_schedule(const Instance& instance, const Schedule& schedule, double tolerance,
                        std::optional<int> slot_budget) {
  const int n = instance.size();
  const auto in_range = [n](NodeId v) { return v >= 0 && v < n; };

  if (slot_budget && static_cast<int>(schedule.slots.size()) > *slot_budget)
    return violated(Violation::slot_budget, 0, -1,
                    "schedule uses " + std::to_string(schedule.slots.size()) +
                        " slots, budget is " + std::to_string(*slot_budget));

  std::vector<bool> decoded(n, false);
  decoded[instance.source()] = true;

  for (std::size_t t = 0; t < schedule.slots.size(); ++t) {
    const Slot& slot = schedule.slots[t];
    const int label = static_cast<int>(t) + 1;

    for (NodeId v : slot.senders)
      if (!in_range(v)) return violated(Violation::bad_index, label, v, "sender out of range");
    for (NodeId v : slot.receivers)
      if (!in_range(v)) return violated(Violation::bad_index, label, v, "receiver out of range");

    const std::set<NodeId> senders(slot.senders.begin(), slot.senders.end());
    for (const auto& [node, p] : slot.powers) {
      if (!senders.contains(node))
        return violated(Violation::power_without_sender, label, node,
                        "power assigned to a non-sender" + at(label, node));
      if (!(p >= 0.0) || !std::isfinite(p))
        return violated(Violation::negative_power, label, node,
                        "power must be finite and nonnegative" + at(label, node));
    }
    for (NodeId s : slot.senders) {
      if (!decoded[s])
        return violated(Violation::ineligible_sender, label, s,
                        "node transmits before decoding" + at(label, s));
    }
    std::set<NodeId> seen;
    for (NodeId r : slot.receivers) {
      if (senders.contains(r))
        return violated(Violation::half_duplex, label, r,
                        "node both sends and receives" + at(label, r));
      if (decoded[r] || !seen.insert(r).second)
        return violated(Violation::repeated_decode, label, r,
                        "node already decoded" + at(label, r));
    }
    for (NodeId r : slot.receivers) {
      const double y = accumulated_info(slot.senders, slot.powers, r, instance);
      if (y < instance.theta() - tolerance)
        return violated(Violation::decoding, label, r,
                        "accumulated information " + std::to_string(y) + " below threshold " +
                            std::to_string(instance.theta()) + at(label, r));
    }
    for (NodeId r : slot.receivers) decoded[r] = true;
  }

  for (NodeId d : instance.destinations()) {
    if (!decoded[d])
      return violated(Violation::destination_uncovered, 0, d,
                      "destination " + std::to_string(d) + " never decodes");
  }
  return {};
}

}  // namespace dmect
