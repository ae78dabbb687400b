#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmect/errors.hpp"

namespace dmect {

enum class Accumulation { ea, mia };

std::string to_string(Accumulation mode);
Accumulation accumulation_from_string(const std::string& text);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Dense symmetric matrix of linear power gains, noise normalized to one.
class GainMatrix {
 public:
  GainMatrix() = default;
  explicit GainMatrix(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const noexcept { return n_; }
  double operator()(NodeId i, NodeId j) const { return values_[index(i, j)]; }
  double& operator()(NodeId i, NodeId j) { return values_[index(i, j)]; }

  /// Writes h(i,j) and h(j,i).
  void set_symmetric(NodeId i, NodeId j, double gain) {
    (*this)(i, j) = gain;
    (*this)(j, i) = gain;
  }

  GainMatrix scaled(double factor) const;

 private:
  std::size_t index(NodeId i, NodeId j) const {
    return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> values_;
};

/// A static network: gains, a source, the nodes that must decode, and the
/// per-message decoding threshold in nats/Hz.
///
/// Construction validates every invariant and throws std::invalid_argument
/// on violation: symmetric nonnegative gains with a zero diagonal, a source
/// that is not a destination, in-range indices, and a finite positive theta.
class Instance {
 public:
  Instance(GainMatrix gains, NodeId source, std::vector<NodeId> destinations, double theta,
           Accumulation accumulation, std::optional<std::vector<Point>> positions = std::nullopt);

  int size() const noexcept { return gains_.size(); }
  const GainMatrix& gains() const noexcept { return gains_; }
  double gain(NodeId i, NodeId j) const { return gains_(i, j); }
  NodeId source() const noexcept { return source_; }
  const std::vector<NodeId>& destinations() const noexcept { return destinations_; }
  double theta() const noexcept { return theta_; }
  Accumulation accumulation() const noexcept { return accumulation_; }
  const std::optional<std::vector<Point>>& positions() const noexcept { return positions_; }

  bool is_destination(NodeId node) const;
  bool is_broadcast() const { return static_cast<int>(destinations_.size()) == size() - 1; }

  Instance with_accumulation(Accumulation mode) const;
  Instance with_destinations(std::vector<NodeId> destinations) const;
  Instance as_broadcast() const;
  Instance with_scaled_gains(double factor) const;

 private:
  GainMatrix gains_;
  NodeId source_;
  std::vector<NodeId> destinations_;  // sorted, unique
  double theta_;
  Accumulation accumulation_;
  std::optional<std::vector<Point>> positions_;
};

/// A permutation of all node indices starting with the source. A decoded
/// node may transmit only once every node ahead of it has decoded.
class Ordering {
 public:
  /// Throws std::invalid_argument unless `order` is a permutation of
  /// [0, order.size()) whose first element is `source`.
  Ordering(std::vector<NodeId> order, NodeId source);

  static Ordering identity(int n, NodeId source);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  NodeId operator[](int position) const { return order_[position]; }
  int position_of(NodeId node) const { return positions_[node]; }
  const std::vector<NodeId>& nodes() const noexcept { return order_; }

  /// Nodes at positions [first, last).
  std::vector<NodeId> slice(int first, int last) const;

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.order_ == b.order_; }

 private:
  std::vector<NodeId> order_;
  std::vector<int> positions_;
};

using PowerMap = std::map<NodeId, double>;

/// Per-sender powers for one slot. Senders that stay silent are absent.
struct PowerAllocation {
  PowerMap powers;
  double cost = 0.0;

  static PowerAllocation from_powers(PowerMap powers);
  double power_of(NodeId node) const;
};

struct Slot {
  std::vector<NodeId> senders;
  std::vector<NodeId> receivers;
  PowerMap powers;
};

struct Schedule {
  std::vector<Slot> slots;

  double total_power() const;
};

/// Information (nats/Hz) collected by `receiver` in one slot. Senders missing
/// from `powers` contribute nothing.
double accumulated_info(std::span<const NodeId> senders, const PowerMap& powers, NodeId receiver,
                        const Instance& instance);

enum class Violation {
  none,
  bad_index,
  negative_power,
  power_without_sender,
  half_duplex,
  ineligible_sender,
  repeated_decode,
  decoding,
  destination_uncovered,
  slot_budget,
};

std::string to_string(Violation violation);

struct Verdict {
  Violation violation = Violation::none;
  int slot = 0;  // 1-based; 0 when the violation is not tied to a slot
  NodeId node = -1;
  std::string message;

  bool feasible() const noexcept { return violation == Violation::none; }
};

inline constexpr double kDecodingTolerance = 1e-6;

/// Checks a schedule against the decoding, eligibility, half-duplex and
/// coverage constraints, reporting the first violation found. When
/// `slot_budget` is given, schedules longer than it are rejected too.
Verdict verify_schedule(const Instance& instance, const Schedule& schedule,
                        double tolerance = kDecodingTolerance,
                        std::optional<int> slot_budget = std::nullopt);

}  // namespace dmect
