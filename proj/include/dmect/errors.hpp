#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dmect {

using NodeId = int;

/// A slot (or single-link) covering problem has a receiver that no sender can reach.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, NodeId receiver)
      : std::runtime_error(what), receiver_(receiver) {}

  NodeId receiver() const noexcept { return receiver_; }

 private:
  NodeId receiver_;
};

/// An exhaustive routine was asked for a problem larger than its hard cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some nodes cannot be reached from the source over nonzero-gain links.
class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError(const std::string& what, std::vector<NodeId> unreachable)
      : std::runtime_error(what), unreachable_(std::move(unreachable)) {}

  const std::vector<NodeId>& unreachable() const noexcept { return unreachable_; }

 private:
  std::vector<NodeId> unreachable_;
};

/// The interior-point solver hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dmect
