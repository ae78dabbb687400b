// EA slot allocation as a linear program.
//
// Primal:  min sum_s w_s p_s   s.t.  sum_s h_sr p_s >= e^theta - 1,  p >= 0.
// We run the primal simplex on its dual,
//          max sum_r y_r       s.t.  sum_r h_sr y_r <= w_s,          y >= 0,
// whose slack basis is feasible from the start, and read the primal powers
// off the reduced costs of the slack columns. Receiver columns are
// equilibrated by their best gain. The weights w_s = 1 + s * kTieWeight make
// lower-indexed senders marginally cheaper so that degenerate optima resolve
// toward them; reported costs use the unweighted sum.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dmect/power.hpp"

namespace dmect {
namespace {

constexpr double kTieWeight = 0x1p-44;
constexpr double kPivotTol = 1e-12;
constexpr double kCostTol = 1e-12;

class DualTableau {
 public:
  DualTableau(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0), rhs_(rows, 0.0),
        z_(cols, 0.0), basis_(rows, 0) {}

  double& a(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double& rhs(int i) { return rhs_[i]; }
  double& z(int j) { return z_[j]; }
  int& basis(int i) { return basis_[i]; }

  void pivot(int row, int col) {
    const double inv = 1.0 / a(row, col);
    for (int j = 0; j < cols_; ++j) a(row, j) *= inv;
    rhs_[row] *= inv;
    a(row, col) = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const double f = a(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < cols_; ++j) a(i, j) -= f * a(row, j);
      rhs_[i] -= f * rhs_[row];
      a(i, col) = 0.0;
    }
    const double f = z_[col];
    if (f != 0.0) {
      for (int j = 0; j < cols_; ++j) z_[j] -= f * a(row, j);
      z_[col] = 0.0;
    }
    basis_[row] = col;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> a_;
  std::vector<double> rhs_;
  std::vector<double> z_;
  std::vector<int> basis_;
};

}  // namespace

PowerAllocation ea_lp(const SlotProblem& problem) {
  const int senders = problem.sender_count();
  const int receivers = problem.receiver_count();
  if (receivers == 0) return {};
  if (auto r = problem.unreachable_receiver())
    throw InfeasibleError("receiver " + std::to_string(*r) + " has no link from any sender", *r);

  std::vector<double> best(receivers, 0.0);
  for (int j = 0; j < receivers; ++j)
    for (int i = 0; i < senders; ++i) best[j] = std::max(best[j], problem.gain(i, j));

  // Columns: [0, receivers) scaled duals y_r * best_r, then one slack per sender.
  DualTableau tab(senders, receivers + senders);
  double cost_scale = 0.0;
  for (int i = 0; i < senders; ++i) {
    for (int j = 0; j < receivers; ++j) tab.a(i, j) = problem.gain(i, j) / best[j];
    tab.a(i, receivers + i) = 1.0;
    tab.rhs(i) = 1.0 + i * kTieWeight;
    tab.basis(i) = receivers + i;
  }
  for (int j = 0; j < receivers; ++j) {
    tab.z(j) = -1.0 / best[j];
    cost_scale = std::max(cost_scale, 1.0 / best[j]);
  }

  const int max_pivots = 50 * (senders + receivers) + 100;
  for (int iter = 0;; ++iter) {
    if (iter > max_pivots) throw ConvergenceError("simplex pivot budget exhausted");

    // Bland: lowest-index improving column, lowest-index basic variable on ratio ties.
    int entering = -1;
    for (int j = 0; j < receivers + senders; ++j) {
      if (tab.z(j) < -kCostTol * cost_scale) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < senders; ++i) {
      const double coef = tab.a(i, entering);
      if (coef <= kPivotTol) continue;
      const double ratio = tab.rhs(i) / coef;
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis(i) < tab.basis(leaving))) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) {
      // Unbounded dual: the receiver column has no usable sender.
      const NodeId r = entering < receivers ? problem.receivers()[entering] : -1;
      throw InfeasibleError("receiver " + std::to_string(r) + " cannot be covered", r);
    }
    tab.pivot(leaving, entering);
  }

  const double snr = decode_snr(problem.theta());
  PowerMap powers;
  for (int i = 0; i < senders; ++i) {
    const double price = tab.z(receivers + i);
    if (price > 0.0) powers[problem.senders()[i]] = snr * price;
  }
  return PowerAllocation::from_powers(std::move(powers));
}

}  // namespace dmect
