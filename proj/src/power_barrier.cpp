// MIA slot allocation:
//
//   min sum_s p_s   s.t.   g_r(p) = sum_s log(1 + p_s h_sr) - theta >= 0,   p >= 0.
//
// Each g_r is concave, so the feasible set is convex. A log-barrier Newton
// method brings the iterate close to the optimum; a Newton solve on the KKT
// system of the detected active set then lands on it to machine precision.
// If the active-set solve does not certify (degenerate data), the barrier
// iterate is returned as is.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "dmect/power.hpp"

namespace dmect {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPolishFrom = 1e-4;

struct Problem {
  MatrixXd gains;  // senders x receivers, scaled so the largest entry is in [0.5, 1)
  double theta;
};

VectorXd slacks(const Problem& pb, const VectorXd& p) {
  VectorXd g(pb.gains.cols());
  for (Eigen::Index r = 0; r < pb.gains.cols(); ++r) {
    double info = 0.0;
    for (Eigen::Index s = 0; s < pb.gains.rows(); ++s) info += std::log1p(p[s] * pb.gains(s, r));
    g[r] = info - pb.theta;
  }
  return g;
}

double barrier_value(const Problem& pb, const VectorXd& p, double t) {
  if ((p.array() <= 0.0).any()) return kInf;
  const VectorXd g = slacks(pb, p);
  if ((g.array() <= 0.0).any()) return kInf;
  return t * p.sum() - g.array().log().sum() - p.array().log().sum();
}

// Strictly feasible start: every receiver gets twice the single-link SNR
// from its best sender; idle senders get a small positive power.
VectorXd initial_point(const Problem& pb) {
  const double snr = std::expm1(pb.theta);
  const Eigen::Index senders = pb.gains.rows();
  VectorXd p = VectorXd::Zero(senders);
  for (Eigen::Index r = 0; r < pb.gains.cols(); ++r) {
    Eigen::Index best = 0;
    pb.gains.col(r).maxCoeff(&best);
    p[best] = std::max(p[best], 2.0 * snr / pb.gains(best, r));
  }
  double assigned = 0.0;
  int count = 0;
  for (Eigen::Index s = 0; s < senders; ++s) {
    if (p[s] > 0.0) {
      assigned += p[s];
      ++count;
    }
  }
  const double floor = 1e-3 * assigned / count;
  for (Eigen::Index s = 0; s < senders; ++s)
    if (p[s] == 0.0) p[s] = floor;
  return p;
}

struct BarrierState {
  VectorXd p;
  double t = 0.0;
  int newton_steps = 0;
};

// Centering: Newton's method on t * sum(p) - sum log g_r - sum log p_s.
void center(const Problem& pb, BarrierState& st, const BarrierOptions& opt) {
  const Eigen::Index senders = pb.gains.rows();
  const Eigen::Index receivers = pb.gains.cols();
  for (int inner = 0; inner < 200; ++inner) {
    if (++st.newton_steps > opt.max_newton_steps) {
      std::ostringstream msg;
      msg << "MIA barrier did not converge: " << st.newton_steps << " Newton steps, t=" << st.t
          << ", objective=" << st.p.sum();
      throw ConvergenceError(msg.str());
    }
    const VectorXd g = slacks(pb, st.p);
    VectorXd grad = VectorXd::Constant(senders, st.t) - st.p.cwiseInverse();
    MatrixXd hess = st.p.array().square().inverse().matrix().asDiagonal();
    for (Eigen::Index r = 0; r < receivers; ++r) {
      VectorXd q(senders);
      for (Eigen::Index s = 0; s < senders; ++s)
        q[s] = pb.gains(s, r) / (1.0 + st.p[s] * pb.gains(s, r));
      grad -= q / g[r];
      hess.noalias() += (q * q.transpose()) / (g[r] * g[r]);
      hess.diagonal() += q.cwiseAbs2() / g[r];
    }
    const VectorXd step = -hess.ldlt().solve(grad);
    const double decrement = -grad.dot(step);
    if (!(decrement > 2e-12)) return;

    const double value = barrier_value(pb, st.p, st.t);
    double alpha = 1.0;
    VectorXd trial = st.p + step;
    double trial_value = barrier_value(pb, trial, st.t);
    while (trial_value > value - 0.25 * alpha * decrement) {
      alpha *= 0.5;
      if (alpha < 1e-14) return;  // rounding floor reached
      trial = st.p + alpha * step;
      trial_value = barrier_value(pb, trial, st.t);
    }
    st.p = trial;
  }
}

// Newton on the KKT system restricted to the active senders and constraints.
// Returns the certified optimum or nothing.
std::optional<VectorXd> polish(const Problem& pb, const BarrierState& st) {
  const Eigen::Index senders = pb.gains.rows();
  const Eigen::Index receivers = pb.gains.cols();
  const double total = st.p.sum();
  const VectorXd g0 = slacks(pb, st.p);

  // Barrier multiplier estimates are 1/(t g_r). Off the active set both
  // powers and multipliers shrink like the gap, so split at sqrt(gap).
  const double cut = std::sqrt((senders + receivers) / (st.t * total));
  const VectorXd lambda = (st.t * g0).cwiseInverse();
  std::vector<Eigen::Index> act_s, act_r;
  for (Eigen::Index s = 0; s < senders; ++s)
    if (st.p[s] > cut * st.p.maxCoeff()) act_s.push_back(s);
  for (Eigen::Index r = 0; r < receivers; ++r)
    if (lambda[r] > cut * lambda.maxCoeff()) act_r.push_back(r);
  const auto ns = static_cast<Eigen::Index>(act_s.size());
  const auto nr = static_cast<Eigen::Index>(act_r.size());
  if (ns == 0 || nr == 0) return std::nullopt;

  VectorXd x(ns + nr);
  for (Eigen::Index a = 0; a < ns; ++a) x[a] = st.p[act_s[a]];
  for (Eigen::Index b = 0; b < nr; ++b) x[ns + b] = lambda[act_r[b]];

  auto residual = [&](const VectorXd& v, MatrixXd* jac) {
    VectorXd f = VectorXd::Zero(ns + nr);
    if (jac) jac->setZero(ns + nr, ns + nr);
    for (Eigen::Index a = 0; a < ns; ++a) {
      f[a] = 1.0;
      for (Eigen::Index b = 0; b < nr; ++b) {
        const double h = pb.gains(act_s[a], act_r[b]);
        const double denom = 1.0 + v[a] * h;
        const double q = h / denom;
        f[a] -= v[ns + b] * q;
        f[ns + b] += std::log1p(v[a] * h);
        if (jac) {
          (*jac)(a, a) += v[ns + b] * q * q;
          (*jac)(a, ns + b) = -q;
          (*jac)(ns + b, a) = q;
        }
      }
    }
    for (Eigen::Index b = 0; b < nr; ++b) f[ns + b] -= pb.theta;
    return f;
  };

  MatrixXd jac;
  for (int iter = 0; iter < 50; ++iter) {
    const VectorXd f = residual(x, &jac);
    Eigen::FullPivLU<MatrixXd> lu(jac);
    if (!lu.isInvertible()) return std::nullopt;
    const VectorXd dx = lu.solve(-f);
    x += dx;
    if (dx.cwiseAbs().maxCoeff() <= 1e-15 * (1.0 + x.cwiseAbs().maxCoeff())) break;
  }

  if (residual(x, nullptr).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, pb.theta))
    return std::nullopt;

  VectorXd p = VectorXd::Zero(senders);
  for (Eigen::Index a = 0; a < ns; ++a) {
    if (!(x[a] > 0.0)) return std::nullopt;
    p[act_s[a]] = x[a];
  }
  const VectorXd mu = x.tail(nr);
  if ((mu.array() < -1e-12 * (1.0 + mu.cwiseAbs().maxCoeff())).any()) return std::nullopt;

  const VectorXd g = slacks(pb, p);
  if ((g.array() < -1e-12 * pb.theta).any()) return std::nullopt;
  // Dual feasibility for the senders held at zero.
  for (Eigen::Index s = 0; s < senders; ++s) {
    if (p[s] > 0.0) continue;
    double reduced = 1.0;
    for (Eigen::Index b = 0; b < nr; ++b) reduced -= mu[b] * pb.gains(s, act_r[b]);
    if (reduced < -1e-9) return std::nullopt;
  }
  if (p.sum() > total * (1.0 + 1e-9)) return std::nullopt;
  return p;
}

}  // namespace

PowerAllocation mia_barrier(const SlotProblem& problem, const BarrierOptions& options) {
  const int senders = problem.sender_count();
  const int receivers = problem.receiver_count();
  if (receivers == 0) return {};
  if (auto r = problem.unreachable_receiver())
    throw InfeasibleError("receiver " + std::to_string(*r) + " has no link from any sender", *r);

  double max_gain = 0.0;
  for (int i = 0; i < senders; ++i)
    for (int j = 0; j < receivers; ++j) max_gain = std::max(max_gain, problem.gain(i, j));
  int exponent = 0;
  std::frexp(max_gain, &exponent);

  Problem pb{MatrixXd(senders, receivers), problem.theta()};
  for (int i = 0; i < senders; ++i)
    for (int j = 0; j < receivers; ++j) pb.gains(i, j) = std::ldexp(problem.gain(i, j), -exponent);

  BarrierState st;
  st.p = initial_point(pb);
  const double terms = static_cast<double>(senders + receivers);
  st.t = terms / st.p.sum();
  std::optional<VectorXd> certified;
  for (;;) {
    center(pb, st, options);
    const double gap = terms / st.t;
    const double scale = std::max(1.0, st.p.sum());
    // Once the gap is moderate, a certified KKT point ends the search early.
    if (options.polish && gap <= kPolishFrom * scale) {
      certified = polish(pb, st);
      if (certified) break;
    }
    if (gap <= options.gap_tolerance * scale) break;
    st.t *= options.growth;
  }
  const VectorXd p = certified ? *certified : st.p;

  PowerMap powers;
  for (int i = 0; i < senders; ++i)
    if (p[i] > 0.0) powers[problem.senders()[i]] = std::ldexp(p[i], -exponent);
  return PowerAllocation::from_powers(std::move(powers));
}

}  // namespace dmect
