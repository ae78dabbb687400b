#include "dmect/netgen.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dmect {

namespace {
constexpr int kMaxRedraws = 64;
}

void TopologyConfig::validate() const {
  if (n < 2) throw std::invalid_argument("topology needs at least two nodes");
  if (!(width > 0.0) || !(height > 0.0))
    throw std::invalid_argument("field dimensions must be positive");
  if (!(eta > 0.0)) throw std::invalid_argument("path-loss exponent must be positive");
  if (!std::isfinite(theta) || !(theta > 0.0))
    throw std::invalid_argument("theta must be finite and strictly positive");
}

double uniform_open01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

double exponential(double mean, Rng& rng) { return -mean * std::log(uniform_open01(rng)); }

GainMatrix draw_gains(std::span<const Point> positions, double eta, Rng& rng) {
  const int n = static_cast<int>(positions.size());
  GainMatrix gains(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = std::hypot(positions[i].x - positions[j].x, positions[i].y - positions[j].y);
      if (d == 0.0)
        throw std::invalid_argument("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                    " share a position");
      gains.set_symmetric(i, j, exponential(std::pow(d, -eta), rng));
    }
  }
  return gains;
}

Instance generate(const TopologyConfig& config) {
  config.validate();
  Rng rng(config.seed);

  std::vector<Point> positions{config.source_position()};
  for (int i = 1; i < config.n; ++i) {
    Point p;
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRedraws && !placed; ++attempt) {
      p.x = config.width * uniform_open01(rng);
      p.y = config.height * uniform_open01(rng);
      placed = true;
      for (const Point& q : positions)
        if (q.x == p.x && q.y == p.y) placed = false;
    }
    if (!placed)
      throw std::runtime_error("could not place node " + std::to_string(i) +
                               " at a distinct position");
    positions.push_back(p);
  }

  GainMatrix gains = draw_gains(positions, config.eta, rng);
  std::vector<NodeId> destinations;
  for (int i = 1; i < config.n; ++i) destinations.push_back(i);
  return Instance(std::move(gains), 0, std::move(destinations), config.theta,
                  config.accumulation, std::move(positions));
}

}  // namespace dmect
