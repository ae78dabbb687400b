#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "dmect/model.hpp"

namespace dmect {

/// Random planar topology with Rayleigh-faded links. The source sits at the
/// middle of the left edge; every other node is uniform on the field.
struct TopologyConfig {
  int n = 30;
  double width = 15.0;
  double height = 15.0;
  double eta = 2.0;                  // path-loss exponent
  double theta = 0.6931471805599453;  // log 2
  std::uint64_t seed = 0;
  Accumulation accumulation = Accumulation::ea;

  Point source_position() const { return {0.0, height / 2.0}; }
  double density() const { return n / (width * height); }
  void validate() const;  // throws std::invalid_argument
};

/// The generator's engine. std::mt19937_64 is specified bit-for-bit by the
/// standard; the distributions below are written out by hand because the
/// standard library ones are not portable across implementations.
using Rng = std::mt19937_64;

/// Uniform on the open interval (0, 1), 53 bits of resolution.
double uniform_open01(Rng& rng);

/// Exponential with the given mean, by inversion.
double exponential(double mean, Rng& rng);

/// One exponential draw per unordered pair with mean d_ij^-eta, mirrored.
/// Throws std::invalid_argument if two positions coincide.
GainMatrix draw_gains(std::span<const Point> positions, double eta, Rng& rng);

/// Broadcast instance from source 0. Same config, same instance, bit for bit.
Instance generate(const TopologyConfig& config);

}  // namespace dmect
