#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "arbelos/config.hpp"
#include "arbelos/construction.hpp"

namespace arbelos {

enum class OracleMethod { MonteCarlo, Grid };

struct OracleConfig {
  OracleMethod method = OracleMethod::MonteCarlo;
  std::uint64_t samples = 1'000'000;
  std::uint32_t grid_resolution = 1024;
  std::uint64_t seed = 0;
  // 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned workers = 0;
};

struct Box {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
};

/// value is the area estimate. For MonteCarlo std_error is the one-sigma
/// binomial standard error; for Grid it is the total area of cells the
/// boundary straddles, a bound on the discretization error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

using Predicate = std::function<bool(const Point&)>;

/// Monte Carlo samples are drawn in fixed chunks of kChunkSamples, chunk k
/// from SplitMix64::stream(seed, k), and hits are tallied as integers, so
/// the result is bit-identical for any worker count.
///
/// Grid evaluates the predicate at every cell midpoint and at the four cell
/// corners; a cell whose five probes disagree counts as straddling.
///
/// Throws EmptyBox for a degenerate or non-finite box, InvalidOracleConfig
/// for samples < 1 or grid_resolution < 2. The predicate must be safe to call
/// concurrently unless workers == 1.
Estimate estimate_area(const Predicate& predicate, const Box& box,
                       const OracleConfig& config);

inline constexpr std::uint64_t kChunkSamples = 1ULL << 16;

enum class Region { Knife, C1, C2, C };

std::string_view to_string(Region region) noexcept;

struct RegionCheck {
  Region region = Region::Knife;
  double closed_form = 0.0;
  Estimate estimate;
  double discrepancy = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<RegionCheck> regions;  // Knife, C1, C2, C
  bool pass = false;
};

/// Pass threshold for one region: max(4 sigma, 1e-6 R^2) for MonteCarlo and
/// std_error + 1e-9 R^2 for Grid.
double pass_threshold(const Estimate& estimate, OracleMethod method,
                      double radius);

/// Compares every closed-form area against an oracle estimate computed from
/// the membership predicates of a figure built with n = +sqrt(R^2 - T^2).
/// Requires T > 0 (ChordOutOfRange otherwise).
VerificationReport verify_config(const ArbelosConfig& config,
                                 const OracleConfig& oracle);

}  // namespace arbelos
