#include "arbelos/numeric_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "arbelos/core_geometry.hpp"
#include "arbelos/error.hpp"
#include "arbelos/rng.hpp"

namespace arbelos {

namespace {

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
  unsigned n = requested;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, jobs) on up to `workers` threads. Each job writes
// only its own slot, so the outcome does not depend on scheduling.
template <typename Job>
void for_each_job(std::size_t jobs, unsigned workers, const Job& job) {
  workers = resolve_workers(workers, jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) job(i);
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
}

Estimate monte_carlo(const Predicate& predicate, const Box& box,
                     const OracleConfig& config) {
  const std::uint64_t n = config.samples;
  const std::size_t chunks = static_cast<std::size_t>((n + kChunkSamples - 1) / kChunkSamples);
  std::vector<std::uint64_t> hits(chunks, 0);

  for_each_job(chunks, config.workers, [&](std::size_t k) {
    SplitMix64 rng = SplitMix64::stream(config.seed, k);
    const std::uint64_t begin = k * kChunkSamples;
    const std::uint64_t count = std::min(kChunkSamples, n - begin);
    std::uint64_t local = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double x = box.x_min + box.width() * rng.uniform01();
      const double y = box.y_min + box.height() * rng.uniform01();
      if (predicate(Point{x, y})) ++local;
    }
    hits[k] = local;
  });

  const std::uint64_t total = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  const double area = box.area();
  const double p = static_cast<double>(total) / static_cast<double>(n);
  return {area * p, area * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

Estimate grid(const Predicate& predicate, const Box& box,
              const OracleConfig& config) {
  const std::uint32_t res = config.grid_resolution;
  const double dx = box.width() / res;
  const double dy = box.height() / res;
  const auto x_at = [&](std::uint32_t i) {
    return i == res ? box.x_max : box.x_min + dx * i;
  };
  const auto y_at = [&](std::uint32_t j) {
    return j == res ? box.y_max : box.y_min + dy * j;
  };

  struct RowCount {
    std::uint64_t inside = 0;
    std::uint64_t straddle = 0;
  };
  std::vector<RowCount> rows(res);

  for_each_job(res, config.workers, [&](std::size_t j) {
    const double y0 = y_at(static_cast<std::uint32_t>(j));
    const double y1 = y_at(static_cast<std::uint32_t>(j + 1));
    const double ym = box.y_min + dy * (static_cast<double>(j) + 0.5);
    std::vector<char> lower(res + 1), upper(res + 1);
    for (std::uint32_t i = 0; i <= res; ++i) {
      lower[i] = predicate(Point{x_at(i), y0});
      upper[i] = predicate(Point{x_at(i), y1});
    }
    RowCount count;
    for (std::uint32_t i = 0; i < res; ++i) {
      const bool mid = predicate(Point{box.x_min + dx * (i + 0.5), ym});
      if (mid) ++count.inside;
      const bool uniform = lower[i] == mid && lower[i + 1] == mid &&
                           upper[i] == mid && upper[i + 1] == mid;
      if (!uniform) ++count.straddle;
    }
    rows[j] = count;
  });

  std::uint64_t inside = 0, straddle = 0;
  for (const RowCount& r : rows) {
    inside += r.inside;
    straddle += r.straddle;
  }
  const double cells = static_cast<double>(res) * static_cast<double>(res);
  const double area = box.area();
  return {area * static_cast<double>(inside) / cells,
          area * static_cast<double>(straddle) / cells};
}

}  // namespace

Estimate estimate_area(const Predicate& predicate, const Box& box,
                       const OracleConfig& config) {
  if (!std::isfinite(box.x_min) || !std::isfinite(box.x_max) ||
      !std::isfinite(box.y_min) || !std::isfinite(box.y_max) ||
      !(box.width() > 0.0) || !(box.height() > 0.0)) {
    throw ArbelosError(ErrorKind::EmptyBox,
                       "bounding box needs positive, finite width and height");
  }
  if (config.method == OracleMethod::MonteCarlo) {
    if (config.samples < 1) {
      throw ArbelosError(ErrorKind::InvalidOracleConfig, "samples must be >= 1");
    }
    return monte_carlo(predicate, box, config);
  }
  if (config.grid_resolution < 2) {
    throw ArbelosError(ErrorKind::InvalidOracleConfig,
                       "grid resolution must be >= 2");
  }
  return grid(predicate, box, config);
}

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::Knife: return "knife";
    case Region::C1: return "C1";
    case Region::C2: return "C2";
    case Region::C: return "C";
  }
  return "unknown";
}

double pass_threshold(const Estimate& estimate, OracleMethod method,
                      double radius) {
  const double r2 = radius * radius;
  if (method == OracleMethod::MonteCarlo) {
    return std::max(4.0 * estimate.std_error, 1e-6 * r2);
  }
  return estimate.std_error + 1e-9 * r2;
}

VerificationReport verify_config(const ArbelosConfig& config,
                                 const OracleConfig& oracle) {
  if (!(config.chord() > 0.0)) {
    throw ArbelosError(ErrorKind::ChordOutOfRange,
                       "oracle verification requires T > 0");
  }
  const double R = config.radius();
  // n >= 0 puts the larger semicircle on the A side, matching C1 >= C2.
  const Figure figure = build_figure(R, chord_complement(config));
  const Box box{-R, R, 0.0, R};
  const AreaReport closed = area_decomposition(config);

  const struct {
    Region region;
    double closed_form;
    Predicate predicate;
  } cases[] = {
      {Region::Knife, closed.area_knife,
       [&figure](const Point& p) { return in_knife(p, figure); }},
      {Region::C1, closed.area_C1,
       [&figure](const Point& p) { return in_semicircle(p, Semicircle::C1, figure); }},
      {Region::C2, closed.area_C2,
       [&figure](const Point& p) { return in_semicircle(p, Semicircle::C2, figure); }},
      {Region::C, closed.area_C,
       [&figure](const Point& p) { return in_semicircle(p, Semicircle::C, figure); }},
  };

  VerificationReport report;
  report.pass = true;
  for (const auto& c : cases) {
    RegionCheck check;
    check.region = c.region;
    check.closed_form = c.closed_form;
    check.estimate = estimate_area(c.predicate, box, oracle);
    check.discrepancy = std::fabs(c.closed_form - check.estimate.value);
    check.pass = check.discrepancy <= pass_threshold(check.estimate, oracle.method, R);
    report.pass = report.pass && check.pass;
    report.regions.push_back(check);
  }
  return report;
}

}  // namespace arbelos
