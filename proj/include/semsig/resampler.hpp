#ifndef SEMSIG_RESAMPLER_HPP
#define SEMSIG_RESAMPLER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "semsig/analysis.hpp"
#include "semsig/encoder.hpp"
#include "semsig/signal.hpp"
#include "semsig/spline.hpp"

namespace semsig {

/// Natural cubic spline through (n / rate, s[n]).
SplineModel fit_cubic_spline(const Signal& signal);

/// Samples the spline at first_knot + k / new_rate_hz for every such time
/// that does not pass the last knot.
Signal resample(const SplineModel& spline, double new_rate_hz);

enum class ShapeKind { Smooth, Break };

/// Smooth: configurations that extend a run of one fundamental shape
/// (1-4 and 7-9). Break: peaks, troughs and the flat junctions (5, 6, 10-13).
ShapeKind shape_kind(ConfigSymbol s) noexcept;

struct ShapeRun {
  ConfigSymbol symbol;
  std::size_t start_index;
  std::size_t length;
  ShapeKind kind;

  friend bool operator==(const ShapeRun&, const ShapeRun&) = default;
};

/// Maximal run-length encoding of the symbol string. Throws EmptySymbols.
std::vector<ShapeRun> shape_runs(std::span<const ConfigSymbol> symbols);

struct RateHistogram {
  double rate_hz;
  std::size_t sample_count;
  bool downsampled;  // below the source rate; no anti-alias filtering is applied
  ConfigHistogram histogram;

  friend bool operator==(const RateHistogram&, const RateHistogram&) = default;
};

/// Fits the spline once, then resamples, symbolizes and histograms at every
/// requested rate. Output order follows `rates_hz`.
std::vector<RateHistogram> resample_study(const Signal& signal,
                                          std::span<const double> rates_hz,
                                          double epsilon = 0.0);

}  // namespace semsig

#endif  // SEMSIG_RESAMPLER_HPP
