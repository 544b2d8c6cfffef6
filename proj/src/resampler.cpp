#include "semsig/resampler.hpp"

#include <cmath>
#include <exception>
#include <optional>
#include <string>

#include "semsig/error.hpp"
#include "semsig/kernels.hpp"

namespace semsig {

SplineModel fit_cubic_spline(const Signal& signal) {
  if (signal.size() < 3) {
    throw Error(ErrorCode::TooShort, "cubic spline needs at least 3 samples");
  }
  std::vector<double> t(signal.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = static_cast<double>(i) / signal.sample_rate_hz();
  }
  return SplineModel::fit(t, signal.samples());
}

Signal resample(const SplineModel& spline, double new_rate_hz) {
  if (!(new_rate_hz > 0.0) || !std::isfinite(new_rate_hz)) {
    throw Error(ErrorCode::NonPositiveRate, "resampling rate must be positive");
  }
  const double span = spline.last_knot() - spline.first_knot();
  // The small slack keeps a knot-aligned last sample despite rounding in span * rate.
  const auto count = static_cast<std::size_t>(std::floor(span * new_rate_hz * (1.0 + 1e-12))) + 1;
  std::vector<double> times(count);
  for (std::size_t k = 0; k < count; ++k) {
    times[k] = spline.first_knot() + static_cast<double>(k) / new_rate_hz;
  }
  std::vector<double> values(count);
  kernels::omp::evaluate_spline(spline, times, values);
  return make_signal(std::move(values), new_rate_hz);
}

ShapeKind shape_kind(ConfigSymbol s) noexcept {
  switch (s) {
    case ConfigSymbol::Trough:
    case ConfigSymbol::Peak:
    case ConfigSymbol::FlatToRise:
    case ConfigSymbol::FlatToFall:
    case ConfigSymbol::RiseToFlat:
    case ConfigSymbol::FallToFlat:
      return ShapeKind::Break;
    default:
      return ShapeKind::Smooth;
  }
}

std::vector<ShapeRun> shape_runs(std::span<const ConfigSymbol> symbols) {
  if (symbols.empty()) throw Error(ErrorCode::EmptySymbols, "no symbols to segment");
  std::vector<ShapeRun> runs;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= symbols.size(); ++i) {
    if (i == symbols.size() || symbols[i] != symbols[start]) {
      runs.push_back({symbols[start], start, i - start, shape_kind(symbols[start])});
      start = i;
    }
  }
  return runs;
}

std::vector<RateHistogram> resample_study(const Signal& signal,
                                          std::span<const double> rates_hz,
                                          double epsilon) {
  for (double r : rates_hz) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::NonPositiveRate, "study rates must be positive");
    }
  }
  const SplineModel spline = fit_cubic_spline(signal);

  // Rates are independent; each slot is filled by exactly one iteration so
  // the output order is that of the input.
  std::vector<std::optional<RateHistogram>> slots(rates_hz.size());
  std::vector<std::exception_ptr> failures(rates_hz.size());
  const auto n = static_cast<std::ptrdiff_t>(rates_hz.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      const Signal resampled = resample(spline, rates_hz[u]);
      const auto symbols = symbolize(resampled, epsilon);
      slots[u] = RateHistogram{rates_hz[u], resampled.size(),
                               rates_hz[u] < signal.sample_rate_hz(),
                               config_histogram(symbols)};
    } catch (...) {
      failures[u] = std::current_exception();
    }
  }
  std::vector<RateHistogram> out;
  out.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out.push_back(*slots[i]);
  }
  return out;
}

}  // namespace semsig
