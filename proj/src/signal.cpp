#include "semsig/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "semsig/error.hpp"

namespace semsig {

Signal make_signal(std::vector<double> samples, double sample_rate_hz) {
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz)) {
    throw Error(ErrorCode::NonPositiveRate,
                "sample rate must be positive and finite, got " +
                    std::to_string(sample_rate_hz));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw Error(ErrorCode::NonFiniteSample,
                  "non-finite sample at index " + std::to_string(i), i);
    }
  }
  return Signal(std::move(samples), sample_rate_hz);
}

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
  // Rejecting the lowest 2^64 mod bound words keeps every residue equally likely.
  const std::uint64_t reject_below = (std::uint64_t(0) - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= reject_below) return x % bound;
  }
}

double SeededRng::next_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Signal gen_sine(double freq_hz, double amplitude, double sample_rate_hz,
                double duration_s) {
  if (!(sample_rate_hz > 0.0)) {
    throw Error(ErrorCode::NonPositiveRate, "sample rate must be positive");
  }
  if (!(freq_hz > 0.0) || !(amplitude > 0.0) || !(duration_s > 0.0)) {
    throw Error(ErrorCode::BadArgument,
                "frequency, amplitude and duration must be positive");
  }
  if (freq_hz >= sample_rate_hz / 2.0) {
    throw Error(ErrorCode::AliasedFrequency,
                "frequency " + std::to_string(freq_hz) +
                    " Hz is at or above Nyquist for " +
                    std::to_string(sample_rate_hz) + " Hz");
  }
  const auto n = static_cast<std::size_t>(std::floor(duration_s * sample_rate_hz));
  std::vector<double> x(n);
  const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate_hz;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = amplitude * std::sin(w * static_cast<double>(i));
  }
  return make_signal(std::move(x), sample_rate_hz);
}

namespace {

std::size_t phase_samples(double ms, double rate_hz, const char* name) {
  const double exact = ms * 1e-3 * rate_hz;
  const auto n = static_cast<long long>(std::llround(exact));
  if (!(ms > 0.0) || n < 3) {
    throw Error(ErrorCode::DegeneratePhase,
                std::string(name) + " phase of " + std::to_string(ms) +
                    " ms spans fewer than 3 samples at " +
                    std::to_string(rate_hz) + " Hz");
  }
  return static_cast<std::size_t>(n);
}

// Appends samples k = 1..n of a half-cosine ramp from `from` to `to`; the last
// sample is pinned to `to` exactly.
void append_ramp(std::vector<double>& out, double from, double to, std::size_t n) {
  for (std::size_t k = 1; k < n; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(n);
    out.push_back(from + (to - from) * 0.5 * (1.0 - std::cos(std::numbers::pi * u)));
  }
  out.push_back(to);
}

}  // namespace

Signal gen_synthetic_ap(double sample_rate_hz, const ActionPotentialShape& shape) {
  if (!(sample_rate_hz > 0.0)) {
    throw Error(ErrorCode::NonPositiveRate, "sample rate must be positive");
  }
  if (!(shape.trough_amp < shape.threshold && shape.threshold < shape.peak_amp)) {
    throw Error(ErrorCode::BadArgument,
                "action potential requires trough < threshold < peak");
  }
  const std::size_t n_rise = phase_samples(shape.rise_ms, sample_rate_hz, "rise");
  const std::size_t n_fall = phase_samples(shape.fall_ms, sample_rate_hz, "fall");
  const std::size_t n_recover =
      phase_samples(shape.recover_ms, sample_rate_hz, "recovery");

  const double resting = 0.5 * (shape.trough_amp + shape.threshold);
  std::vector<double> x;
  x.reserve(1 + n_rise + n_fall + n_recover);
  x.push_back(resting);
  append_ramp(x, resting, shape.peak_amp, n_rise);
  append_ramp(x, shape.peak_amp, shape.trough_amp, n_fall);
  append_ramp(x, shape.trough_amp, shape.threshold, n_recover);
  return make_signal(std::move(x), sample_rate_hz);
}

Signal gen_uniform_noise(std::size_t length, double lo, double hi,
                         double sample_rate_hz, std::uint64_t seed) {
  if (!(hi > lo)) throw Error(ErrorCode::BadArgument, "noise range must satisfy lo < hi");
  SeededRng rng(seed);
  std::vector<double> x(length);
  for (auto& v : x) v = lo + (hi - lo) * rng.next_unit();
  return make_signal(std::move(x), sample_rate_hz);
}

Signal shuffle_surrogate(const Signal& signal, std::uint64_t seed) {
  std::vector<double> x(signal.samples().begin(), signal.samples().end());
  SeededRng rng(seed);
  for (std::size_t i = x.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(x[i - 1], x[j]);
  }
  return make_signal(std::move(x), signal.sample_rate_hz());
}

}  // namespace semsig
