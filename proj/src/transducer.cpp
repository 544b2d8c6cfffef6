#include "semsig/transducer.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "semsig/encoder.hpp"
#include "semsig/error.hpp"
#include "semsig/kernels.hpp"

namespace semsig {

double edge_weight(double rise, double run) {
  if (!(run > 0.0)) throw Error(ErrorCode::BadArgument, "edge run must be positive");
  const double degrees = std::atan(std::abs(rise) / run) * (180.0 / std::numbers::pi);
  return degrees / 90.0;
}

std::vector<double> weight_vector(const Signal& signal, double run) {
  if (signal.size() < 2) {
    throw Error(ErrorCode::TooShort, "weight vector needs at least 2 samples");
  }
  if (!(run > 0.0)) throw Error(ErrorCode::BadArgument, "edge run must be positive");
  std::vector<double> w(kernels::edge_count(signal.size()));
  kernels::omp::edge_weights(signal.samples(), run, w);
  return w;
}

namespace {

void validate(const DetectorConfig& c) {
  if (!(c.tolerance > 0.0)) throw Error(ErrorCode::BadArgument, "tolerance must be positive");
  if (!(c.max_duration_s > 0.0)) {
    throw Error(ErrorCode::BadArgument, "max duration must be positive");
  }
  if (!(c.edge_run > 0.0)) throw Error(ErrorCode::BadArgument, "edge run must be positive");
  if (!(c.epsilon >= 0.0)) throw Error(ErrorCode::BadArgument, "epsilon must be nonnegative");
  if (!std::isfinite(c.threshold)) throw Error(ErrorCode::BadArgument, "threshold must be finite");
}

// Walks the symbol string of one signal. Sample j (1 <= j <= n-2) is the
// centre of window j-1.
class Scanner {
 public:
  Scanner(std::span<const double> x, std::span<const ConfigSymbol> symbols)
      : x_(x), symbols_(symbols) {}

  ConfigSymbol at(std::size_t j) const { return symbols_[j - 1]; }
  std::size_t last_centre() const { return x_.size() - 2; }

  // Index of the extremum starting at j: a strict extremum symbol, or a
  // plateau (enter, Flat*, leave) reported at its last flat sample.
  std::optional<std::size_t> extremum_at(std::size_t j, ConfigSymbol strict,
                                         ConfigSymbol enter, ConfigSymbol leave) const {
    const ConfigSymbol s = at(j);
    if (s == strict) return j;
    if (s != enter) return std::nullopt;
    std::size_t m = j + 1;
    while (m <= last_centre() && at(m) == ConfigSymbol::Flat) ++m;
    if (m <= last_centre() && at(m) == leave) return m;
    return std::nullopt;
  }

 private:
  std::span<const double> x_;
  std::span<const ConfigSymbol> symbols_;
};

}  // namespace

std::vector<SpikeEvent> detect_spikes(const Signal& signal, const DetectorConfig& config) {
  validate(config);
  if (signal.size() < 3) {
    throw Error(ErrorCode::TooShort, "spike detection needs at least 3 samples");
  }
  const auto x = signal.samples();
  const std::size_t n = x.size();
  const double thr = config.threshold;
  const auto symbols = symbolize(signal, config.epsilon);
  const auto w = weight_vector(signal, config.edge_run);
  const Scanner scan(x, symbols);

  std::vector<SpikeEvent> events;
  std::size_t i = 0;
  while (i + 1 < n) {
    if (!(x[i] <= thr && x[i + 1] > thr)) {
      ++i;
      continue;
    }
    const std::size_t onset = i;
    // Only the part of the crossing edge above threshold counts.
    double w1 = w[i] * (x[i + 1] - thr) / (x[i + 1] - x[i]);

    std::optional<std::size_t> peak;
    std::size_t j = i + 1;
    for (; j <= scan.last_centre(); ++j) {
      if (x[j] <= thr) break;
      peak = scan.extremum_at(j, ConfigSymbol::Peak, ConfigSymbol::RiseToFlat,
                              ConfigSymbol::FlatToFall);
      if (peak) break;
    }
    if (!peak) {
      i = j;
      continue;
    }
    for (std::size_t e = i + 1; e < *peak; ++e) w1 += w[e];

    std::optional<std::size_t> trough;
    for (j = *peak + 1; j <= scan.last_centre(); ++j) {
      if (x[j] >= thr) continue;
      trough = scan.extremum_at(j, ConfigSymbol::Trough, ConfigSymbol::FallToFlat,
                                ConfigSymbol::FlatToRise);
      if (trough) break;
    }
    if (!trough) {
      i = *peak;
      continue;
    }
    double w2 = 0.0;
    for (std::size_t e = *peak; e < *trough; ++e) w2 += w[e];

    // Undershoot: climb back until the threshold is regained or the slope
    // stops rising.
    double w3 = 0.0;
    std::size_t offset = *trough;
    while (offset + 1 < n) {
      const double d = x[offset + 1] - x[offset];
      if (sign_of(d, config.epsilon) != Sign::Positive) break;
      if (x[offset + 1] >= thr) {
        w3 += w[offset] * (thr - x[offset]) / d;
        ++offset;
        break;
      }
      w3 += w[offset];
      ++offset;
    }
    if (offset == *trough) {
      i = *trough;
      continue;
    }

    const double residual = std::abs(w2 - w1 - w3);
    const double duration = static_cast<double>(offset - onset) / signal.sample_rate_hz();
    if (residual <= config.tolerance && duration <= config.max_duration_s) {
      events.push_back({onset, *peak, *trough, offset, w1, w2, w3, residual});
    }
    i = offset;
  }
  return events;
}

}  // namespace semsig
