#ifndef SEMSIG_SIGNAL_HPP
#define SEMSIG_SIGNAL_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace semsig {

/// Uniformly sampled, finite, real-valued sequence. Immutable once built;
/// the only way in is make_signal(), which validates.
class Signal {
 public:
  Signal() = default;

  std::span<const double> samples() const noexcept { return samples_; }
  double sample_rate_hz() const noexcept { return rate_hz_; }
  double sample_period_s() const noexcept { return 1.0 / rate_hz_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }

  friend Signal make_signal(std::vector<double> samples, double sample_rate_hz);

 private:
  Signal(std::vector<double> samples, double rate_hz)
      : samples_(std::move(samples)), rate_hz_(rate_hz) {}

  std::vector<double> samples_;
  double rate_hz_ = 1.0;
};

/// Throws NonFiniteSample (with the offending index) or NonPositiveRate.
Signal make_signal(std::vector<double> samples, double sample_rate_hz);

/// Seeded generator with a portable output sequence. std::mt19937_64 is fully
/// specified by the standard; the standard distributions are not, so bounded
/// and unit draws are derived here from the raw 64-bit words.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased integer in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound);

  /// Double in [0, 1) with 53 random bits.
  double next_unit();

 private:
  std::mt19937_64 engine_;
};

/// amplitude * sin(2 pi f n / fs), floor(duration * fs) samples.
Signal gen_sine(double freq_hz, double amplitude, double sample_rate_hz,
                double duration_s);

struct ActionPotentialShape {
  double peak_amp = 40.0;
  double trough_amp = -15.0;
  double threshold = 0.0;
  double rise_ms = 1.0;
  double fall_ms = 2.0;
  double recover_ms = 3.0;
};

/// Synthetic action potential built from half-cosine ramps:
/// resting level (midway between trough and threshold) -> peak -> trough ->
/// threshold. Every phase must span at least 3 samples (DegeneratePhase).
Signal gen_synthetic_ap(double sample_rate_hz, const ActionPotentialShape& shape);

/// iid uniform samples in [lo, hi).
Signal gen_uniform_noise(std::size_t length, double lo, double hi,
                         double sample_rate_hz, std::uint64_t seed);

/// Fisher-Yates permutation of the samples driven by SeededRng.
Signal shuffle_surrogate(const Signal& signal, std::uint64_t seed);

}  // namespace semsig

#endif  // SEMSIG_SIGNAL_HPP
