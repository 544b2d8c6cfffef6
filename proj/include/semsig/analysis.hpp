#ifndef SEMSIG_ANALYSIS_HPP
#define SEMSIG_ANALYSIS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semsig/encoder.hpp"
#include "semsig/signal.hpp"

namespace semsig {

/// Relative frequency of each configuration in a nonempty symbol string.
class ConfigHistogram {
 public:
  using Counts = std::array<std::uint64_t, kSymbolCount>;

  /// Throws EmptySymbols when every count is zero.
  static ConfigHistogram from_counts(const Counts& counts);

  const Counts& counts() const noexcept { return counts_; }
  std::uint64_t count(ConfigSymbol s) const noexcept { return counts_[slot(s)]; }
  std::uint64_t total() const noexcept { return total_; }
  double density(ConfigSymbol s) const noexcept {
    return static_cast<double>(count(s)) / static_cast<double>(total_);
  }
  std::array<double, kSymbolCount> densities() const noexcept;

  friend bool operator==(const ConfigHistogram&, const ConfigHistogram&) = default;

 private:
  Counts counts_{};
  std::uint64_t total_ = 0;
};

ConfigHistogram config_histogram(std::span<const ConfigSymbol> symbols);

/// Shannon entropy in bits of a count vector, 0 log 0 = 0.
double entropy_bits(std::span<const std::uint64_t> counts, std::uint64_t total) noexcept;

/// Entropy of the configuration distribution, in [0, log2 13].
double semantic_entropy(const ConfigHistogram& hist) noexcept;

struct EntropySeries {
  std::size_t window_len = 0;  // samples per window
  std::size_t hop = 0;         // samples between window starts
  std::vector<std::size_t> start_indices;
  std::vector<double> values;

  friend bool operator==(const EntropySeries&, const EntropySeries&) = default;
};

/// Semantic entropy of each window of `window_len` samples (window_len - 2
/// symbols), starting every `hop` samples. Incomplete tail windows are
/// dropped.
EntropySeries sliding_entropy(const Signal& signal, std::size_t window_len,
                              std::size_t hop, double epsilon = 0.0);

/// -ln sum_i sqrt(p_i q_i); +infinity for disjoint supports.
double bhattacharyya(const ConfigHistogram& p, const ConfigHistogram& q) noexcept;

enum class PowerScale {
  Raw,     // plain sample differences, unit spacing
  Analog,  // s' divided by T and s'' by T^2, so the sum approximates the integral
};

/// Sum of |s''[n] s'[n]| * T over the interior samples n of [start, end).
/// Requires start < end <= size and end - start >= 3 (BadRange otherwise).
double semantic_information(const Signal& signal, std::size_t start, std::size_t end,
                            PowerScale scale = PowerScale::Raw);

}  // namespace semsig

#endif  // SEMSIG_ANALYSIS_HPP
