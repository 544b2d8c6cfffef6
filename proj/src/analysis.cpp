#include "semsig/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "semsig/error.hpp"
#include "semsig/kernels.hpp"

namespace semsig {

ConfigHistogram ConfigHistogram::from_counts(const Counts& counts) {
  ConfigHistogram h;
  h.counts_ = counts;
  for (auto c : counts) h.total_ += c;
  if (h.total_ == 0) throw Error(ErrorCode::EmptySymbols, "histogram of no symbols");
  return h;
}

std::array<double, kSymbolCount> ConfigHistogram::densities() const noexcept {
  std::array<double, kSymbolCount> p{};
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    p[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
  }
  return p;
}

ConfigHistogram config_histogram(std::span<const ConfigSymbol> symbols) {
  if (symbols.empty()) throw Error(ErrorCode::EmptySymbols, "histogram of no symbols");
  ConfigHistogram::Counts counts{};
  for (auto s : symbols) ++counts[slot(s)];
  return ConfigHistogram::from_counts(counts);
}

double entropy_bits(std::span<const std::uint64_t> counts, std::uint64_t total) noexcept {
  if (total == 0) return 0.0;
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  // A degenerate distribution gives -1*log2(1) = -0.
  return h <= 0.0 ? 0.0 : h;
}

double semantic_entropy(const ConfigHistogram& hist) noexcept {
  return entropy_bits(hist.counts(), hist.total());
}

EntropySeries sliding_entropy(const Signal& signal, std::size_t window_len,
                              std::size_t hop, double epsilon) {
  if (window_len < 3 || hop == 0) {
    throw Error(ErrorCode::BadWindow, "window must span >= 3 samples and hop must be >= 1");
  }
  if (signal.size() < window_len) {
    throw Error(ErrorCode::TooShort, "signal of " + std::to_string(signal.size()) +
                                         " samples is shorter than the window of " +
                                         std::to_string(window_len));
  }
  const auto symbols = symbolize(signal, epsilon);
  // Window starting at sample k covers symbols [k, k + window_len - 2).
  const std::size_t width = window_len - 2;
  EntropySeries series;
  series.window_len = window_len;
  series.hop = hop;
  series.values.resize(kernels::sliding_count(symbols.size(), width, hop));
  kernels::omp::window_entropies(symbols, width, hop, series.values);
  series.start_indices.resize(series.values.size());
  for (std::size_t k = 0; k < series.start_indices.size(); ++k) {
    series.start_indices[k] = k * hop;
  }
  return series;
}

double bhattacharyya(const ConfigHistogram& p, const ConfigHistogram& q) noexcept {
  double coefficient = 0.0;
  for (ConfigSymbol s : kAllSymbols) {
    coefficient += std::sqrt(p.density(s) * q.density(s));
  }
  if (coefficient <= 0.0) return std::numeric_limits<double>::infinity();
  // Rounding can push identical distributions marginally above 1.
  return coefficient >= 1.0 ? 0.0 : -std::log(coefficient);
}

double semantic_information(const Signal& signal, std::size_t start, std::size_t end,
                            PowerScale scale) {
  if (!(start < end && end <= signal.size() && end - start >= 3)) {
    throw Error(ErrorCode::BadRange,
                "range [" + std::to_string(start) + ", " + std::to_string(end) +
                    ") must lie within the signal and span at least 3 samples");
  }
  const auto x = signal.samples().subspan(start, end - start);
  std::vector<double> power(kernels::window_count(x.size()));
  kernels::omp::left_power(x, power);
  const double T = signal.sample_period_s();
  // s' ~ d/T and s'' ~ dd/T^2, so |P| picks up 1/T^3.
  const double factor = scale == PowerScale::Analog ? T / (T * T * T) : T;
  double sum = 0.0;
  for (double v : power) sum += std::abs(v);
  return sum * factor;
}

}  // namespace semsig
