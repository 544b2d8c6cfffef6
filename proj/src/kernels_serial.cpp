#include "semsig/kernels.hpp"

#include <array>
#include <cstdint>

#include "semsig/analysis.hpp"
#include "semsig/spline.hpp"
#include "semsig/transducer.hpp"

namespace semsig::kernels::serial {

std::optional<std::size_t> classify_windows(std::span<const double> x, double epsilon,
                                            std::span<ConfigSymbol> out) {
  for (std::size_t k = 0; k < window_count(x.size()); ++k) {
    const auto s = try_classify_window(x[k], x[k + 1], x[k + 2], epsilon);
    if (!s) return k;
    out[k] = *s;
  }
  return std::nullopt;
}

void left_power(std::span<const double> x, std::span<double> out) {
  for (std::size_t k = 0; k < window_count(x.size()); ++k) {
    out[k] = p_products(x[k], x[k + 1], x[k + 2]).left;
  }
}

void edge_weights(std::span<const double> x, double run, std::span<double> out) {
  for (std::size_t k = 0; k < edge_count(x.size()); ++k) {
    out[k] = edge_weight(x[k + 1] - x[k], run);
  }
}

void window_entropies(std::span<const ConfigSymbol> symbols, std::size_t width,
                      std::size_t hop, std::span<double> out) {
  for (std::size_t k = 0; k < sliding_count(symbols.size(), width, hop); ++k) {
    std::array<std::uint64_t, kSymbolCount> counts{};
    for (auto s : symbols.subspan(k * hop, width)) ++counts[slot(s)];
    out[k] = entropy_bits(counts, width);
  }
}

void evaluate_spline(const SplineModel& spline, std::span<const double> times,
                     std::span<double> out) {
  for (std::size_t k = 0; k < times.size(); ++k) out[k] = spline.value(times[k]);
}

}  // namespace semsig::kernels::serial
