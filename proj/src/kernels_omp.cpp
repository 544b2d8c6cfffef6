#include "semsig/kernels.hpp"

#include <array>
#include <cstdint>
#include <limits>

#include "semsig/analysis.hpp"
#include "semsig/spline.hpp"
#include "semsig/transducer.hpp"

namespace semsig::kernels::omp {

namespace {
// OpenMP loops want a signed induction variable.
std::ptrdiff_t as_signed(std::size_t n) { return static_cast<std::ptrdiff_t>(n); }
}  // namespace

std::optional<std::size_t> classify_windows(std::span<const double> x, double epsilon,
                                            std::span<ConfigSymbol> out) {
  const auto n = as_signed(window_count(x.size()));
  std::size_t first_bad = std::numeric_limits<std::size_t>::max();
  // Exceptions may not cross the region boundary; collect the earliest
  // failing window instead.
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const auto s = try_classify_window(x[k], x[k + 1], x[k + 2], epsilon);
    if (s) {
      out[k] = *s;
    } else if (k < first_bad) {
      first_bad = k;
    }
  }
  if (first_bad == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return first_bad;
}

void left_power(std::span<const double> x, std::span<double> out) {
  const auto n = as_signed(window_count(x.size()));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = p_products(x[k], x[k + 1], x[k + 2]).left;
  }
}

void edge_weights(std::span<const double> x, double run, std::span<double> out) {
  const auto n = as_signed(edge_count(x.size()));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = edge_weight(x[k + 1] - x[k], run);
  }
}

void window_entropies(std::span<const ConfigSymbol> symbols, std::size_t width,
                      std::size_t hop, std::span<double> out) {
  const auto n = as_signed(sliding_count(symbols.size(), width, hop));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    std::array<std::uint64_t, kSymbolCount> counts{};
    for (auto s : symbols.subspan(k * hop, width)) ++counts[slot(s)];
    out[k] = entropy_bits(counts, width);
  }
}

void evaluate_spline(const SplineModel& spline, std::span<const double> times,
                     std::span<double> out) {
  const auto n = as_signed(times.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = spline.value(times[k]);
  }
}

}  // namespace semsig::kernels::omp
