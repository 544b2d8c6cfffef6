#ifndef SEMSIG_KERNELS_HPP
#define SEMSIG_KERNELS_HPP

// Data-parallel inner loops. Every kernel exists twice: a plain serial loop
// kept as the reference, and an OpenMP version that the public API calls.
// Both write into caller-sized output spans and must agree bit for bit.

#include <cstddef>
#include <optional>
#include <span>

#include "semsig/encoder.hpp"

namespace semsig {
class SplineModel;
}

namespace semsig::kernels {

/// Output sizes the callers must provide.
constexpr std::size_t window_count(std::size_t samples) noexcept {
  return samples < 3 ? 0 : samples - 2;
}
constexpr std::size_t edge_count(std::size_t samples) noexcept {
  return samples < 2 ? 0 : samples - 1;
}
constexpr std::size_t sliding_count(std::size_t symbols, std::size_t width,
                                    std::size_t hop) noexcept {
  return (width == 0 || hop == 0 || symbols < width) ? 0 : (symbols - width) / hop + 1;
}

namespace serial {

/// Classifies every window; returns the first window index whose triple is
/// unrealizable (out is unspecified past it), or nullopt.
std::optional<std::size_t> classify_windows(std::span<const double> x, double epsilon,
                                            std::span<ConfigSymbol> out);
void left_power(std::span<const double> x, std::span<double> out);
void edge_weights(std::span<const double> x, double run, std::span<double> out);
/// Semantic entropy of symbols[k*hop, k*hop+width) for each k.
void window_entropies(std::span<const ConfigSymbol> symbols, std::size_t width,
                      std::size_t hop, std::span<double> out);
void evaluate_spline(const SplineModel& spline, std::span<const double> times,
                     std::span<double> out);

}  // namespace serial

namespace omp {

std::optional<std::size_t> classify_windows(std::span<const double> x, double epsilon,
                                            std::span<ConfigSymbol> out);
void left_power(std::span<const double> x, std::span<double> out);
void edge_weights(std::span<const double> x, double run, std::span<double> out);
void window_entropies(std::span<const ConfigSymbol> symbols, std::size_t width,
                      std::size_t hop, std::span<double> out);
void evaluate_spline(const SplineModel& spline, std::span<const double> times,
                     std::span<double> out);

}  // namespace omp

}  // namespace semsig::kernels

#endif  // SEMSIG_KERNELS_HPP
