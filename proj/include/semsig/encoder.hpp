#ifndef SEMSIG_ENCODER_HPP
#define SEMSIG_ENCODER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semsig/signal.hpp"

namespace semsig {

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign product(Sign a, Sign b) noexcept {
  return static_cast<Sign>(to_int(a) * to_int(b));
}

/// Signs of the backward difference s[n]-s[n-1], the second difference and
/// the forward difference s[n+1]-s[n] around an interior point n.
struct SignTriple {
  Sign d_back = Sign::Zero;
  Sign dd = Sign::Zero;
  Sign d_fwd = Sign::Zero;

  friend constexpr bool operator==(const SignTriple&, const SignTriple&) = default;
};

/// The 13 realizable three-point configurations, numbered 1..13.
enum class ConfigSymbol : std::uint8_t {
  FallingConvex = 1,   // (-,+,-)
  RisingConcave = 2,   // (+,-,+)
  RisingConvex = 3,    // (+,+,+)
  FallingConcave = 4,  // (-,-,-)
  Trough = 5,          // (-,+,+)
  Peak = 6,            // (+,-,-)
  RisingLine = 7,      // (+,0,+)
  FallingLine = 8,     // (-,0,-)
  Flat = 9,            // (0,0,0)
  FlatToRise = 10,     // (0,+,+)
  FlatToFall = 11,     // (0,-,-)
  RiseToFlat = 12,     // (+,-,0)
  FallToFlat = 13,     // (-,+,0)
};

inline constexpr std::size_t kSymbolCount = 13;

constexpr int id(ConfigSymbol s) noexcept { return static_cast<int>(s); }
constexpr std::size_t slot(ConfigSymbol s) noexcept {
  return static_cast<std::size_t>(s) - 1;
}

/// Throws BadArgument outside 1..13.
ConfigSymbol symbol_from_id(int id);

inline constexpr std::array<ConfigSymbol, kSymbolCount> kAllSymbols = {
    ConfigSymbol::FallingConvex, ConfigSymbol::RisingConcave,
    ConfigSymbol::RisingConvex,  ConfigSymbol::FallingConcave,
    ConfigSymbol::Trough,        ConfigSymbol::Peak,
    ConfigSymbol::RisingLine,    ConfigSymbol::FallingLine,
    ConfigSymbol::Flat,          ConfigSymbol::FlatToRise,
    ConfigSymbol::FlatToFall,    ConfigSymbol::RiseToFlat,
    ConfigSymbol::FallToFlat};

SignTriple triple_of(ConfigSymbol s) noexcept;

/// Inverse of triple_of; empty for the 14 unrealizable triples.
std::optional<ConfigSymbol> symbol_of(const SignTriple& t) noexcept;

/// 0 when |x| <= epsilon, otherwise the sign of x.
constexpr Sign sign_of(double x, double epsilon = 0.0) noexcept {
  if (x > epsilon) return Sign::Positive;
  if (x < -epsilon) return Sign::Negative;
  return Sign::Zero;
}

/// Differences of one window. The second difference is formed from the two
/// computed first differences, so its sign can never contradict theirs in
/// floating point.
struct WindowDifferences {
  double d_back;
  double dd;
  double d_fwd;
};

constexpr WindowDifferences window_differences(double x0, double x1, double x2) noexcept {
  const double back = x1 - x0;
  const double fwd = x2 - x1;
  return {back, fwd - back, fwd};
}

struct PProducts {
  double left;   // s''[n] * s'[n]
  double right;  // s''[n] * s'[n+1]
};

PProducts p_products(double x0, double x1, double x2) noexcept;

/// Empty when epsilon > 0 rounds the window to an unrealizable triple.
std::optional<ConfigSymbol> try_classify_window(double x0, double x1, double x2,
                                                double epsilon = 0.0) noexcept;

/// Throws InconsistentTriple when the rounded signs are jointly unrealizable.
ConfigSymbol classify_window(double x0, double x1, double x2, double epsilon = 0.0);

/// One symbol per interior sample: out[k] classifies samples (k, k+1, k+2).
/// Throws TooShort below 3 samples; InconsistentTriple carries the index of
/// the centre sample.
std::vector<ConfigSymbol> symbolize(const Signal& signal, double epsilon = 0.0);
std::vector<ConfigSymbol> symbolize(std::span<const double> samples, double epsilon = 0.0);

/// Discrete P-operator s''[n] * s'[n] at every interior sample.
std::vector<double> semantic_power(const Signal& signal);

}  // namespace semsig

#endif  // SEMSIG_ENCODER_HPP
