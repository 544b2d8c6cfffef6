#include "semsig/encoder.hpp"

#include <string>

#include "semsig/error.hpp"
#include "semsig/kernels.hpp"

namespace semsig {

namespace {

constexpr SignTriple T(int back, int dd, int fwd) {
  return {static_cast<Sign>(back), static_cast<Sign>(dd), static_cast<Sign>(fwd)};
}

// Indexed by symbol id - 1.
constexpr std::array<SignTriple, kSymbolCount> kTriples = {
    T(-1, +1, -1), T(+1, -1, +1), T(+1, +1, +1), T(-1, -1, -1), T(-1, +1, +1),
    T(+1, -1, -1), T(+1, 0, +1),  T(-1, 0, -1),  T(0, 0, 0),    T(0, +1, +1),
    T(0, -1, -1),  T(+1, -1, 0),  T(-1, +1, 0)};

constexpr int triple_code(const SignTriple& t) {
  return (to_int(t.d_back) + 1) * 9 + (to_int(t.dd) + 1) * 3 + (to_int(t.d_fwd) + 1);
}

// 27-entry inverse of kTriples; 0 marks an unrealizable triple.
constexpr std::array<std::uint8_t, 27> build_inverse() {
  std::array<std::uint8_t, 27> inv{};
  for (std::size_t i = 0; i < kTriples.size(); ++i) {
    inv[static_cast<std::size_t>(triple_code(kTriples[i]))] =
        static_cast<std::uint8_t>(i + 1);
  }
  return inv;
}

constexpr auto kInverse = build_inverse();

}  // namespace

ConfigSymbol symbol_from_id(int value) {
  if (value < 1 || value > static_cast<int>(kSymbolCount)) {
    throw Error(ErrorCode::BadArgument,
                "configuration id out of range 1..13: " + std::to_string(value));
  }
  return static_cast<ConfigSymbol>(value);
}

SignTriple triple_of(ConfigSymbol s) noexcept { return kTriples[slot(s)]; }

std::optional<ConfigSymbol> symbol_of(const SignTriple& t) noexcept {
  const auto v = kInverse[static_cast<std::size_t>(triple_code(t))];
  if (v == 0) return std::nullopt;
  return static_cast<ConfigSymbol>(v);
}

PProducts p_products(double x0, double x1, double x2) noexcept {
  const auto d = window_differences(x0, x1, x2);
  return {d.dd * d.d_back, d.dd * d.d_fwd};
}

std::optional<ConfigSymbol> try_classify_window(double x0, double x1, double x2,
                                                double epsilon) noexcept {
  const auto d = window_differences(x0, x1, x2);
  return symbol_of({sign_of(d.d_back, epsilon), sign_of(d.dd, epsilon),
                    sign_of(d.d_fwd, epsilon)});
}

ConfigSymbol classify_window(double x0, double x1, double x2, double epsilon) {
  if (auto s = try_classify_window(x0, x1, x2, epsilon)) return *s;
  throw Error(ErrorCode::InconsistentTriple,
              "sign tolerance " + std::to_string(epsilon) +
                  " yields an unrealizable sign triple");
}

std::vector<ConfigSymbol> symbolize(std::span<const double> samples, double epsilon) {
  if (samples.size() < 3) {
    throw Error(ErrorCode::TooShort, "symbolization needs at least 3 samples, got " +
                                         std::to_string(samples.size()));
  }
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::BadArgument, "sign tolerance must be nonnegative");
  }
  std::vector<ConfigSymbol> out(kernels::window_count(samples.size()));
  if (auto bad = kernels::omp::classify_windows(samples, epsilon, out)) {
    throw Error(ErrorCode::InconsistentTriple,
                "sign tolerance " + std::to_string(epsilon) +
                    " yields an unrealizable sign triple at sample " +
                    std::to_string(*bad + 1),
                *bad + 1);
  }
  return out;
}

std::vector<ConfigSymbol> symbolize(const Signal& signal, double epsilon) {
  return symbolize(signal.samples(), epsilon);
}

std::vector<double> semantic_power(const Signal& signal) {
  if (signal.size() < 3) {
    throw Error(ErrorCode::TooShort, "P-operator needs at least 3 samples");
  }
  std::vector<double> out(kernels::window_count(signal.size()));
  kernels::omp::left_power(signal.samples(), out);
  return out;
}

}  // namespace semsig
