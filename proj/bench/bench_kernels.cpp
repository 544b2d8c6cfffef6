// Serial reference vs OpenMP kernels on one large synthetic signal.
//
//   semsig_bench [samples] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "semsig/kernels.hpp"
#include "semsig/resampler.hpp"
#include "semsig/signal.hpp"

namespace k = semsig::kernels;

namespace {

double best_ms(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<void()>& serial,
         const std::function<void()>& parallel) {
  const double s = best_ms(repeats, serial);
  const double p = best_ms(repeats, parallel);
  std::printf("%-18s %10.3f %10.3f %8.2fx\n", name, s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : (1u << 22);
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;

  const auto sig = semsig::gen_uniform_noise(n, -1.0, 1.0, 1000.0, 42);
  const auto x = sig.samples();
  std::vector<semsig::ConfigSymbol> symbols(k::window_count(n));
  std::vector<double> power(k::window_count(n));
  std::vector<double> weights(k::edge_count(n));
  k::serial::classify_windows(x, 0.0, symbols);

  const std::size_t width = 510, hop = 64;
  std::vector<double> entropies(k::sliding_count(symbols.size(), width, hop));

  const auto spline = semsig::fit_cubic_spline(sig);
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i) times[i] = (static_cast<double>(i) + 0.37) / 1000.0;
  std::vector<double> values(n);

  std::printf("samples=%zu repeats=%d threads=%d\n", n, repeats, omp_get_max_threads());
  std::printf("%-18s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");
  row("classify_windows", repeats, [&] { k::serial::classify_windows(x, 0.0, symbols); },
      [&] { k::omp::classify_windows(x, 0.0, symbols); });
  row("left_power", repeats, [&] { k::serial::left_power(x, power); },
      [&] { k::omp::left_power(x, power); });
  row("edge_weights", repeats, [&] { k::serial::edge_weights(x, 1.0, weights); },
      [&] { k::omp::edge_weights(x, 1.0, weights); });
  row("window_entropies", repeats,
      [&] { k::serial::window_entropies(symbols, width, hop, entropies); },
      [&] { k::omp::window_entropies(symbols, width, hop, entropies); });
  row("evaluate_spline", repeats, [&] { k::serial::evaluate_spline(spline, times, values); },
      [&] { k::omp::evaluate_spline(spline, times, values); });
  return 0;
}
