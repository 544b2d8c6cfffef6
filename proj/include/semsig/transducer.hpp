#ifndef SEMSIG_TRANSDUCER_HPP
#define SEMSIG_TRANSDUCER_HPP

#include <cstddef>
#include <vector>

#include "semsig/signal.hpp"

namespace semsig {

/// Normalized slope of one edge: |atan(rise / run)| in degrees over 90, so
/// the result lies in [0, 1) for rising and falling edges alike.
double edge_weight(double rise, double run = 1.0);

/// One weight per edge (len - 1 entries). `run` is the horizontal leg of the
/// weight triangle in amplitude units per sample; 1 unless the caller rescales.
std::vector<double> weight_vector(const Signal& signal, double run = 1.0);

struct DetectorConfig {
  double threshold = 0.0;
  double tolerance = 0.02;
  double max_duration_s = 0.01;
  double epsilon = 0.0;
  // Horizontal leg passed to edge_weight. The weight identities only hold in
  // the small-angle regime, i.e. per-sample increments much smaller than
  // edge_run; for millivolt-scale spikes sampled at ~10 kHz use ~1000.
  double edge_run = 1.0;

  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

/// One accepted spike. Indices are sample positions with
/// onset < peak < trough < offset. w1 accumulates from the threshold crossing
/// to the peak, w2 from the peak to the trough, w3 from the trough back up to
/// the threshold (or to the first slope reversal).
struct SpikeEvent {
  std::size_t onset_index = 0;
  std::size_t peak_index = 0;
  std::size_t trough_index = 0;
  std::size_t offset_index = 0;
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
  double residual = 0.0;  // |w2 - w1 - w3|

  friend bool operator==(const SpikeEvent&, const SpikeEvent&) = default;
};

/// Threshold-crossing spike detector that keeps a candidate iff
/// |w2 - w1 - w3| <= tolerance and its duration fits max_duration_s.
std::vector<SpikeEvent> detect_spikes(const Signal& signal, const DetectorConfig& config);

}  // namespace semsig

#endif  // SEMSIG_TRANSDUCER_HPP
