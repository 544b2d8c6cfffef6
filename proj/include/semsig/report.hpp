#ifndef SEMSIG_REPORT_HPP
#define SEMSIG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semsig/analysis.hpp"
#include "semsig/automaton.hpp"
#include "semsig/resampler.hpp"
#include "semsig/transducer.hpp"

namespace semsig::report {

inline constexpr std::string_view kToolVersion = "semsig-report/1.0";

struct InputDescriptor {
  std::string path;
  double rate_hz = 0.0;
  std::size_t length = 0;

  friend bool operator==(const InputDescriptor&, const InputDescriptor&) = default;
};

struct SymbolsPayload {
  std::vector<ConfigSymbol> symbols;
  friend bool operator==(const SymbolsPayload&, const SymbolsPayload&) = default;
};

struct HistogramPayload {
  ConfigHistogram histogram;
  double semantic_entropy = 0.0;
  friend bool operator==(const HistogramPayload&, const HistogramPayload&) = default;
};

struct AcceptancePayload {
  AcceptanceResult result;
  friend bool operator==(const AcceptancePayload&, const AcceptancePayload&) = default;
};

struct SpikesPayload {
  DetectorConfig config;
  std::vector<SpikeEvent> events;
  friend bool operator==(const SpikesPayload&, const SpikesPayload&) = default;
};

struct EntropyPayload {
  EntropySeries series;
  friend bool operator==(const EntropyPayload&, const EntropyPayload&) = default;
};

struct StudyPayload {
  double source_rate_hz = 0.0;
  std::vector<RateHistogram> rows;
  friend bool operator==(const StudyPayload&, const StudyPayload&) = default;
};

struct ComparePayload {
  InputDescriptor second_input;
  ConfigHistogram first;
  ConfigHistogram second;
  double bhattacharyya = 0.0;  // may be +infinity
  friend bool operator==(const ComparePayload&, const ComparePayload&) = default;
};

struct SurrogatePayload {
  std::uint64_t seed = 0;
  std::vector<double> samples;
  friend bool operator==(const SurrogatePayload&, const SurrogatePayload&) = default;
};

struct InfoPayload {
  std::size_t start = 0;
  std::size_t end = 0;
  PowerScale scale = PowerScale::Raw;
  double value = 0.0;
  friend bool operator==(const InfoPayload&, const InfoPayload&) = default;
};

using Payload = std::variant<SymbolsPayload, HistogramPayload, AcceptancePayload,
                             SpikesPayload, EntropyPayload, StudyPayload,
                             ComparePayload, SurrogatePayload, InfoPayload>;

/// Kind tag written to payload.kind.
std::string_view payload_kind(const Payload& p) noexcept;

struct Report {
  std::string tool_version{kToolVersion};
  InputDescriptor input;
  std::string command;
  Payload payload;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Pretty-printed JSON with a trailing newline. Doubles are written in
/// shortest round-trip form, so parse_json(to_json(r)) == r.
std::string to_json(const Report& r);

/// Throws ParseError on malformed JSON or a schema mismatch.
Report parse_json(std::string_view text);

/// CSV rendering; only histogram and entropy payloads have one.
std::optional<std::string> to_csv(const Report& r);

}  // namespace semsig::report

#endif  // SEMSIG_REPORT_HPP
