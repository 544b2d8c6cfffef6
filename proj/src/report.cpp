#include "semsig/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"
#include "semsig/error.hpp"

namespace semsig::report {

using nlohmann::json;

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// JSON has no infinities; they travel as strings.
json real(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double real_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw Error(ErrorCode::ParseError, "bad real value '" + s + "'");
  }
  return j.get<double>();
}

json input_json(const InputDescriptor& in) {
  return {{"path", in.path}, {"rate_hz", real(in.rate_hz)}, {"length", in.length}};
}

InputDescriptor input_from(const json& j) {
  return {j.at("path").get<std::string>(), real_from(j.at("rate_hz")),
          j.at("length").get<std::size_t>()};
}

json histogram_json(const ConfigHistogram& h) {
  json counts = json::array();
  json densities = json::array();
  for (ConfigSymbol s : kAllSymbols) {
    counts.push_back(h.count(s));
    densities.push_back(h.density(s));
  }
  return {{"total", h.total()}, {"counts", counts}, {"densities", densities}};
}

ConfigHistogram histogram_from(const json& j) {
  const auto& c = j.at("counts");
  if (!c.is_array() || c.size() != kSymbolCount) {
    throw Error(ErrorCode::ParseError, "histogram counts must hold 13 entries");
  }
  ConfigHistogram::Counts counts{};
  for (std::size_t i = 0; i < kSymbolCount; ++i) counts[i] = c[i].get<std::uint64_t>();
  auto h = ConfigHistogram::from_counts(counts);
  if (h.total() != j.at("total").get<std::uint64_t>()) {
    throw Error(ErrorCode::ParseError, "histogram total disagrees with counts");
  }
  return h;
}

DfaState state_from(const std::string& s) {
  for (DfaState q : {DfaState::S, DfaState::A, DfaState::B, DfaState::C, DfaState::D}) {
    if (to_string(q) == s) return q;
  }
  throw Error(ErrorCode::ParseError, "unknown automaton state '" + s + "'");
}

std::string_view scale_name(PowerScale s) { return s == PowerScale::Analog ? "analog" : "raw"; }

PowerScale scale_from(const std::string& s) {
  if (s == "raw") return PowerScale::Raw;
  if (s == "analog") return PowerScale::Analog;
  throw Error(ErrorCode::ParseError, "unknown power scale '" + s + "'");
}

json payload_json(const Payload& payload) {
  json body = std::visit(
      overloaded{
          [](const SymbolsPayload& p) {
            json a = json::array();
            for (auto s : p.symbols) a.push_back(id(s));
            return json{{"symbols", a}};
          },
          [](const HistogramPayload& p) {
            json j = histogram_json(p.histogram);
            j["semantic_entropy"] = p.semantic_entropy;
            return j;
          },
          [](const AcceptancePayload& p) {
            json trace = json::array();
            for (auto q : p.result.trace) trace.push_back(to_string(q));
            return json{{"accepted", p.result.accepted},
                        {"final_state", to_string(p.result.final_state)},
                        {"trace", trace},
                        {"rejection_index", p.result.rejection_index
                                                ? json(*p.result.rejection_index)
                                                : json(nullptr)}};
          },
          [](const SpikesPayload& p) {
            json events = json::array();
            for (const auto& e : p.events) {
              events.push_back({{"onset_index", e.onset_index},
                                {"peak_index", e.peak_index},
                                {"trough_index", e.trough_index},
                                {"offset_index", e.offset_index},
                                {"w1", e.w1},
                                {"w2", e.w2},
                                {"w3", e.w3},
                                {"residual", e.residual}});
            }
            const auto& c = p.config;
            return json{{"config",
                         {{"threshold", c.threshold},
                          {"tolerance", c.tolerance},
                          {"max_duration_s", c.max_duration_s},
                          {"epsilon", c.epsilon},
                          {"edge_run", c.edge_run}}},
                        {"events", events}};
          },
          [](const EntropyPayload& p) {
            return json{{"window_len", p.series.window_len},
                        {"hop", p.series.hop},
                        {"start_indices", p.series.start_indices},
                        {"values", p.series.values}};
          },
          [](const StudyPayload& p) {
            json rows = json::array();
            for (const auto& r : p.rows) {
              rows.push_back({{"rate_hz", r.rate_hz},
                              {"sample_count", r.sample_count},
                              {"downsampled", r.downsampled},
                              {"histogram", histogram_json(r.histogram)}});
            }
            return json{{"source_rate_hz", p.source_rate_hz}, {"rows", rows}};
          },
          [](const ComparePayload& p) {
            return json{{"second_input", input_json(p.second_input)},
                        {"first", histogram_json(p.first)},
                        {"second", histogram_json(p.second)},
                        {"bhattacharyya", real(p.bhattacharyya)}};
          },
          [](const SurrogatePayload& p) {
            return json{{"seed", p.seed}, {"samples", p.samples}};
          },
          [](const InfoPayload& p) {
            return json{{"start", p.start},
                        {"end", p.end},
                        {"scale", scale_name(p.scale)},
                        {"value", p.value}};
          },
      },
      payload);
  json out = {{"kind", payload_kind(payload)}};
  out.update(body);
  return out;
}

Payload payload_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "symbols") {
    SymbolsPayload p;
    for (const auto& v : j.at("symbols")) p.symbols.push_back(symbol_from_id(v.get<int>()));
    return p;
  }
  if (kind == "histogram") {
    return HistogramPayload{histogram_from(j), j.at("semantic_entropy").get<double>()};
  }
  if (kind == "acceptance") {
    AcceptancePayload p;
    p.result.accepted = j.at("accepted").get<bool>();
    p.result.final_state = state_from(j.at("final_state").get<std::string>());
    for (const auto& q : j.at("trace")) p.result.trace.push_back(state_from(q.get<std::string>()));
    if (!j.at("rejection_index").is_null()) {
      p.result.rejection_index = j.at("rejection_index").get<std::size_t>();
    }
    return p;
  }
  if (kind == "spikes") {
    SpikesPayload p;
    const auto& c = j.at("config");
    p.config = {c.at("threshold").get<double>(), c.at("tolerance").get<double>(),
                c.at("max_duration_s").get<double>(), c.at("epsilon").get<double>(),
                c.at("edge_run").get<double>()};
    for (const auto& e : j.at("events")) {
      p.events.push_back({e.at("onset_index").get<std::size_t>(),
                          e.at("peak_index").get<std::size_t>(),
                          e.at("trough_index").get<std::size_t>(),
                          e.at("offset_index").get<std::size_t>(), e.at("w1").get<double>(),
                          e.at("w2").get<double>(), e.at("w3").get<double>(),
                          e.at("residual").get<double>()});
    }
    return p;
  }
  if (kind == "entropy") {
    EntropyPayload p;
    p.series.window_len = j.at("window_len").get<std::size_t>();
    p.series.hop = j.at("hop").get<std::size_t>();
    p.series.start_indices = j.at("start_indices").get<std::vector<std::size_t>>();
    p.series.values = j.at("values").get<std::vector<double>>();
    return p;
  }
  if (kind == "study") {
    StudyPayload p;
    p.source_rate_hz = j.at("source_rate_hz").get<double>();
    for (const auto& r : j.at("rows")) {
      p.rows.push_back({r.at("rate_hz").get<double>(), r.at("sample_count").get<std::size_t>(),
                        r.at("downsampled").get<bool>(), histogram_from(r.at("histogram"))});
    }
    return p;
  }
  if (kind == "compare") {
    return ComparePayload{input_from(j.at("second_input")), histogram_from(j.at("first")),
                          histogram_from(j.at("second")), real_from(j.at("bhattacharyya"))};
  }
  if (kind == "surrogate") {
    return SurrogatePayload{j.at("seed").get<std::uint64_t>(),
                            j.at("samples").get<std::vector<double>>()};
  }
  if (kind == "info") {
    return InfoPayload{j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>(),
                       scale_from(j.at("scale").get<std::string>()),
                       j.at("value").get<double>()};
  }
  throw Error(ErrorCode::ParseError, "unknown payload kind '" + kind + "'");
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view payload_kind(const Payload& p) noexcept {
  static constexpr std::string_view kinds[] = {"symbols", "histogram", "acceptance",
                                               "spikes",  "entropy",   "study",
                                               "compare", "surrogate", "info"};
  return kinds[p.index()];
}

std::string to_json(const Report& r) {
  const json j = {{"tool_version", r.tool_version},
                  {"command", r.command},
                  {"input", input_json(r.input)},
                  {"payload", payload_json(r.payload)}};
  return j.dump(2) + "\n";
}

Report parse_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.input = input_from(j.at("input"));
    r.payload = payload_from(j.at("payload"));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::optional<std::string> to_csv(const Report& r) {
  if (const auto* h = std::get_if<HistogramPayload>(&r.payload)) {
    std::string out = "symbol,count,density\n";
    for (ConfigSymbol s : kAllSymbols) {
      out += std::to_string(id(s)) + "," + std::to_string(h->histogram.count(s)) + "," +
             format_real(h->histogram.density(s)) + "\n";
    }
    return out;
  }
  if (const auto* e = std::get_if<EntropyPayload>(&r.payload)) {
    std::string out = "start_index,semantic_entropy\n";
    for (std::size_t i = 0; i < e->series.values.size(); ++i) {
      out += std::to_string(e->series.start_indices[i]) + "," +
             format_real(e->series.values[i]) + "\n";
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace semsig::report
