#include "semsig/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semsig/analysis.hpp"
#include "semsig/automaton.hpp"
#include "semsig/encoder.hpp"
#include "semsig/error.hpp"
#include "semsig/io.hpp"
#include "semsig/report.hpp"
#include "semsig/resampler.hpp"
#include "semsig/transducer.hpp"

namespace semsig::cli {

namespace {

struct Common {
  std::string input;
  double rate = 0.0;
  std::size_t column = 0;
  double epsilon = 0.0;
  std::string format = "json";
};

struct Loaded {
  Signal signal;
  report::InputDescriptor descriptor;
};

bool has_wav_extension(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".wav";
}

Loaded load(const std::string& path, const Common& c, std::ostream& err) {
  Signal s;
  if (has_wav_extension(path)) {
    std::vector<std::string> warnings;
    s = io::read_wav(path, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
  } else {
    if (!(c.rate > 0.0)) {
      throw Error(ErrorCode::NonPositiveRate, "CSV input needs a positive --rate");
    }
    s = io::read_csv(path, c.column, c.rate);
  }
  report::InputDescriptor d{path, s.sample_rate_hz(), s.size()};
  return {std::move(s), std::move(d)};
}

void write_error(std::ostream& err, std::string_view code, const std::string& message,
                 std::optional<std::size_t> index = std::nullopt) {
  nlohmann::json e = {{"code", code}, {"message", message}};
  if (index) e["index"] = *index;
  err << nlohmann::json{{"error", e}}.dump() << "\n";
}

std::size_t samples_for(double seconds, double rate) {
  return static_cast<std::size_t>(std::llround(seconds * rate));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shape-configuration analysis of sampled signals", "semsig"};
  app.require_subcommand(1);

  Common common;
  std::string second_input;
  std::size_t window = 0, hop = 0;
  DetectorConfig detector;
  std::vector<double> rates;
  std::uint64_t seed = 0;
  std::size_t info_start = 0;
  std::optional<std::size_t> info_end;
  std::string scale_name = "raw";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "CSV or WAV file")->required();
    sub->add_option("--rate", common.rate, "Sample rate in Hz (required for CSV)");
    sub->add_option("--column", common.column, "0-based CSV column")->capture_default_str();
    sub->add_option("--epsilon", common.epsilon, "Sign tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    return sub;
  };

  auto* symbolize_cmd = add_common(app.add_subcommand("symbolize", "Configuration string"));
  auto* accept_cmd = add_common(app.add_subcommand("accept", "Run the configuration DFA"));
  auto* histogram_cmd =
      add_common(app.add_subcommand("histogram", "Configuration histogram and entropy"));
  auto* entropy_cmd = add_common(app.add_subcommand("entropy", "Sliding semantic entropy"));
  entropy_cmd->add_option("--window", window, "Window length in samples (default 2 s)");
  entropy_cmd->add_option("--hop", hop, "Hop in samples (default 0.25 s)");
  auto* spikes_cmd = add_common(app.add_subcommand("spikes", "Weighted spike detection"));
  spikes_cmd->add_option("--threshold", detector.threshold, "Threshold in signal units")
      ->capture_default_str();
  spikes_cmd->add_option("--tolerance", detector.tolerance, "Max |w2 - w1 - w3|")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spikes_cmd->add_option("--max-duration", detector.max_duration_s, "Max spike length (s)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spikes_cmd->add_option("--edge-run", detector.edge_run, "Horizontal leg of edge weights")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* compare_cmd = add_common(app.add_subcommand("compare", "Bhattacharyya distance"));
  compare_cmd->add_option("second", second_input, "Second CSV or WAV file")->required();
  auto* study_cmd =
      add_common(app.add_subcommand("resample-study", "Histograms across sample rates"));
  study_cmd->add_option("--rates", rates, "Comma-separated rates in Hz")
      ->required()
      ->delimiter(',');
  auto* surrogate_cmd = add_common(app.add_subcommand("surrogate", "Shuffle surrogate"));
  surrogate_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  auto* info_cmd = add_common(app.add_subcommand("info", "Semantic information over a range"));
  info_cmd->add_option("--start", info_start, "First sample")->capture_default_str();
  info_cmd->add_option("--end", info_end, "One past the last sample (default: length)");
  info_cmd->add_option("--scale", scale_name, "Difference scaling")
      ->check(CLI::IsMember({"raw", "analog"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return 1;
  }

  try {
    const Loaded in = load(common.input, common, err);
    const Signal& sig = in.signal;
    report::Report rep;
    rep.input = in.descriptor;
    rep.command = app.get_subcommands().front()->get_name();

    if (app.got_subcommand(symbolize_cmd)) {
      rep.payload = report::SymbolsPayload{symbolize(sig, common.epsilon)};
    } else if (app.got_subcommand(accept_cmd)) {
      const auto symbols = symbolize(sig, common.epsilon);
      rep.payload = report::AcceptancePayload{dfa_accept(symbols)};
    } else if (app.got_subcommand(histogram_cmd)) {
      const auto h = config_histogram(symbolize(sig, common.epsilon));
      rep.payload = report::HistogramPayload{h, semantic_entropy(h)};
    } else if (app.got_subcommand(entropy_cmd)) {
      const std::size_t w = window ? window : samples_for(2.0, sig.sample_rate_hz());
      const std::size_t h = hop ? hop : std::max<std::size_t>(1, samples_for(0.25, sig.sample_rate_hz()));
      rep.payload = report::EntropyPayload{sliding_entropy(sig, w, h, common.epsilon)};
    } else if (app.got_subcommand(spikes_cmd)) {
      detector.epsilon = common.epsilon;
      rep.payload = report::SpikesPayload{detector, detect_spikes(sig, detector)};
    } else if (app.got_subcommand(compare_cmd)) {
      const Loaded other = load(second_input, common, err);
      const auto p = config_histogram(symbolize(sig, common.epsilon));
      const auto q = config_histogram(symbolize(other.signal, common.epsilon));
      rep.payload = report::ComparePayload{other.descriptor, p, q, bhattacharyya(p, q)};
    } else if (app.got_subcommand(study_cmd)) {
      rep.payload =
          report::StudyPayload{sig.sample_rate_hz(), resample_study(sig, rates, common.epsilon)};
    } else if (app.got_subcommand(surrogate_cmd)) {
      const Signal s = shuffle_surrogate(sig, seed);
      rep.payload = report::SurrogatePayload{
          seed, std::vector<double>(s.samples().begin(), s.samples().end())};
    } else if (app.got_subcommand(info_cmd)) {
      const std::size_t end = info_end.value_or(sig.size());
      const auto scale = scale_name == "analog" ? PowerScale::Analog : PowerScale::Raw;
      rep.payload = report::InfoPayload{info_start, end, scale,
                                        semantic_information(sig, info_start, end, scale)};
    }

    if (common.format == "csv") {
      const auto csv = report::to_csv(rep);
      if (!csv) {
        throw Error(ErrorCode::BadArgument,
                    "CSV output is only available for histogram and entropy reports");
      }
      out << *csv;
    } else {
      out << report::to_json(rep);
    }
    return 0;
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what(), e.index());
    return is_input_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what());
    return 2;
  }
}

}  // namespace semsig::cli
