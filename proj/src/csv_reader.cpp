#include <charconv>
#include <fstream>
#include <optional>
#include <string_view>

#include "semsig/error.hpp"
#include "semsig/io.hpp"

namespace semsig::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<std::string_view> field(std::string_view line, std::size_t column) {
  std::size_t begin = 0;
  for (std::size_t c = 0; c < column; ++c) {
    const auto comma = line.find(',', begin);
    if (comma == std::string_view::npos) return std::nullopt;
    begin = comma + 1;
  }
  const auto end = line.find(',', begin);
  return trim(line.substr(begin, end == std::string_view::npos ? end : end - begin));
}

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

Signal read_csv(const std::filesystem::path& path, std::size_t column, double rate_hz) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());

  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = field(line, column);
    if (!f) {
      throw Error(ErrorCode::MissingColumn,
                  path.string() + ":" + std::to_string(line_no) + ": no column " +
                      std::to_string(column),
                  line_no);
    }
    const auto v = parse_double(*f);
    if (!v) {
      if (!seen_row) {
        seen_row = true;  // header
        continue;
      }
      throw Error(ErrorCode::ParseError,
                  path.string() + ":" + std::to_string(line_no) + ": not a number: '" +
                      std::string(*f) + "'",
                  line_no);
    }
    seen_row = true;
    samples.push_back(*v);
  }
  return make_signal(std::move(samples), rate_hz);
}

}  // namespace semsig::io
