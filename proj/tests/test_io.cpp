#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "fixtures.hpp"
#include "semsig/error.hpp"
#include "semsig/io.hpp"

using namespace semsig;
using Catch::Approx;

namespace {

std::vector<double> values(const Signal& s) { return {s.samples().begin(), s.samples().end()}; }

Error error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected semsig::Error");
  return Error(ErrorCode::IoError, "unreachable");
}

}  // namespace

TEST_CASE("read_csv", "[io][csv]") {
  fixture::TempDir dir;

  SECTION("plain column") {
    const auto s = io::read_csv(fixture::write_text(dir.file("a.csv"), "0\n1\n0\n"), 0, 256);
    CHECK(values(s) == std::vector<double>{0, 1, 0});
    CHECK(s.sample_rate_hz() == 256.0);
  }
  SECTION("header row is skipped") {
    const auto s = io::read_csv(fixture::write_text(dir.file("h.csv"), "amp\n0\n1\n"), 0, 10);
    CHECK(values(s) == std::vector<double>{0, 1});
  }
  SECTION("column selection, CRLF, blank lines, exponents") {
    const auto p = fixture::write_text(dir.file("m.csv"),
                                       "t,v\r\n0,1.5\r\n\r\n1,-2e-3\r\n2, 4\r\n");
    CHECK(values(io::read_csv(p, 1, 1)) == std::vector<double>{1.5, -2e-3, 4});
    CHECK(values(io::read_csv(p, 0, 1)) == std::vector<double>{0, 1, 2});
  }
  SECTION("parse error reports the line") {
    const auto e = error_of(
        [&] { io::read_csv(fixture::write_text(dir.file("bad.csv"), "0\nabc\n"), 0, 1); });
    CHECK(e.code() == ErrorCode::ParseError);
    REQUIRE(e.index());
    CHECK(*e.index() == 2);
  }
  SECTION("missing column") {
    const auto e = error_of(
        [&] { io::read_csv(fixture::write_text(dir.file("c.csv"), "1,2\n3\n"), 1, 1); });
    CHECK(e.code() == ErrorCode::MissingColumn);
    REQUIRE(e.index());
    CHECK(*e.index() == 2);
  }
  SECTION("non-finite values and bad rates are rejected") {
    CHECK(error_of([&] {
            io::read_csv(fixture::write_text(dir.file("n.csv"), "1\nnan\n"), 0, 1);
          }).code() == ErrorCode::NonFiniteSample);
    CHECK(error_of([&] {
            io::read_csv(fixture::write_text(dir.file("r.csv"), "1\n2\n"), 0, 0);
          }).code() == ErrorCode::NonPositiveRate);
  }
  SECTION("missing file") {
    CHECK(error_of([&] { io::read_csv(dir.file("absent.csv"), 0, 1); }).code() ==
          ErrorCode::IoError);
  }
}

TEST_CASE("read_wav", "[io][wav]") {
  fixture::TempDir dir;

  SECTION("16-bit mono zeros") {
    const auto p = fixture::write_bytes(
        dir.file("z.wav"), fixture::wav_bytes({}, fixture::pcm16(std::vector<std::int16_t>(80))));
    const auto s = io::read_wav(p);
    CHECK(s.size() == 80);
    CHECK(s.sample_rate_hz() == 8000.0);
    for (double v : s.samples()) CHECK(v == 0.0);
  }
  SECTION("16-bit scaling") {
    const auto p = fixture::write_bytes(
        dir.file("s.wav"), fixture::wav_bytes({}, fixture::pcm16({-32768, 0, 16384, 32767})));
    const auto s = io::read_wav(p);
    CHECK(values(s) == std::vector<double>{-1.0, 0.0, 0.5, 32767.0 / 32768.0});
  }
  SECTION("float32, plain and extensible") {
    const std::vector<float> v{0.25f, -0.5f, 1.0f};
    const auto plain = fixture::write_bytes(
        dir.file("f.wav"), fixture::wav_bytes({3, 1, 44100, 32}, fixture::float32(v)));
    CHECK(values(io::read_wav(plain)) == std::vector<double>{0.25, -0.5, 1.0});
    const auto ext = fixture::write_bytes(
        dir.file("e.wav"), fixture::wav_bytes({0xFFFE, 1, 44100, 32, 3}, fixture::float32(v)));
    CHECK(values(io::read_wav(ext)) == std::vector<double>{0.25, -0.5, 1.0});
  }
  SECTION("stereo keeps the first channel and warns") {
    const auto p = fixture::write_bytes(
        dir.file("st.wav"),
        fixture::wav_bytes({1, 2, 16000, 16}, fixture::pcm16({100, -1, 200, -2, 300, -3})));
    std::vector<std::string> warnings;
    const auto s = io::read_wav(p, &warnings);
    CHECK(values(s) == std::vector<double>{100 / 32768.0, 200 / 32768.0, 300 / 32768.0});
    CHECK(s.sample_rate_hz() == 16000.0);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("2 channels") != std::string::npos);
  }
  SECTION("24-bit PCM is unsupported") {
    const auto p = fixture::write_bytes(
        dir.file("24.wav"),
        fixture::wav_bytes({1, 1, 8000, 24}, std::vector<unsigned char>(30, 0)));
    CHECK(error_of([&] { io::read_wav(p); }).code() == ErrorCode::UnsupportedFormat);
  }
  SECTION("corrupt headers") {
    CHECK(error_of([&] {
            io::read_wav(fixture::write_text(dir.file("x.wav"), "RIFX....WAVE"));
          }).code() == ErrorCode::CorruptHeader);
    auto bytes = fixture::wav_bytes({}, fixture::pcm16({1, 2, 3}));
    bytes.resize(30);  // cut inside the fmt chunk
    CHECK(error_of([&] { io::read_wav(fixture::write_bytes(dir.file("t.wav"), bytes)); })
              .code() == ErrorCode::CorruptHeader);
  }
  SECTION("truncated data chunk keeps the complete frames") {
    auto bytes = fixture::wav_bytes({}, fixture::pcm16({1, 2, 3, 4}));
    bytes.resize(bytes.size() - 3);
    const auto s = io::read_wav(fixture::write_bytes(dir.file("tr.wav"), bytes));
    CHECK(s.size() == 2);
  }
}
