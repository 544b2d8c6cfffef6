#ifndef SEMSIG_TESTS_FIXTURES_HPP
#define SEMSIG_TESTS_FIXTURES_HPP

// Scratch files for the I/O and CLI tests.

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace fixture {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("semsig-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline fs::path write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

struct WavSpec {
  std::uint16_t format = 1;  // 1 PCM, 3 float, 0xFFFE extensible
  std::uint16_t channels = 1;
  std::uint32_t rate = 8000;
  std::uint16_t bits = 16;
  std::uint16_t sub_format = 1;  // only used when extensible
};

inline void put16(std::vector<unsigned char>& b, std::uint16_t v) {
  b.push_back(static_cast<unsigned char>(v & 0xFF));
  b.push_back(static_cast<unsigned char>(v >> 8));
}

inline void put32(std::vector<unsigned char>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
}

inline void put_tag(std::vector<unsigned char>& b, const char* tag) {
  b.insert(b.end(), tag, tag + 4);
}

/// RIFF/WAVE bytes around an already-encoded data payload.
inline std::vector<unsigned char> wav_bytes(const WavSpec& s,
                                            const std::vector<unsigned char>& data) {
  std::vector<unsigned char> fmt;
  const std::uint16_t block = static_cast<std::uint16_t>(s.channels * (s.bits / 8));
  put16(fmt, s.format);
  put16(fmt, s.channels);
  put32(fmt, s.rate);
  put32(fmt, s.rate * block);
  put16(fmt, block);
  put16(fmt, s.bits);
  if (s.format == 0xFFFE) {
    put16(fmt, 22);
    put16(fmt, s.bits);
    put32(fmt, 0);
    put16(fmt, s.sub_format);
    const unsigned char guid_tail[14] = {0x00, 0x00, 0x00, 0x00, 0x10, 0x00, 0x80,
                                         0x00, 0x00, 0xAA, 0x00, 0x38, 0x9B, 0x71};
    fmt.insert(fmt.end(), guid_tail, guid_tail + 14);
  }
  std::vector<unsigned char> out;
  put_tag(out, "RIFF");
  put32(out, static_cast<std::uint32_t>(4 + 8 + fmt.size() + 8 + data.size()));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, static_cast<std::uint32_t>(fmt.size()));
  out.insert(out.end(), fmt.begin(), fmt.end());
  put_tag(out, "data");
  put32(out, static_cast<std::uint32_t>(data.size()));
  out.insert(out.end(), data.begin(), data.end());
  return out;
}

inline std::vector<unsigned char> pcm16(const std::vector<std::int16_t>& v) {
  std::vector<unsigned char> b;
  for (auto x : v) put16(b, static_cast<std::uint16_t>(x));
  return b;
}

inline std::vector<unsigned char> float32(const std::vector<float>& v) {
  std::vector<unsigned char> b;
  for (auto x : v) put32(b, std::bit_cast<std::uint32_t>(x));
  return b;
}

inline fs::path write_bytes(const fs::path& p, const std::vector<unsigned char>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  return p;
}

}  // namespace fixture

#endif  // SEMSIG_TESTS_FIXTURES_HPP
