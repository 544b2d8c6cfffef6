#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <span>

#include "semsig/error.hpp"
#include "semsig/io.hpp"

namespace semsig::io {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t le16(std::span<const unsigned char> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t le32(std::span<const unsigned char> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tag_is(std::span<const unsigned char> b, std::size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

struct Format {
  std::uint16_t code;
  std::uint16_t channels;
  std::uint32_t rate;
  std::uint16_t block_align;
  std::uint16_t bits;
};

}  // namespace

Signal read_wav(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  const std::span<const unsigned char> b(bytes);
  const std::string name = path.string();

  if (b.size() < 12 || !tag_is(b, 0, "RIFF") || !tag_is(b, 8, "WAVE")) {
    throw Error(ErrorCode::CorruptHeader, name + ": not a RIFF/WAVE file");
  }

  std::optional<Format> fmt;
  std::span<const unsigned char> data;
  bool have_data = false;
  std::size_t pos = 12;
  while (pos + 8 <= b.size()) {
    const std::uint32_t size = le32(b, pos + 4);
    const std::size_t body = pos + 8;
    if (tag_is(b, pos, "fmt ")) {
      if (size < 16 || body + size > b.size()) {
        throw Error(ErrorCode::CorruptHeader, name + ": truncated fmt chunk");
      }
      Format f{le16(b, body), le16(b, body + 2), le32(b, body + 4), le16(b, body + 12),
               le16(b, body + 14)};
      if (f.code == kFormatExtensible) {
        if (size < 40) throw Error(ErrorCode::CorruptHeader, name + ": truncated extensible fmt");
        f.code = le16(b, body + 24);  // first two bytes of the subformat GUID
      }
      fmt = f;
    } else if (tag_is(b, pos, "data")) {
      // Streaming writers may leave the size unset; take what is present.
      const std::size_t avail = b.size() - body;
      data = b.subspan(body, std::min<std::size_t>(size, avail));
      have_data = true;
    }
    pos = body + size + (size & 1u);
    if (pos < body) break;  // overflow on a bogus size
  }

  if (!fmt) throw Error(ErrorCode::CorruptHeader, name + ": missing fmt chunk");
  if (!have_data) throw Error(ErrorCode::CorruptHeader, name + ": missing data chunk");
  if (fmt->channels == 0 || fmt->rate == 0) {
    throw Error(ErrorCode::CorruptHeader, name + ": zero channels or sample rate");
  }
  const bool pcm16 = fmt->code == kFormatPcm && fmt->bits == 16;
  const bool float32 = fmt->code == kFormatFloat && fmt->bits == 32;
  if (!pcm16 && !float32) {
    throw Error(ErrorCode::UnsupportedFormat,
                name + ": only 16-bit PCM and 32-bit float are supported (format " +
                    std::to_string(fmt->code) + ", " + std::to_string(fmt->bits) + " bits)");
  }
  const std::size_t bytes_per_sample = fmt->bits / 8u;
  const std::size_t frame = bytes_per_sample * fmt->channels;
  if (fmt->block_align != frame) {
    throw Error(ErrorCode::CorruptHeader, name + ": block alignment disagrees with format");
  }
  if (fmt->channels > 1 && warnings) {
    warnings->push_back(name + ": " + std::to_string(fmt->channels) +
                        " channels, using the first");
  }

  const std::size_t frames = data.size() / frame;
  std::vector<double> x(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const std::size_t at = i * frame;
    if (pcm16) {
      const auto v = static_cast<std::int16_t>(le16(data, at));
      x[i] = static_cast<double>(v) / 32768.0;
    } else {
      x[i] = static_cast<double>(std::bit_cast<float>(le32(data, at)));
    }
  }
  return make_signal(std::move(x), static_cast<double>(fmt->rate));
}

}  // namespace semsig::io
