#ifndef SEMSIG_IO_HPP
#define SEMSIG_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "semsig/signal.hpp"

namespace semsig::io {

/// Reads one numeric column (0-based) of a comma-separated file. A first row
/// whose selected field is not numeric is taken as the header; blank lines
/// are skipped. ParseError and MissingColumn carry the 1-based line number.
Signal read_csv(const std::filesystem::path& path, std::size_t column, double rate_hz);

/// Reads RIFF/WAVE with 16-bit integer PCM (scaled by 1/32768) or 32-bit
/// IEEE float samples. Multichannel files yield their first channel and a
/// note in `warnings` when provided.
Signal read_wav(const std::filesystem::path& path,
                std::vector<std::string>* warnings = nullptr);

}  // namespace semsig::io

#endif  // SEMSIG_IO_HPP
