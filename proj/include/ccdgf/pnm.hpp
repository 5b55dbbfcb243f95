#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ccdgf/core.hpp"

namespace ccdgf {

enum class PnmErrorCode {
  BadMagic,          // not "P5" / "P6"
  BadHeader,         // malformed or missing width / height / maxval token
  BadDimensions,     // zero or oversized width / height
  MaxvalOutOfRange,  // maxval outside 1..65535
  TruncatedRaster,   // fewer raster bytes than the header promises
  UnsupportedWrite,  // writer asked for a maxval / channel count it cannot emit
  Io,                // file could not be opened / written
};

const char* to_string(PnmErrorCode code) noexcept;

class PnmError : public Error {
 public:
  PnmError(PnmErrorCode code, std::size_t offset, const std::string& what);

  PnmErrorCode code() const noexcept { return code_; }
  /// Byte offset in the stream where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  PnmErrorCode code_;
  std::size_t offset_;
};

/// Decoded P5 (one channel) or P6 (three channels) image. Samples are
/// raw / maxval in [0, 1].
struct PnmImage {
  std::vector<Image> channels;
  int maxval = 255;
};

PnmImage read_pnm(std::span<const std::uint8_t> bytes);

/// Encodes one channel as P5 or three as P6. Values are clamped to [0, 1]
/// and rounded half away from zero. maxval must be 255 or 65535; 16-bit
/// samples are big-endian.
std::vector<std::uint8_t> write_pnm(std::span<const Image> channels, int maxval);

PnmImage read_pnm_file(const std::filesystem::path& path);
void write_pnm_file(const std::filesystem::path& path, std::span<const Image> channels,
                    int maxval);

/// round(clamp(v, 0, 1) * maxval) / maxval.
double quantize(double v, int maxval) noexcept;

}  // namespace ccdgf
