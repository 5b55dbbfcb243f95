#include "ccdgf/pnm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

namespace ccdgf {
namespace {

constexpr std::uint64_t kMaxDimension = 1u << 24;
constexpr std::uint64_t kMaxPixels = 1ull << 31;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

class HeaderReader {
 public:
  HeaderReader(std::span<const std::uint8_t> bytes, std::size_t pos) : bytes_(bytes), pos_(pos) {}

  std::size_t pos() const { return pos_; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const std::uint8_t c = bytes_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads a decimal token; returns its start offset through `start`.
  // Values above `limit` are reported with `overflow_code`.
  std::uint64_t number(const char* what, std::uint64_t limit, PnmErrorCode overflow_code,
                       std::size_t& start) {
    skip_space_and_comments();
    start = pos_;
    if (pos_ >= bytes_.size()) {
      throw PnmError(PnmErrorCode::BadHeader, pos_,
                     std::string("unexpected end of header reading ") + what);
    }
    if (!is_digit(bytes_[pos_])) {
      throw PnmError(PnmErrorCode::BadHeader, pos_, std::string("expected digits for ") + what);
    }
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && is_digit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > limit) {
        throw PnmError(overflow_code, start, std::string(what) + " out of range");
      }
      ++pos_;
    }
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw PnmError(PnmErrorCode::BadHeader, pos_,
                     std::string("unexpected character after ") + what);
    }
    return v;
  }

  void expect_single_space() {
    if (pos_ >= bytes_.size()) {
      throw PnmError(PnmErrorCode::TruncatedRaster, pos_, "missing whitespace before raster");
    }
    if (!is_space(bytes_[pos_])) {
      throw PnmError(PnmErrorCode::BadHeader, pos_, "expected single whitespace after maxval");
    }
    ++pos_;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_ascii(std::vector<std::uint8_t>& out, const std::string& s) {
  out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

const char* to_string(PnmErrorCode code) noexcept {
  switch (code) {
    case PnmErrorCode::BadMagic: return "bad_magic";
    case PnmErrorCode::BadHeader: return "bad_header";
    case PnmErrorCode::BadDimensions: return "bad_dimensions";
    case PnmErrorCode::MaxvalOutOfRange: return "maxval_out_of_range";
    case PnmErrorCode::TruncatedRaster: return "truncated_raster";
    case PnmErrorCode::UnsupportedWrite: return "unsupported_write";
    case PnmErrorCode::Io: return "io";
  }
  return "unknown";
}

PnmError::PnmError(PnmErrorCode code, std::size_t offset, const std::string& what)
    : Error(std::string("pnm ") + to_string(code) + " at byte " + std::to_string(offset) + ": " +
            what),
      code_(code),
      offset_(offset) {}

double quantize(double v, int maxval) noexcept {
  const double c = std::clamp(v, 0.0, 1.0);
  return std::round(c * maxval) / maxval;
}

PnmImage read_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.empty() || bytes[0] != 'P') {
    throw PnmError(PnmErrorCode::BadMagic, 0, "expected 'P'");
  }
  if (bytes.size() < 2 || (bytes[1] != '5' && bytes[1] != '6')) {
    throw PnmError(PnmErrorCode::BadMagic, 1, "only binary P5 / P6 are supported");
  }
  if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#') {
    throw PnmError(PnmErrorCode::BadMagic, 2, "magic number not followed by whitespace");
  }
  const int channels = bytes[1] == '5' ? 1 : 3;

  HeaderReader h(bytes, 2);
  std::size_t start = 0;
  const auto width = h.number("width", kMaxDimension, PnmErrorCode::BadDimensions, start);
  if (width == 0) throw PnmError(PnmErrorCode::BadDimensions, start, "zero width");
  const auto height = h.number("height", kMaxDimension, PnmErrorCode::BadDimensions, start);
  if (height == 0) throw PnmError(PnmErrorCode::BadDimensions, start, "zero height");
  if (width * height > kMaxPixels) {
    throw PnmError(PnmErrorCode::BadDimensions, start, "image too large");
  }
  const auto maxval = h.number("maxval", 65535, PnmErrorCode::MaxvalOutOfRange, start);
  if (maxval == 0) throw PnmError(PnmErrorCode::MaxvalOutOfRange, start, "maxval must be >= 1");
  h.expect_single_space();

  const std::size_t bps = maxval > 255 ? 2 : 1;
  const std::size_t samples = static_cast<std::size_t>(width * height) * channels;
  const std::size_t need = samples * bps;
  const std::size_t data_start = h.pos();
  if (bytes.size() - data_start < need) {
    throw PnmError(PnmErrorCode::TruncatedRaster, bytes.size(),
                   "raster needs " + std::to_string(need) + " bytes, found " +
                       std::to_string(bytes.size() - data_start));
  }

  PnmImage out;
  out.maxval = static_cast<int>(maxval);
  const int w = static_cast<int>(width);
  const int hgt = static_cast<int>(height);
  out.channels.assign(static_cast<std::size_t>(channels), Image(w, hgt));
  const auto denom = static_cast<double>(maxval);
  const std::uint8_t* src = bytes.data() + data_start;
  for (std::size_t s = 0; s < samples; ++s) {
    const unsigned raw = bps == 1 ? src[s] : (unsigned{src[2 * s]} << 8) | src[2 * s + 1];
    out.channels[s % channels][s / channels] = static_cast<double>(raw) / denom;
  }
  return out;
}

std::vector<std::uint8_t> write_pnm(std::span<const Image> channels, int maxval) {
  if (maxval != 255 && maxval != 65535) {
    throw PnmError(PnmErrorCode::UnsupportedWrite, 0,
                   "maxval must be 255 or 65535, got " + std::to_string(maxval));
  }
  if (channels.size() != 1 && channels.size() != 3) {
    throw PnmError(PnmErrorCode::UnsupportedWrite, 0,
                   "need 1 or 3 channels, got " + std::to_string(channels.size()));
  }
  for (const Image& c : channels) require_same_shape(channels.front(), c, "write_pnm");
  const Image& first = channels.front();
  const std::size_t nc = channels.size();

  std::vector<std::uint8_t> out;
  put_ascii(out, std::string(nc == 1 ? "P5" : "P6") + "\n" + std::to_string(first.width()) + " " +
                     std::to_string(first.height()) + "\n" + std::to_string(maxval) + "\n");
  const std::size_t bps = maxval > 255 ? 2 : 1;
  out.reserve(out.size() + first.size() * nc * bps);
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t c = 0; c < nc; ++c) {
      const double v = std::clamp(channels[c][i], 0.0, 1.0);
      const auto raw = static_cast<unsigned>(std::round(v * maxval));
      if (bps == 2) out.push_back(static_cast<std::uint8_t>(raw >> 8));
      out.push_back(static_cast<std::uint8_t>(raw & 0xff));
    }
  }
  return out;
}

PnmImage read_pnm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PnmError(PnmErrorCode::Io, 0, "cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return read_pnm(bytes);
}

void write_pnm_file(const std::filesystem::path& path, std::span<const Image> channels,
                    int maxval) {
  const auto bytes = write_pnm(channels, maxval);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PnmError(PnmErrorCode::Io, 0, "cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw PnmError(PnmErrorCode::Io, 0, "write failed for " + path.string());
}

}  // namespace ccdgf
