#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccdgf/core.hpp"

namespace ccdgf::synth {

// Deterministic test-image generators. Same seed, same pixels.

/// Rectangles and discs at distinct grey levels in [0.2, 0.8] over a
/// background level; at least two regions.
Image piecewise(int width, int height, std::uint64_t seed);

/// Sum of a few low-frequency cosines, range roughly [0.2, 0.8].
Image smooth(int width, int height, std::uint64_t seed);

/// Stripes of the given amplitude and period (pixels) whose orientation
/// changes per 16-pixel cell.
Image oriented_texture(int width, int height, std::uint64_t seed, double amplitude = 0.08,
                       double period = 4.0);

Image add_noise(const Image& clean, double sigma, std::uint64_t seed);

/// Horizontal box blur of the given length, clamped at the border.
Image motion_blur(const Image& x, int length);

struct FlashPair {
  Image scene;     // sharp ground truth
  Image flash;     // sharp, tone-shifted, nearly noise-free
  Image no_flash;  // blurred and noisy, correct tone
};

FlashPair flash_pair(int width, int height, std::uint64_t seed, double sigma = 0.03);

enum class Kind { Noise, Piecewise, Texture, FlashPair };

Kind parse_kind(std::string_view name);
const char* to_string(Kind kind) noexcept;

struct NamedImage {
  std::string name;
  Image image;
};

/// Images for one generator kind:
///   noise      -> clean (smooth field), noisy
///   piecewise  -> clean, noisy
///   texture    -> structure, textured
///   flash-pair -> scene, flash, no_flash
std::vector<NamedImage> generate(Kind kind, std::uint64_t seed, int width, int height,
                                 double sigma = 0.05);

}  // namespace ccdgf::synth
