#include "ccdgf/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace ccdgf::synth {
namespace {

// Distinct stream per purpose so e.g. noise does not correlate with layout.
std::mt19937_64 rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

}  // namespace

Image piecewise(int width, int height, std::uint64_t seed) {
  auto gen = rng(seed, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr std::array<double, 7> levels{0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  auto level = [&] { return levels[static_cast<std::size_t>(unit(gen) * levels.size()) % levels.size()]; };

  const double background = level();
  Image img(width, height, background);
  const int shapes = 6;
  for (int s = 0; s < shapes; ++s) {
    double v = level();
    if (s == 0) {
      while (v == background) v = level();
    }
    const double cx = unit(gen) * width;
    const double cy = unit(gen) * height;
    const double rx = (0.12 + 0.25 * unit(gen)) * width;
    const double ry = (0.12 + 0.25 * unit(gen)) * height;
    const bool disc = (s % 2) == 1;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const double dx = (x + 0.5 - cx) / rx;
        const double dy = (y + 0.5 - cy) / ry;
        const bool inside = disc ? dx * dx + dy * dy <= 1.0 : std::abs(dx) <= 1.0 && std::abs(dy) <= 1.0;
        if (inside) img(x, y) = v;
      }
    }
  }
  return img;
}

Image smooth(int width, int height, std::uint64_t seed) {
  auto gen = rng(seed, 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Image img(width, height, 0.5);
  constexpr int modes = 4;
  for (int m = 0; m < modes; ++m) {
    const double fx = 0.5 + 2.0 * unit(gen);
    const double fy = 0.5 + 2.0 * unit(gen);
    const double phase = 2.0 * std::numbers::pi * unit(gen);
    const double amp = 0.3 / modes;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        img(x, y) += amp * std::cos(2.0 * std::numbers::pi *
                                        (fx * x / width + fy * y / height) + phase);
      }
    }
  }
  return img;
}

Image oriented_texture(int width, int height, std::uint64_t seed, double amplitude,
                       double period) {
  auto gen = rng(seed, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int cell = 16;
  const int cw = (width + cell - 1) / cell;
  const int ch = (height + cell - 1) / cell;
  std::vector<double> angle(static_cast<std::size_t>(cw * ch));
  for (double& a : angle) a = std::numbers::pi * unit(gen);
  Image img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double a = angle[static_cast<std::size_t>((y / cell) * cw + x / cell)];
      const double t = x * std::cos(a) + y * std::sin(a);
      img(x, y) = amplitude * std::sin(2.0 * std::numbers::pi * t / period);
    }
  }
  return img;
}

Image add_noise(const Image& clean, double sigma, std::uint64_t seed) {
  auto gen = rng(seed, 4);
  std::normal_distribution<double> normal(0.0, sigma);
  Image out = clean;
  for (double& v : out.pixels()) v += normal(gen);
  return out;
}

Image motion_blur(const Image& x, int length) {
  if (length < 1) throw ParamError("motion_blur: length must be >= 1");
  Image out(x.width(), x.height());
  const int half = length / 2;
  for (int y = 0; y < x.height(); ++y) {
    for (int i = 0; i < x.width(); ++i) {
      double s = 0.0;
      for (int k = -half; k < length - half; ++k) s += x(std::clamp(i + k, 0, x.width() - 1), y);
      out(i, y) = s / length;
    }
  }
  return out;
}

FlashPair flash_pair(int width, int height, std::uint64_t seed, double sigma) {
  const Image structure = piecewise(width, height, seed);
  const Image detail = oriented_texture(width, height, seed, 0.04, 6.0);
  FlashPair pair;
  pair.scene = zip_map(structure, detail, [](double s, double d) { return s + d; });
  pair.flash = add_noise(map(pair.scene, [](double v) { return std::pow(std::clamp(v, 0.0, 1.0), 0.7); }),
                         0.005, seed + 101);
  pair.no_flash = add_noise(motion_blur(pair.scene, 9), sigma, seed + 202);
  return pair;
}

Kind parse_kind(std::string_view name) {
  if (name == "noise") return Kind::Noise;
  if (name == "piecewise") return Kind::Piecewise;
  if (name == "texture") return Kind::Texture;
  if (name == "flash-pair") return Kind::FlashPair;
  throw ParamError("unknown synth kind '" + std::string(name) + "'");
}

const char* to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::Noise: return "noise";
    case Kind::Piecewise: return "piecewise";
    case Kind::Texture: return "texture";
    case Kind::FlashPair: return "flash-pair";
  }
  return "unknown";
}

std::vector<NamedImage> generate(Kind kind, std::uint64_t seed, int width, int height,
                                 double sigma) {
  switch (kind) {
    case Kind::Noise: {
      Image clean = smooth(width, height, seed);
      Image noisy = add_noise(clean, sigma, seed);
      return {{"clean", std::move(clean)}, {"noisy", std::move(noisy)}};
    }
    case Kind::Piecewise: {
      Image clean = piecewise(width, height, seed);
      Image noisy = add_noise(clean, sigma, seed);
      return {{"clean", std::move(clean)}, {"noisy", std::move(noisy)}};
    }
    case Kind::Texture: {
      Image structure = piecewise(width, height, seed);
      Image textured = zip_map(structure, oriented_texture(width, height, seed),
                               [](double s, double t) { return s + t; });
      return {{"structure", std::move(structure)}, {"textured", std::move(textured)}};
    }
    case Kind::FlashPair: {
      FlashPair p = flash_pair(width, height, seed, sigma);
      return {{"scene", std::move(p.scene)},
              {"flash", std::move(p.flash)},
              {"no_flash", std::move(p.no_flash)}};
    }
  }
  throw ParamError("unknown synth kind");
}

}  // namespace ccdgf::synth
