#pragma once

#include <complex>
#include <vector>

#include "ccdgf/core.hpp"
#include "ccdgf/gf.hpp"

namespace ccdgf {

/// Full complex 2D spectrum of an image, row-major over (v, u) with u the
/// horizontal frequency index.
struct SpectrumField {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> data;

  std::complex<double> at(int u, int v) const {
    return data[static_cast<std::size_t>(v) * static_cast<std::size_t>(width) +
                static_cast<std::size_t>(u)];
  }
};

/// Unnormalized forward DFT.
SpectrumField forward_transform(const Image& x);

/// Normalized inverse DFT; the imaginary part is dropped. When
/// max_imag_residue is non-null it receives the largest |imag| discarded.
Image inverse_transform(const SpectrumField& s, double* max_imag_residue = nullptr);

/// |w| + lambda * D(u, v) on the frequency grid, where
/// D(u, v) = (2 - 2cos(2 pi u / W)) + (2 - 2cos(2 pi v / H)) is the symbol of
/// the circular forward-difference Laplacian.
struct TvDenominator {
  Image values;
};

TvDenominator tv_denominator(int width, int height, const WindowSpec& w, double lambda);

/// Solves (|w| + lambda L) q = f with L the circular 5-point Laplacian.
/// Requires a Periodic window.
Image tvgf_solve_q(const Image& f, const WindowSpec& w, double lambda);

/// Total-variation guided filter: the guided-filter (a, b) fit followed by
/// the exact minimization over q of the TV^2-regularized objective.
Image tvgf(const Image& p, const Image& I, const WindowSpec& w, double eps, double lambda);

std::vector<Image> tvgf_roll(const Image& p, const Image& I, const WindowSpec& w, double eps,
                             double lambda, int iters);

/// Exact TV^2-regularized objective. Terms: "data", "coeff_penalty", "tv".
EnergyReport energy_tvgf(const Image& q, const GfCoeffs& coeffs, const Image& I,
                         const WindowSpec& w, double eps, double lambda);

}  // namespace ccdgf
