#pragma once

#include <vector>

#include "ccdgf/core.hpp"
#include "ccdgf/gf.hpp"

namespace ccdgf {

/// alpha_i = lambda / (|w_i| + lambda), per pixel.
Image anchor_weight(int width, int height, const WindowSpec& w, double lambda);

/// Conservative guided filter: (1 - alpha) gf(p, I) + alpha g.
Image cgf(const Image& p, const Image& I, const Image& g, const WindowSpec& w, double eps,
          double lambda);

/// Iterates of q^{n+1} = cgf(q^n, I, g) from q^0 = p.
std::vector<Image> cgf_roll(const Image& p, const Image& I, const Image& g, const WindowSpec& w,
                            double eps, double lambda, int iters);

struct ConvergenceResult {
  Image q;
  int iterations = 0;
  double last_step = 0.0;  // ||q^n - q^{n-1}||_inf of the final step
  bool converged = false;
};

/// Rolls cgf until ||q^{n+1} - q^n||_inf < tol or max_iters is reached.
ConvergenceResult cgf_converge(const Image& p, const Image& I, const Image& g,
                               const WindowSpec& w, double eps, double lambda, double tol,
                               int max_iters);

/// Terms: "data", "coeff_penalty", "anchor".
EnergyReport energy_cgf(const Image& q, const GfCoeffs& coeffs, const Image& I, const Image& g,
                        const WindowSpec& w, double eps, double lambda);

}  // namespace ccdgf
