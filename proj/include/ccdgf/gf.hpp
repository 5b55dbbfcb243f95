#pragma once

#include <vector>

#include "ccdgf/boxops.hpp"
#include "ccdgf/core.hpp"

namespace ccdgf {

/// Per-window linear model q ~ a_k * I + b_k, indexed by window centre k.
struct GfCoeffs {
  Image a;
  Image b;
};

/// Ridge-regularized fit of p against the guidance I in every window:
///   a = cov(I, p) / (var(I) + eps),  b = E(p) - a E(I).
/// This is the exact minimizer over (a, b) of the guided-filter objective
/// with q held fixed.
GfCoeffs gf_coeffs(const Image& p, const Image& I, const WindowSpec& w, double eps,
                   Exec exec = Exec::Parallel);

/// q_i = E_w(a) I_i + E_w(b): the exact minimizer over q with (a, b) fixed.
Image gf_apply(const GfCoeffs& coeffs, const Image& I, const WindowSpec& w,
               Exec exec = Exec::Parallel);

/// One full coordinate-descent pass from q = p, i.e. the guided filter.
Image gf(const Image& p, const Image& I, const WindowSpec& w, double eps,
         Exec exec = Exec::Parallel);

/// q^{n+1} = gf(q^n, I). Returns q^1 .. q^iters.
std::vector<Image> gf_roll(const Image& p, const Image& I, const WindowSpec& w, double eps,
                           int iters);

/// sum_k sum_{i in w_k} (a_k I_i + b_k - q_i)^2 + eps a_k^2, by explicit
/// loops. Terms: "data", "coeff_penalty".
EnergyReport energy_gf(const Image& q, const GfCoeffs& coeffs, const Image& I,
                       const WindowSpec& w, double eps);

namespace detail {

// gf_coeffs without the eps > 0 check. Tests use eps = 0 to probe identities.
GfCoeffs fit_coeffs(const Image& p, const Image& I, const WindowSpec& w, double eps,
                    Exec exec = Exec::Parallel);

// Shared by every energy evaluator: accumulates the data and penalty terms
// of one sum_k sum_{i in w_k} ((a_k G_i + b_k - t_i)^2 + eps a_k^2) block.
void accumulate_fit_energy(const Image& target, const GfCoeffs& coeffs, const Image& G,
                           const WindowSpec& w, double eps, CompensatedSum& data,
                           CompensatedSum& penalty);

void require_iters(int iters);
void require_eps(double eps, const char* what);

}  // namespace detail
}  // namespace ccdgf
