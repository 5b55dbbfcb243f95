#pragma once

#include <vector>

#include "ccdgf/core.hpp"
#include "ccdgf/gf.hpp"

namespace ccdgf {

/// The (q, G) pair carried by mutual-structure rolling: q tracks the input,
/// G tracks the guidance.
struct MutualState {
  Image q;
  Image G;
  int iteration = 0;
};

/// Intermediate images of one mutual-structure iteration. The q update is
/// q_weight * q_forward + (1 - q_weight) * q_inverse, likewise for G.
struct MutualStepTrace {
  GfCoeffs ab;  // q^n fitted against G^n
  GfCoeffs cd;  // G^n fitted against q^n
  Image q_forward;
  Image q_inverse;
  Image q_weight;
  Image G_forward;
  Image G_inverse;
  Image G_weight;
};

/// 1 / (1 + E_w(x^2)).
Image alpha_weight(const Image& x, const WindowSpec& w);

/// One iteration of GF-based mutual-structure rolling. The G update reads
/// the freshly computed q.
MutualState gf_rmsf_step(const MutualState& s, double eps, double eps2, const WindowSpec& w,
                         MutualStepTrace* trace = nullptr);

/// GF-based rolling from q^0 = p, G^0 = I. When snapshots is non-null it
/// receives every intermediate state (debug use: memory grows with iters).
MutualState gf_rmsf(const Image& p, const Image& I, double eps, double eps2, const WindowSpec& w,
                    int iters, std::vector<MutualState>* snapshots = nullptr);

/// One iteration of the CGF-based variant. The q track is anchored to p with
/// weight lambda, the G track to I with weight beta.
MutualState cgf_rmsf_step(const MutualState& s, const Image& p, const Image& I, double eps,
                          double eps2, double lambda, double beta, const WindowSpec& w,
                          MutualStepTrace* trace = nullptr);

MutualState cgf_rmsf(const Image& p, const Image& I, double eps, double eps2, double lambda,
                     double beta, const WindowSpec& w, int iters,
                     std::vector<MutualState>* snapshots = nullptr);

/// Plain cross-guided rolling, both updates reading the n-th state:
///   q' = gf(q, G),  G' = gf(G, q).
/// It smooths away detail and does not find mutual structure; kept as a
/// baseline.
MutualState naive_roll37(const Image& p, const Image& I, double eps, const WindowSpec& w,
                         int iters, std::vector<MutualState>* snapshots = nullptr);

/// Joint objective of the two coupled fits, by explicit loops. eps weights
/// the a penalty, eps2 the c penalty. Terms: "data_ab", "penalty_a",
/// "data_cd", "penalty_c".
EnergyReport energy_mutual(const MutualState& s, const GfCoeffs& ab, const GfCoeffs& cd,
                           const WindowSpec& w, double eps, double eps2);

}  // namespace ccdgf
