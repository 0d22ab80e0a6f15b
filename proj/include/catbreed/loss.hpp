#pragma once

#include "catbreed/breeding.hpp"
#include "catbreed/coherent.hpp"
#include "catbreed/optimize.hpp"

namespace catbreed {

struct LossResult {
  DyadMixture state;           // single mode (A,psi)
  double gamma;                // e^{-2 eta alpha^2}
  double surviving_magnitude;  // sqrt(1-eta) alpha
  double loss_rate;            // eta
};

// Beamsplitter loss channel on a prepared cat: four dyads on labels
// +/- sqrt(1-eta) alpha with cross weights +/- gamma (+ for even input,
// - for odd).
LossResult apply_loss(const CatSpec& cat, double eta);

// The closed form F = (1 + e^{-2 alpha^2 eta}) / 2, valid in the limit where
// the residual overlap <m|-m> of the surviving components vanishes.
double loss_fidelity_paper(double alpha, double eta);

// Exact normalized fidelity of the lossy state against the cat of magnitude
// sqrt(1-eta) alpha and the same parity.
double loss_fidelity_exact(const CatSpec& cat, double eta);

// Numeric re-optimization of the target magnitude; returns the
// fidelity-maximizing magnitude and the fidelity there.
ScalarMax loss_best_target_magnitude(const CatSpec& cat, double eta);

// Inversion of the closed form: the alpha at which
// loss_fidelity_paper(alpha, eta) = target_f.
double max_alpha_for_fidelity(double eta, double target_f);

}  // namespace catbreed
