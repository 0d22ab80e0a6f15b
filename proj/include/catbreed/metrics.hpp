#pragma once

#include "catbreed/breeding.hpp"
#include "catbreed/coherent.hpp"
#include "catbreed/optimize.hpp"

namespace catbreed {

// F = <t|rho|t> / (tr(rho) <t|t>), scale invariant in both arguments.
double fidelity(const DyadMixture& rho, const KetSuperposition& target);

struct BestCat {
  double magnitude;
  double fidelity;
  // Set when a bracket endpoint beats the interior maximum (non-unimodal
  // fidelity profile); the result is still the best point found.
  bool bracket_warning = false;
};

// Fidelity-maximizing cat magnitude via golden-section search over
// [1e-6, max_magnitude]; max_magnitude 0 means twice the largest label
// amplitude in rho.
BestCat best_cat_fidelity(const DyadMixture& rho, Parity parity,
                          double max_magnitude = 0.0);

// Largest alpha with best-odd-cat breeding fidelity >= target_f, by bisection
// on [0.1, 10] to 1e-3. Throws threshold_not_found when the curve never
// crosses the target.
double threshold_alpha(double eta, double target_f);

}  // namespace catbreed
