#include "catbreed/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "catbreed/errors.hpp"

namespace catbreed {

namespace {

// The single occupied mode of a one-mode mixture; defaults to (A,psi).
ModeIndex occupied_mode(const DyadMixture& rho) {
  for (const auto& t : rho.terms) {
    for (int s = 0; s < kNumModes; ++s) {
      if (std::abs(t.ket.amp[s]) > 0.0 || std::abs(t.bra.amp[s]) > 0.0) {
        return kAllModes[s];
      }
    }
  }
  return kModeAPsi;
}

double max_label_magnitude(const DyadMixture& rho) {
  double m = 0.0;
  for (const auto& t : rho.terms) {
    for (int s = 0; s < kNumModes; ++s) {
      m = std::max({m, std::abs(t.ket.amp[s]), std::abs(t.bra.amp[s])});
    }
  }
  return m;
}

}  // namespace

double fidelity(const DyadMixture& rho, const KetSuperposition& target) {
  const double tr = trace_of(rho).real();
  const double tn = squared_norm(target);
  if (tr < kDropTol) throw degenerate_input("fidelity: zero-trace state");
  if (tn < kDropTol) throw degenerate_input("fidelity: zero-norm target");
  cdouble overlap = 0.0;
  for (const auto& t : rho.terms) {
    overlap += t.weight * bra_ket_label(target, t.ket) *
               std::conj(bra_ket_label(target, t.bra));
  }
  return overlap.real() / (tr * tn);
}

BestCat best_cat_fidelity(const DyadMixture& rho, Parity parity,
                          double max_magnitude) {
  if (trace_of(rho).real() < kDropTol) {
    throw degenerate_input("best_cat_fidelity: zero-trace state");
  }
  const ModeIndex mode = occupied_mode(rho);
  if (max_magnitude <= 0.0) {
    max_magnitude = 2.0 * max_label_magnitude(rho);
    if (max_magnitude <= 0.0) max_magnitude = 1.0;
  }
  auto f = [&](double m) {
    return fidelity(rho, make_cat({m, parity}, mode.spatial, mode.spectral));
  };
  const double lo = 1e-6;
  ScalarMax best = golden_section_max(f, lo, max_magnitude, 1e-6);
  const bool warn =
      f(lo) > best.value + 1e-12 || f(max_magnitude) > best.value + 1e-12;
  return {best.x, best.value, warn};
}

double threshold_alpha(double eta, double target_f) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::domain_error("threshold_alpha: eta must be in (0,1]");
  }
  if (!(target_f > 0.0 && target_f < 1.0)) {
    throw std::domain_error("threshold_alpha: target fidelity must be in (0,1)");
  }
  auto f = [&](double alpha) {
    return best_cat_fidelity(breed(alpha, eta).effective_state, Parity::Odd)
        .fidelity;
  };
  double lo = 0.1, hi = 10.0;
  if (f(lo) < target_f || f(hi) >= target_f) {
    throw threshold_not_found(
        "threshold_alpha: fidelity does not cross the target in [0.1, 10]");
  }
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= target_f) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace catbreed
