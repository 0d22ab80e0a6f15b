#include "catbreed/loss.hpp"

#include <cmath>
#include <stdexcept>

#include "catbreed/errors.hpp"
#include "catbreed/metrics.hpp"

namespace catbreed {

LossResult apply_loss(const CatSpec& cat, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("apply_loss: eta must be in [0,1]");
  }
  if (!(cat.magnitude >= 0.0) || !std::isfinite(cat.magnitude)) {
    throw std::domain_error("apply_loss: magnitude must be finite and >= 0");
  }
  if (cat.magnitude == 0.0 && cat.parity == Parity::Odd) {
    throw degenerate_input("apply_loss: alpha=0 odd cat is the zero vector");
  }
  const double alpha = cat.magnitude;
  const double m = std::sqrt(1.0 - eta) * alpha;
  const double gamma = std::exp(-2.0 * eta * alpha * alpha);
  const double sign = cat.parity == Parity::Even ? 1.0 : -1.0;

  CoherentLabel plus, minus;
  plus.set(kModeAPsi, m);
  minus.set(kModeAPsi, -m);
  DyadMixture rho;
  rho.terms = {{1.0, plus, plus},
               {1.0, minus, minus},
               {sign * gamma, plus, minus},
               {sign * gamma, minus, plus}};
  rho = simplify(std::move(rho));
  return {std::move(rho), gamma, m, eta};
}

double loss_fidelity_paper(double alpha, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0) || !(alpha >= 0.0)) {
    throw std::domain_error("loss_fidelity_paper: invalid arguments");
  }
  return 0.5 * (1.0 + std::exp(-2.0 * alpha * alpha * eta));
}

double loss_fidelity_exact(const CatSpec& cat, double eta) {
  LossResult lost = apply_loss(cat, eta);
  KetSuperposition target = make_cat({lost.surviving_magnitude, cat.parity},
                                     Spatial::A, Spectral::Psi);
  return fidelity(lost.state, target);
}

ScalarMax loss_best_target_magnitude(const CatSpec& cat, double eta) {
  LossResult lost = apply_loss(cat, eta);
  auto f = [&](double m) {
    return fidelity(lost.state,
                    make_cat({m, cat.parity}, Spatial::A, Spectral::Psi));
  };
  return golden_section_max(f, 1e-6, 2.0 * cat.magnitude + 1.0, 1e-7);
}

double max_alpha_for_fidelity(double eta, double target_f) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::domain_error("max_alpha_for_fidelity: eta must be in (0,1]");
  }
  if (!(target_f > 0.5 && target_f < 1.0)) {
    throw std::domain_error(
        "max_alpha_for_fidelity: target fidelity must be in (1/2, 1)");
  }
  return std::sqrt(-std::log(2.0 * target_f - 1.0) / (2.0 * eta));
}

}  // namespace catbreed
