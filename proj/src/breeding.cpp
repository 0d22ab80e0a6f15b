#include "catbreed/breeding.hpp"

#include <cmath>
#include <stdexcept>

#include "catbreed/errors.hpp"

namespace catbreed {

KetSuperposition make_cat(const CatSpec& spec, Spatial spatial,
                          Spectral spectral) {
  if (!(spec.magnitude >= 0.0) || !std::isfinite(spec.magnitude)) {
    throw std::domain_error("make_cat: magnitude must be finite and >= 0");
  }
  const ModeIndex mode{spatial, spectral};
  const double sign = spec.parity == Parity::Even ? 1.0 : -1.0;
  KetSuperposition cat;
  CoherentLabel plus, minus;
  plus.set(mode, spec.magnitude);
  minus.set(mode, -spec.magnitude);
  cat.terms.push_back({1.0, plus});
  cat.terms.push_back({sign, minus});
  return simplify(std::move(cat));
}

KetSuperposition mismatch_split(const KetSuperposition& state, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("mismatch_split: eta must be in [0,1]");
  }
  const double se = std::sqrt(eta);
  const double sb = std::sqrt(1.0 - eta);
  KetSuperposition out = state;
  for (auto& t : out.terms) {
    if (std::abs(t.label.at(kModeBPsiBar)) != 0.0) {
      throw std::domain_error("mismatch_split: state already occupies (B,psibar)");
    }
    const cdouble a = t.label.at(kModeBPsi);
    t.label.set(kModeBPsi, se * a);
    t.label.set(kModeBPsiBar, sb * a);
  }
  return out;
}

KetSuperposition beamsplitter_5050(const KetSuperposition& state, ModeIndex a,
                                   ModeIndex b) {
  if (a == b) {
    throw std::domain_error("beamsplitter_5050: modes must be distinct");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  KetSuperposition out = state;
  for (auto& t : out.terms) {
    const cdouble x = t.label.at(a);
    const cdouble y = t.label.at(b);
    t.label.set(a, (x + y) * inv_sqrt2);
    t.label.set(b, (x - y) * inv_sqrt2);
  }
  return out;
}

VacuumConditioned condition_vacuum(const KetSuperposition& state,
                                   const std::vector<ModeIndex>& modes) {
  if (modes.empty()) {
    throw std::domain_error("condition_vacuum: empty mode set");
  }
  const double norm_before = squared_norm(state);
  if (norm_before < kDropTol) {
    throw degenerate_input("condition_vacuum: zero-norm input");
  }
  KetSuperposition out = state;
  for (auto& t : out.terms) {
    for (ModeIndex m : modes) {
      t.weight *= coherent_overlap(0.0, t.label.at(m));
      t.label.set(m, 0.0);
    }
  }
  const double norm_after = squared_norm(out);
  return {std::move(out), norm_after / norm_before};
}

BreedResult breed(double alpha, double eta, BreedOptions opts) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("breed: alpha must be finite and >= 0");
  }
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("breed: eta must be in [0,1]");
  }
  if (alpha == 0.0) {
    throw degenerate_input("breed: alpha=0 odd input cat is the zero vector");
  }
  double alpha_b = alpha;
  if (opts.matched) {
    if (eta == 0.0) {
      throw std::domain_error("breed: matched inputs require eta > 0");
    }
    alpha_b = alpha / std::sqrt(eta);
  }

  const Parity parity_a = opts.swap_parity ? Parity::Even : Parity::Odd;
  const Parity parity_b = opts.swap_parity ? Parity::Odd : Parity::Even;

  KetSuperposition in_a =
      make_cat({alpha, parity_a}, Spatial::A, Spectral::Psi);
  KetSuperposition in_b =
      make_cat({alpha_b, parity_b}, Spatial::B, Spectral::Psi);
  in_b = mismatch_split(in_b, eta);

  KetSuperposition psi = tensor(in_a, in_b);
  psi = beamsplitter_5050(psi, kModeAPsi, kModeBPsi);
  psi = beamsplitter_5050(psi, kModeAPsiBar, kModeBPsiBar);

  auto [proj, probability] =
      condition_vacuum(psi, {kModeBPsi, kModeBPsiBar});

  DyadMixture rho = dyad_from_pure(proj);
  rho = partial_trace(rho, {kModeAPsiBar});
  rho = simplify(std::move(rho));

  return {std::move(rho), probability, alpha, eta};
}

}  // namespace catbreed
