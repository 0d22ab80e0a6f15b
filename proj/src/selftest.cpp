#include "catbreed/selftest.hpp"

#include <cmath>
#include <string>

#include "catbreed/fock.hpp"
#include "catbreed/loss.hpp"
#include "catbreed/metrics.hpp"

namespace catbreed {

namespace {

bool report(std::ostream& os, const std::string& name, double value,
            double bound) {
  const bool ok = value < bound;
  os << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << value << " < " << bound
     << ")\n";
  return ok;
}

}  // namespace

bool run_selftest(std::ostream& os) {
  bool ok = true;

  for (double alpha : {0.5, 1.0}) {
    for (double eta : {0.9, 1.0}) {
      BreedResult dyad = breed(alpha, eta);
      fock::OracleBreed oracle = fock::breed_oracle(alpha, eta);
      fock::FockOperator converted =
          fock::dyads_to_fock(dyad.effective_state, oracle.cutoff);
      const double dist = fock::trace_distance(fock::normalized(converted),
                                               fock::normalized(oracle.rho));
      const std::string tag = "breed alpha=" + std::to_string(alpha) +
                              " eta=" + std::to_string(eta);
      ok &= report(os, tag + " trace distance", dist, 1e-7);
      ok &= report(os, tag + " success probability",
                   std::abs(dyad.success_probability - oracle.probability),
                   1e-8);

      KetSuperposition target =
          make_cat({std::sqrt(2.0) * alpha, Parity::Odd}, Spatial::A,
                   Spectral::Psi);
      const double f_dyad = fidelity(dyad.effective_state, target);
      const double f_fock = fock::fock_fidelity(
          oracle.rho, fock::ket_to_fock(target, oracle.cutoff));
      ok &= report(os, tag + " fidelity", std::abs(f_dyad - f_fock), 1e-8);
    }
  }

  for (double alpha : {0.5, 1.0}) {
    for (double eta : {0.05, 0.2}) {
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        CatSpec cat{alpha, parity};
        LossResult lost = apply_loss(cat, eta);
        const int cutoff = fock::cutoff_for(alpha);
        fock::FockOperator oracle = fock::loss_oracle(cat, eta, cutoff);
        fock::FockOperator converted = fock::dyads_to_fock(lost.state, cutoff);
        const double dist = fock::trace_distance(
            fock::normalized(converted), fock::normalized(oracle));
        ok &= report(os,
                     "loss alpha=" + std::to_string(alpha) +
                         " eta=" + std::to_string(eta) +
                         (parity == Parity::Even ? " even" : " odd") +
                         " trace distance",
                     dist, 1e-8);
      }
    }
  }

  return ok;
}

}  // namespace catbreed
