// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "catbreed/fock.hpp"
#include "catbreed/loss.hpp"
#include "catbreed/metrics.hpp"

using namespace catbreed;
namespace fk = catbreed::fock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool()>& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = std::string(" (exception: ") + e.what() + ")";
  }
  std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int main() {
  criterion(1, "loss threshold alpha(eta=0.05, F=0.9) = 1.494 +/- 0.01", [] {
    return close(max_alpha_for_fidelity(0.05, 0.9), 1.494, 0.01);
  });

  criterion(2, "loss closed form and exact-vs-paper bound on a 20x20 grid", [] {
    for (int ia = 0; ia < 20; ++ia) {
      const double alpha = 0.1 + (3.0 - 0.1) * ia / 19.0;
      for (int ie = 0; ie < 20; ++ie) {
        const double eta = 0.01 + (0.95 - 0.01) * ie / 19.0;
        const double paper = loss_fidelity_paper(alpha, eta);
        if (!close(paper, 0.5 * (1.0 + std::exp(-2.0 * alpha * alpha * eta)),
                   1e-12)) {
          return false;
        }
        const double bound = 3.0 * std::exp(-2.0 * (1.0 - eta) * alpha * alpha);
        for (Parity p : {Parity::Even, Parity::Odd}) {
          if (!close(loss_fidelity_exact({alpha, p}, eta), paper, bound)) {
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion(3, "ideal breeding yields the odd cat of sqrt(2) alpha", [] {
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
      BreedResult r = breed(alpha, 1.0);
      auto target = make_cat({std::sqrt(2.0) * alpha, Parity::Odd}, Spatial::A,
                             Spectral::Psi);
      if (!close(fidelity(r.effective_state, target), 1.0, 1e-10)) return false;
      BestCat best = best_cat_fidelity(r.effective_state, Parity::Odd);
      if (!close(best.magnitude, std::sqrt(2.0) * alpha, 1e-5)) return false;
    }
    return true;
  });

  criterion(4, "mode-mismatch threshold alpha(eta=0.99, F=0.9) = 4.7 +/- 0.3",
            [] { return close(threshold_alpha(0.99, 0.9), 4.7, 0.3); });

  criterion(5, "oracle equivalence: breeding and loss vs truncated Fock", [] {
    for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
      for (double eta : {0.8, 0.9, 0.99, 1.0}) {
        BreedResult dyad = breed(alpha, eta);
        fk::OracleBreed oracle = fk::breed_oracle(alpha, eta);
        auto converted = fk::dyads_to_fock(dyad.effective_state, oracle.cutoff);
        if (fk::trace_distance(fk::normalized(converted),
                               fk::normalized(oracle.rho)) >= 1e-7) {
          return false;
        }
        auto target = make_cat({std::sqrt(2.0) * alpha, Parity::Odd},
                               Spatial::A, Spectral::Psi);
        const double f_dyad = fidelity(dyad.effective_state, target);
        const double f_fock = fk::fock_fidelity(
            oracle.rho, fk::ket_to_fock(target, oracle.cutoff));
        if (!close(f_dyad, f_fock, 1e-8)) return false;
      }
      for (double eta : {0.05, 0.2}) {
        for (Parity p : {Parity::Even, Parity::Odd}) {
          const int cutoff = fk::cutoff_for(alpha);
          auto oracle = fk::loss_oracle({alpha, p}, eta, cutoff);
          auto converted =
              fk::dyads_to_fock(apply_loss({alpha, p}, eta).state, cutoff);
          if (fk::trace_distance(fk::normalized(converted),
                                 fk::normalized(oracle)) >= 1e-7) {
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion(6, "structural invariants over 1000 randomized inputs", [] {
    std::mt19937 rng(987654321);
    std::uniform_real_distribution<double> amp(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.1, 5.0);
    std::uniform_int_distribution<int> nterms(1, 4);
    for (int trial = 0; trial < 1000; ++trial) {
      KetSuperposition u;
      const int n = nterms(rng);
      for (int i = 0; i < n; ++i) {
        CoherentLabel l;
        for (int m = 0; m < kNumModes; ++m) l.amp[m] = {amp(rng), amp(rng)};
        u.terms.push_back({cdouble{amp(rng), amp(rng)}, l});
      }
      const double norm = squared_norm(u);
      if (norm < 1e-6) continue;

      // Beamsplitter unitarity.
      if (!close(squared_norm(beamsplitter_5050(u, kModeAPsi, kModeBPsi)),
                 norm, 1e-10 * std::max(1.0, norm))) {
        return false;
      }

      DyadMixture rho = dyad_from_pure(u);
      if (!is_hermitian(rho, 1e-10)) return false;
      if (trace_of(rho).real() < -1e-10) return false;

      DyadMixture reduced = partial_trace(rho, {kModeBPsi, kModeAPsiBar});
      if (std::abs(trace_of(reduced) - trace_of(rho)) >
          1e-10 * std::max(1.0, norm)) {
        return false;
      }
      if (!is_hermitian(reduced, 1e-10)) return false;

      // Fidelity scale invariance.
      KetSuperposition target;
      CoherentLabel l;
      for (int m = 0; m < kNumModes; ++m) l.amp[m] = {amp(rng), amp(rng)};
      target.terms.push_back({1.0, l});
      const double f = fidelity(rho, target);
      const double c = pos(rng), d = pos(rng);
      DyadMixture crho = rho;
      for (auto& t : crho.terms) t.weight *= c;
      KetSuperposition dt = target;
      for (auto& t : dt.terms) t.weight *= d;
      if (!close(fidelity(crho, dt), f, 1e-10)) return false;
    }
    return true;
  });

  criterion(7, "monotone shape claims: breeding vs alpha, loss vs alpha/eta", [] {
    double prev = 1.0 + 1e-12;
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0}) {
      const double f =
          best_cat_fidelity(breed(alpha, 0.99).effective_state, Parity::Odd)
              .fidelity;
      if (f > prev + 1e-9) return false;
      prev = f;
    }
    for (double eta : {0.05, 0.2, 0.5}) {
      prev = 2.0;
      for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        const double f = loss_fidelity_paper(alpha, eta);
        if (f >= prev) return false;
        prev = f;
      }
    }
    for (double alpha : {0.5, 1.5, 3.0}) {
      prev = 2.0;
      for (double eta : {0.05, 0.2, 0.5, 0.8}) {
        const double f = loss_fidelity_paper(alpha, eta);
        if (f >= prev) return false;
        prev = f;
      }
    }
    return true;
  });

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
