#include <cmath>
#include <doctest.h>
#include <random>

#include "catbreed/errors.hpp"
#include "catbreed/metrics.hpp"

using namespace catbreed;

namespace {

std::mt19937 rng(777);

KetSuperposition random_single_mode(int nterms, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  KetSuperposition s;
  for (int i = 0; i < nterms; ++i) {
    CoherentLabel l;
    l.set(kModeAPsi, {u(rng), u(rng)});
    s.terms.push_back({cdouble{u(rng), u(rng)}, l});
  }
  return s;
}

}  // namespace

TEST_CASE("fidelity basics") {
  auto t = random_single_mode(3, 1.5);
  if (squared_norm(t) < 1e-6) t.terms[0].weight += 1.0;
  CHECK(fidelity(dyad_from_pure(t), t) == doctest::Approx(1.0).epsilon(1e-12));

  BreedResult ideal = breed(1.5, 1.0);
  auto odd = make_cat({std::sqrt(2.0) * 1.5, Parity::Odd}, Spatial::A,
                      Spectral::Psi);
  CHECK(fidelity(ideal.effective_state, odd) ==
        doctest::Approx(1.0).epsilon(1e-10));

  DyadMixture empty;
  CHECK_THROWS_AS(fidelity(empty, odd), degenerate_input);
  KetSuperposition zero;
  CHECK_THROWS_AS(fidelity(ideal.effective_state, zero), degenerate_input);
}

TEST_CASE("fidelity is scale invariant and bounded") {
  for (int i = 0; i < 30; ++i) {
    auto t = random_single_mode(2, 1.5);
    auto u = random_single_mode(3, 1.5);
    if (squared_norm(t) < 1e-6 || squared_norm(u) < 1e-6) continue;
    DyadMixture rho = dyad_from_pure(u);
    const double f = fidelity(rho, t);
    CHECK(f >= -1e-12);
    CHECK(f <= 1.0 + 1e-10);

    DyadMixture scaled_rho = rho;
    for (auto& term : scaled_rho.terms) term.weight *= 3.7;
    KetSuperposition scaled_t = t;
    for (auto& term : scaled_t.terms) term.weight *= 0.21;
    CHECK(std::abs(fidelity(scaled_rho, scaled_t) - f) < 1e-12);
  }
}

TEST_CASE("mixtures of odd cats stay below fidelity 1") {
  // Hermitian positive-trace mixture: rho_loss style states.
  BreedResult r = breed(2.0, 0.9);
  auto odd = make_cat({std::sqrt(2.0) * 2.0, Parity::Odd}, Spatial::A,
                      Spectral::Psi);
  const double f = fidelity(r.effective_state, odd);
  CHECK(f > 0.0);
  CHECK(f < 1.0);
}

TEST_CASE("best_cat_fidelity recovers pure cat magnitudes") {
  for (double m : {0.5, 1.0, 2.0, 4.0}) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      auto rho = dyad_from_pure(make_cat({m, p}, Spatial::A, Spectral::Psi));
      BestCat best = best_cat_fidelity(rho, p);
      CHECK(best.magnitude == doctest::Approx(m).epsilon(1e-5));
      CHECK(best.fidelity == doctest::Approx(1.0).epsilon(1e-10));
      CHECK_FALSE(best.bracket_warning);
    }
  }
}

TEST_CASE("best_cat_fidelity on breeding output") {
  for (double alpha : {0.8, 1.5}) {
    BestCat best =
        best_cat_fidelity(breed(alpha, 1.0).effective_state, Parity::Odd);
    CHECK(best.magnitude ==
          doctest::Approx(std::sqrt(2.0) * alpha).epsilon(1e-5));
  }
  // Matched inputs keep the output components at exactly +-sqrt(2) alpha, so
  // the best-fit magnitude stays there; only the fidelity degrades.
  BestCat matched =
      best_cat_fidelity(breed(2.0, 0.95).effective_state, Parity::Odd);
  CHECK(matched.magnitude == doctest::Approx(std::sqrt(8.0)).epsilon(1e-5));
  CHECK(matched.fidelity < 1.0);

  // Unmatched inputs interfere imperfectly and shrink the effective cat.
  BestCat mismatched = best_cat_fidelity(
      breed(2.0, 0.95, {.matched = false}).effective_state, Parity::Odd);
  CHECK(mismatched.magnitude < std::sqrt(2.0) * 2.0 - 1e-3);
  CHECK(mismatched.magnitude == doctest::Approx(2.792418).epsilon(1e-4));
  CHECK(mismatched.fidelity < 1.0);

  DyadMixture empty;
  CHECK_THROWS_AS(best_cat_fidelity(empty, Parity::Odd), degenerate_input);
}

TEST_CASE("threshold_alpha") {
  CHECK_THROWS_AS(threshold_alpha(1.0, 0.9), threshold_not_found);

  const double t90 = threshold_alpha(0.99, 0.9);
  CHECK(t90 == doctest::Approx(4.7).epsilon(0.3 / 4.7));

  const double t99 = threshold_alpha(0.99, 0.99);
  CHECK(t99 < t90);

  CHECK_THROWS_AS(threshold_alpha(0.0, 0.9), std::domain_error);
  CHECK_THROWS_AS(threshold_alpha(0.99, 1.5), std::domain_error);
}

TEST_CASE("breeding fidelity is non-increasing in alpha at fixed eta") {
  for (double eta : {0.9, 0.99}) {
    double prev = 1.0 + 1e-12;
    for (double alpha : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0}) {
      const double f =
          best_cat_fidelity(breed(alpha, eta).effective_state, Parity::Odd)
              .fidelity;
      CHECK(f <= prev + 1e-9);
      prev = f;
    }
  }
}
