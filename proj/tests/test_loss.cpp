#include <cmath>
#include <doctest.h>

#include "catbreed/errors.hpp"
#include "catbreed/loss.hpp"
#include "catbreed/metrics.hpp"

using namespace catbreed;

TEST_CASE("apply_loss structure and limits") {
  // No loss: pure input cat dyad, gamma = 1.
  auto cat = CatSpec{1.0, Parity::Odd};
  LossResult clean = apply_loss(cat, 0.0);
  CHECK(clean.gamma == doctest::Approx(1.0));
  auto pure = dyad_from_pure(make_cat(cat, Spatial::A, Spectral::Psi));
  CHECK(hs_distance(clean.state, simplify(pure)) < 1e-12);

  // Full loss: everything collapses onto vacuum dyads.
  LossResult gone = apply_loss({1.0, Parity::Even}, 1.0);
  CHECK(gone.surviving_magnitude == 0.0);
  for (const auto& t : gone.state.terms) {
    CHECK(std::abs(t.ket.at(kModeAPsi)) < 1e-14);
  }

  LossResult small = apply_loss({1.0, Parity::Even}, 0.05);
  CHECK(small.gamma == doctest::Approx(std::exp(-0.1)).epsilon(1e-14));
  CHECK(small.surviving_magnitude ==
        doctest::Approx(std::sqrt(0.95)).epsilon(1e-14));

  CHECK_THROWS_AS(apply_loss({1.0, Parity::Even}, -0.1), std::domain_error);
  CHECK_THROWS_AS(apply_loss({0.0, Parity::Odd}, 0.1), degenerate_input);
  CHECK_NOTHROW(apply_loss({0.0, Parity::Even}, 0.1));
}

TEST_CASE("apply_loss preserves the input trace") {
  for (double alpha : {0.3, 1.0, 2.5}) {
    for (double eta : {0.0, 0.05, 0.5, 0.9}) {
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const double in_norm =
            squared_norm(make_cat({alpha, p}, Spatial::A, Spectral::Psi));
        const double out_trace =
            trace_of(apply_loss({alpha, p}, eta).state).real();
        CHECK(std::abs(out_trace - in_norm) < 1e-12);
      }
    }
  }
}

TEST_CASE("loss_fidelity_paper closed form") {
  CHECK(loss_fidelity_paper(3.7, 0.0) == doctest::Approx(1.0));
  CHECK(loss_fidelity_paper(1.5, 0.05) ==
        doctest::Approx(0.5 * (1.0 + std::exp(-0.225))).epsilon(1e-14));
  CHECK(loss_fidelity_paper(1.5, 0.05) == doctest::Approx(0.89933).epsilon(1e-4));
  CHECK(loss_fidelity_paper(2.0, 0.5) ==
        doctest::Approx(0.5 * (1.0 + std::exp(-4.0))).epsilon(1e-14));
}

TEST_CASE("loss_fidelity_exact") {
  CHECK(loss_fidelity_exact({1.3, Parity::Even}, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Large alpha: residual overlap s = e^{-2(1-eta)alpha^2} is negligible.
  CHECK(std::abs(loss_fidelity_exact({3.0, Parity::Even}, 0.05) -
                 loss_fidelity_paper(3.0, 0.05)) < 1e-6);

  // Small alpha even cat: exact = (1+s)(1+g)/(2(1+g s)).
  const double s = std::exp(-2.0 * 0.95);
  const double g = std::exp(-0.1);
  const double expected = (1.0 + s) * (1.0 + g) / (2.0 * (1.0 + g * s));
  CHECK(loss_fidelity_exact({1.0, Parity::Even}, 0.05) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(expected - loss_fidelity_paper(1.0, 0.05)) > 1e-3);
}

TEST_CASE("exact fidelity stays within 3s of the closed form") {
  for (int ia = 0; ia < 12; ++ia) {
    const double alpha = 0.2 + 0.3 * ia;
    for (double eta : {0.01, 0.05, 0.2, 0.5, 0.8}) {
      const double s = std::exp(-2.0 * (1.0 - eta) * alpha * alpha);
      const double paper = loss_fidelity_paper(alpha, eta);
      for (Parity p : {Parity::Even, Parity::Odd}) {
        CHECK(std::abs(loss_fidelity_exact({alpha, p}, eta) - paper) <=
              3.0 * s);
      }
    }
  }
}

TEST_CASE("paper fidelity is monotone decreasing in alpha and eta") {
  for (double eta : {0.05, 0.2, 0.5}) {
    double prev = 1.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      const double f = loss_fidelity_paper(alpha, eta);
      CHECK(f < prev);
      prev = f;
    }
  }
  for (double alpha : {0.5, 1.5, 3.0}) {
    double prev = 1.0;
    for (double eta : {0.05, 0.1, 0.3, 0.6}) {
      const double f = loss_fidelity_paper(alpha, eta);
      CHECK(f < prev);
      prev = f;
    }
  }
}

TEST_CASE("the sqrt(1-eta) alpha target maximizes the fidelity") {
  for (double alpha : {0.8, 1.5, 2.5}) {
    for (double eta : {0.05, 0.2}) {
      for (Parity p : {Parity::Even, Parity::Odd}) {
        ScalarMax best = loss_best_target_magnitude({alpha, p}, eta);
        CHECK(best.x ==
              doctest::Approx(std::sqrt(1.0 - eta) * alpha).epsilon(1e-3));
        CHECK(best.value >=
              loss_fidelity_exact({alpha, p}, eta) - 1e-10);
      }
    }
  }
}

TEST_CASE("max_alpha_for_fidelity") {
  const double a = max_alpha_for_fidelity(0.05, 0.9);
  CHECK(a == doctest::Approx(std::sqrt(-std::log(0.8) / 0.1)).epsilon(1e-14));
  CHECK(a == doctest::Approx(1.4936).epsilon(1e-3));
  CHECK(loss_fidelity_paper(a, 0.05) == doctest::Approx(0.9).epsilon(1e-12));

  CHECK(max_alpha_for_fidelity(0.05, 0.99) == doctest::Approx(0.4496).epsilon(1e-3));

  // alpha(eta) sqrt(eta) is constant at fixed target.
  const double c = max_alpha_for_fidelity(0.1, 0.9) * std::sqrt(0.1);
  for (double eta : {0.01, 0.001}) {
    CHECK(max_alpha_for_fidelity(eta, 0.9) * std::sqrt(eta) ==
          doctest::Approx(c).epsilon(1e-12));
  }

  CHECK_THROWS_AS(max_alpha_for_fidelity(0.05, 0.5), std::domain_error);
  CHECK_THROWS_AS(max_alpha_for_fidelity(0.05, 1.0), std::domain_error);
  CHECK_THROWS_AS(max_alpha_for_fidelity(0.0, 0.9), std::domain_error);
}

TEST_CASE("max_alpha_for_fidelity agrees with bisection on the closed form") {
  const double eta = 0.05, target = 0.99;
  double lo = 0.0, hi = 10.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (loss_fidelity_paper(mid, eta) >= target ? lo : hi) = mid;
  }
  CHECK(max_alpha_for_fidelity(eta, target) == doctest::Approx(lo).epsilon(1e-8));
}
