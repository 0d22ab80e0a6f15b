#pragma once

#include <complex>
#include <vector>

#include "catbreed/breeding.hpp"
#include "catbreed/coherent.hpp"

// Brute-force truncated photon-number-basis validator. Test/selftest only;
// the production paths never call into this namespace.
namespace catbreed::fock {

using cdouble = std::complex<double>;

// Cutoff for the largest coherent amplitude present:
// N = ceil(mu + 8 sqrt(mu) + 12), mu = |a|^2.
int cutoff_for(double max_amplitude);

// Multimode number-basis vector with a common per-mode cutoff. Mode 0 is the
// fastest index.
struct FockVector {
  int cutoff = 0;
  int num_modes = 0;
  std::vector<cdouble> amp;

  int dim() const { return cutoff + 1; }
  std::size_t stride(int mode) const;
  double squared_norm() const;
};

struct FockOperator {
  int cutoff = 0;
  int num_modes = 0;
  std::vector<cdouble> mat;  // row-major, side = (cutoff+1)^num_modes

  std::size_t side() const;
};

// Single-mode coherent state; throws std::domain_error (with the required
// cutoff in the message) when the truncated tail mass exceeds 1e-10.
FockVector coherent_to_fock(cdouble a, int cutoff);

FockVector tensor(const FockVector& u, const FockVector& v);
void add_scaled(FockVector& dst, cdouble w, const FockVector& src);

// Real orthogonal 2x2 amplitude mixer: coherent amplitudes transform as
// (a, b) -> (m00 a + m01 b, m10 a + m11 b).
struct Mixer2 {
  double m00, m01, m10, m11;
};

Mixer2 mixer_5050();            // (a+b)/sqrt2, (a-b)/sqrt2
Mixer2 mixer_loss(double eta);  // (sqrt(1-eta) a, sqrt(eta) a) on vacuum b

// Photon-number-block matrices of the two-mode mixer unitary; block n is a
// (n+1)x(n+1) row-major matrix over |k, n-k> with k photons in the first
// mode.
std::vector<std::vector<double>> pair_mixer_blocks(const Mixer2& mix,
                                                   int max_total);

// Applies the mixer unitary to modes (a, b) of a multimode vector in place.
void apply_pair_mixer(FockVector& state, int mode_a, int mode_b,
                      const Mixer2& mix);

struct Projected {
  FockVector state;
  double probability;
};

// Projects the listed modes onto |0> and drops them from the tensor product.
Projected vacuum_project(const FockVector& state,
                         const std::vector<int>& modes);

FockOperator density(const FockVector& v);
FockOperator partial_trace(const FockOperator& op, int mode);
double trace_real(const FockOperator& op);

cdouble fock_inner(const FockVector& u, const FockVector& v);
// <v|rho|v> / (tr(rho) <v|v>)
double fock_fidelity(const FockOperator& rho, const FockVector& v);
// (1/2) ||a - b||_1 via Hermitian eigendecomposition.
double trace_distance(const FockOperator& a, const FockOperator& b);
FockOperator normalized(const FockOperator& op);

// Conversions from the dyad algebra (single-mode carriers).
FockVector ket_to_fock(const KetSuperposition& u, int cutoff);
FockOperator dyads_to_fock(const DyadMixture& rho, int cutoff);

struct OracleBreed {
  FockOperator rho;  // single mode (A,psi)
  double probability;
  int cutoff;
};

// Full breeding pipeline in the number basis, mirroring breed().
OracleBreed breed_oracle(double alpha, double eta, bool matched = true);

// Loss channel in the number basis, mirroring apply_loss().
FockOperator loss_oracle(const CatSpec& cat, double eta, int cutoff = 0);

}  // namespace catbreed::fock
