#pragma once

#include <array>
#include <complex>
#include <vector>

#include "catbreed/modes.hpp"

namespace catbreed {

using cdouble = std::complex<double>;

// Per-mode amplitude distance below which two labels denote the same state.
inline constexpr double kMergeTol = 1e-12;
// Weights below this are discarded during simplification.
inline constexpr double kDropTol = 1e-14;

// Multimode coherent amplitude label; slots not set are amplitude zero.
struct CoherentLabel {
  std::array<cdouble, kNumModes> amp{};

  cdouble at(ModeIndex m) const { return amp[m.slot()]; }
  void set(ModeIndex m, cdouble a) { amp[m.slot()] = a; }
};

bool mergeable(const CoherentLabel& x, const CoherentLabel& y,
               double tol = kMergeTol);

// <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a)*b). Throws std::domain_error on
// non-finite input.
cdouble coherent_overlap(cdouble a, cdouble b);

// Product of single-mode overlaps over all slots.
cdouble multimode_overlap(const CoherentLabel& x, const CoherentLabel& y);

struct KetTerm {
  cdouble weight;
  CoherentLabel label;
};

// Unnormalized finite superposition of multimode coherent states.
struct KetSuperposition {
  std::vector<KetTerm> terms;
};

struct DyadTerm {
  cdouble weight;
  CoherentLabel ket;
  CoherentLabel bra;
};

// Unnormalized operator as a weighted sum of |ket><bra| dyads.
struct DyadMixture {
  std::vector<DyadTerm> terms;
};

cdouble inner_product(const KetSuperposition& u, const KetSuperposition& v);
double squared_norm(const KetSuperposition& u);

// <t|L> for a bare coherent label L.
cdouble bra_ket_label(const KetSuperposition& t, const CoherentLabel& k);

DyadMixture dyad_from_pure(const KetSuperposition& u);

// Traces out the given modes: each dyad picks up prod_m <bra_m|ket_m> and the
// traced slots are cleared. Preserves the trace exactly.
DyadMixture partial_trace(const DyadMixture& rho,
                          const std::vector<ModeIndex>& traced);

KetSuperposition simplify(KetSuperposition x);
DyadMixture simplify(DyadMixture x);

cdouble trace_of(const DyadMixture& rho);
DyadMixture adjoint(const DyadMixture& rho);
bool is_hermitian(const DyadMixture& rho, double tol = 1e-10);

// Hilbert-Schmidt inner product tr(a^dag b) and the induced distance.
cdouble hs_inner(const DyadMixture& a, const DyadMixture& b);
double hs_distance(const DyadMixture& a, const DyadMixture& b);

// tr(rho^2)/tr(rho)^2; equals 1 exactly for rank-1 states.
double purity_ratio(const DyadMixture& rho);

// Tensor product; the two factors must occupy disjoint mode slots.
KetSuperposition tensor(const KetSuperposition& u, const KetSuperposition& v);

}  // namespace catbreed
