#pragma once

#include <vector>

#include "catbreed/coherent.hpp"
#include "catbreed/modes.hpp"

namespace catbreed {

enum class Parity { Even, Odd };

// Recipe for |alpha> +/- |-alpha> (even: +, odd: -), unnormalized.
struct CatSpec {
  double magnitude;
  Parity parity;
};

KetSuperposition make_cat(const CatSpec& spec, Spatial spatial,
                          Spectral spectral);

// Decomposes the spatial-B amplitude into overlapping (psi) and orthogonal
// (psibar) components: a -> sqrt(eta) a in (B,psi), sqrt(1-eta) a in
// (B,psibar). The state must have no prior (B,psibar) support.
KetSuperposition mismatch_split(const KetSuperposition& state, double eta);

// (a, b) -> ((a+b)/sqrt2, (a-b)/sqrt2) per label; unitary.
KetSuperposition beamsplitter_5050(const KetSuperposition& state, ModeIndex a,
                                   ModeIndex b);

struct VacuumConditioned {
  KetSuperposition state;
  double probability;
};

// Projects the given modes onto the vacuum: each term picks up
// prod_m <0|amp_m> and those modes are removed from the labels.
VacuumConditioned condition_vacuum(const KetSuperposition& state,
                                   const std::vector<ModeIndex>& modes);

struct BreedOptions {
  // When true, alpha is the common matched psi-component magnitude at the
  // beamsplitter and the B-side physical input cat has magnitude
  // alpha/sqrt(eta). When false, both physical input cats have magnitude
  // alpha.
  bool matched = true;
  // Swap the parity assignment (default: odd on A, even on B).
  bool swap_parity = false;
};

struct BreedResult {
  DyadMixture effective_state;  // modes (A,psi) only
  double success_probability;
  double input_magnitude;
  double mode_overlap;
};

// Full pipeline: input cats, mode-mismatch split, 50/50 beamsplitter on the
// psi and psibar pairs, vacuum conditioning on spatial B, trace over
// (A,psibar).
BreedResult breed(double alpha, double eta, BreedOptions opts = {});

}  // namespace catbreed
