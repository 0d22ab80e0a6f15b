#pragma once

#include <array>

namespace catbreed {

enum class Spatial { A, B };
enum class Spectral { Psi, PsiBar };

// One of the four (spatial, spectral) modes the protocol acts on.
// slot() fixes the tensor order used everywhere, including the Fock oracle:
// (A,psi)=0, (B,psi)=1, (A,psibar)=2, (B,psibar)=3.
struct ModeIndex {
  Spatial spatial;
  Spectral spectral;

  constexpr int slot() const {
    return (spectral == Spectral::PsiBar ? 2 : 0) +
           (spatial == Spatial::B ? 1 : 0);
  }

  friend constexpr bool operator==(ModeIndex, ModeIndex) = default;
};

inline constexpr ModeIndex kModeAPsi{Spatial::A, Spectral::Psi};
inline constexpr ModeIndex kModeBPsi{Spatial::B, Spectral::Psi};
inline constexpr ModeIndex kModeAPsiBar{Spatial::A, Spectral::PsiBar};
inline constexpr ModeIndex kModeBPsiBar{Spatial::B, Spectral::PsiBar};

inline constexpr int kNumModes = 4;
inline constexpr std::array<ModeIndex, kNumModes> kAllModes{
    kModeAPsi, kModeBPsi, kModeAPsiBar, kModeBPsiBar};

}  // namespace catbreed
