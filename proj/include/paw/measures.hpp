#pragma once

#include <array>
#include <cstdint>

#include "paw/channels.hpp"
#include "paw/states.hpp"

namespace paw {

// All entropic quantities are in bits.

double von_neumann_entropy(const DensityMatrix& rho);

/// S(ρ||σ) = tr ρ log₂ρ − tr ρ log₂σ. Returns +infinity when supp ρ ⊄ supp σ.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Total coherence split into the part that survives the twirl and the part it erases.
struct CoherenceBreakdown {
  double total = 0;     // S(Δρ) − S(ρ)
  double external = 0;  // S(Dρ) − S(ρ), the Holevo asymmetry
  double internal = 0;  // S(Δρ) − S(Dρ)
};

CoherenceBreakdown coherence_breakdown(const DensityMatrix& rho, const EnergyStructure& es);

/// Internal coherence of a Bell-diagonal state under the two-spin Zeeman twirl,
/// evaluated directly from the triplet.
double internal_coherence_closed_form(const BellDiagonalTriplet& t);

inline constexpr int kDefaultIncoherentTrials = 10'000;

/// min over diagonal τ of S(drho||τ), searched over `trials` Dirichlet-uniform
/// samples plus the analytic minimizer Δ(drho).
double min_over_incoherent(const DensityMatrix& drho, int trials = kDefaultIncoherentTrials,
                           std::uint64_t seed = 0);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Spin-flipped state (σy⊗σy) ρ* (σy⊗σy), conjugation in the computational basis.
Matrix spin_flip(const Matrix& rho);

/// Eigenvalues of ρρ̃ for the twirled Bell-diagonal state D(ρ(t)), as explicit
/// polynomials in the triplet. Ordered (λ1, λ2, λ3, λ4) with λ3 = λ4.
std::array<double, 4> concurrence_bd_eigenvalues(const BellDiagonalTriplet& t);

}  // namespace paw
