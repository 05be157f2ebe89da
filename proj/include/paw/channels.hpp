#pragma once

#include <optional>
#include <vector>

#include "paw/qmat.hpp"
#include "paw/states.hpp"

namespace paw {

/// A Hamiltonian together with its spectrum grouped into degenerate blocks.
///
/// The block projectors define the time-average twirl; `period()` is the time
/// after which e^{-iHt} returns to itself up to a global phase, when known.
class EnergyStructure {
 public:
  static constexpr double kDefaultGroupingTol = 1e-9;

  /// Groups the spectrum of `hamiltonian` into blocks whose consecutive eigenvalues
  /// differ by at most `grouping_tol`.
  static EnergyStructure from_hamiltonian(const Matrix& hamiltonian, std::optional<double> period = std::nullopt,
                                          double grouping_tol = kDefaultGroupingTol);

  const Matrix& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<Matrix>& projectors() const noexcept { return projectors_; }
  const std::vector<double>& energies() const noexcept { return energies_; }
  std::optional<double> period() const noexcept { return period_; }
  double grouping_tolerance() const noexcept { return grouping_tol_; }
  std::size_t block_count() const noexcept { return projectors_.size(); }
  Eigen::Index dim() const noexcept { return hamiltonian_.rows(); }

 private:
  EnergyStructure() = default;

  Matrix hamiltonian_;
  std::vector<Matrix> projectors_;
  std::vector<double> energies_;
  std::optional<double> period_;
  double grouping_tol_ = kDefaultGroupingTol;
};

/// H = -h(σz⊗1 + 1⊗σz) = diag(-2h, 0, 0, 2h), with period π/|h|.
EnergyStructure zeeman_hamiltonian(double h = 1.0);

/// Single spin H = -hσz. Non-degenerate, so its twirl coincides with full dephasing.
EnergyStructure single_spin_zeeman(double h = 1.0);

/// Keeps only the computational-basis diagonal.
DensityMatrix full_dephase(const DensityMatrix& rho);

/// Σ_k P_k ρ P_k over the degenerate energy blocks.
DensityMatrix twirl_pinching(const DensityMatrix& rho, const EnergyStructure& es);

/// (1/T)∫₀ᵀ e^{-iHt} ρ e^{iHt} dt by composite Simpson with `steps` subintervals.
/// `steps` must be even and at least 4.
DensityMatrix twirl_quadrature(const DensityMatrix& rho, const EnergyStructure& es, int steps);

}  // namespace paw
