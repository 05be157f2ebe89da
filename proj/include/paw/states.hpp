#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "paw/qmat.hpp"

namespace paw {

/// A validated quantum state: Hermitian, unit trace, positive semidefinite, all
/// within `tolerance()`. Immutable after construction.
class DensityMatrix {
 public:
  static constexpr double kDefaultTol = 1e-10;

  explicit DensityMatrix(Matrix m, double tol = kDefaultTol);

  const Matrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  double tolerance() const noexcept { return tol_; }

  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  Matrix m_;
  double tol_;
};

/// |ψ⟩⟨ψ| for a (not necessarily normalized) vector.
DensityMatrix pure_state(const Vector& psi);

/// Correlation coefficients c_i = tr(ρ σ_i⊗σ_i) of a two-qubit Bell-diagonal state.
struct BellDiagonalTriplet {
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;
};

inline constexpr double kTripletTol = 1e-12;

/// The four Bell-basis populations λ_{γν}, ordered (γν) = 00, 01, 10, 11.
std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalTriplet& t);

bool is_valid_triplet(const BellDiagonalTriplet& t, double tol = kTripletTol);

/// Throws Errc::InvalidTriplet naming the first negative λ_{γν}.
void require_valid_triplet(const BellDiagonalTriplet& t, double tol = kTripletTol);

/// The X-shaped 4×4 matrix ¼(1 + Σ c_i σ_i⊗σ_i) in the basis (00, 01, 10, 11).
DensityMatrix bell_diagonal(const BellDiagonalTriplet& t);

Vector ket_plus();
Vector ket_minus();
/// (|01⟩ + |10⟩)/√2
Vector bell_psi_plus();
/// (|00⟩ + |11⟩)/√2
Vector bell_phi_plus();

/// e^{-βH}/tr(e^{-βH}).
DensityMatrix thermal_state(const Matrix& h, double beta);

/// G·G†/tr(G·G†) with G complex Ginibre, drawn from a generator seeded by `seed`.
DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed);

}  // namespace paw
