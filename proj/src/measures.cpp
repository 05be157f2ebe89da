#include "paw/measures.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace paw {

namespace {

// Eigenvalues below this are numerical zeros of a PSD operator.
constexpr double kZeroEigenvalue = 1e-12;
// Spectral noise floor for the square-root weights in the concurrence.
constexpr double kConcurrenceFloor = 1e-14;

Matrix sigma_yy() { return kron(pauli_y(), pauli_y()); }

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(Errc::DimensionMismatch, "two-qubit (4x4) state expected");
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = hermitian_eigendecompose(rho.matrix(), rho.tolerance());
  double s = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) s -= xlog2x(eig.values(i));
  return std::max(s, 0.0);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(Errc::DimensionMismatch, "relative_entropy: dimensions differ");
  const auto eig = hermitian_eigendecompose(sigma.matrix(), sigma.tolerance());
  double cross = 0;  // tr ρ log₂σ
  for (Eigen::Index j = 0; j < eig.values.size(); ++j) {
    const double weight = eig.vectors.col(j).dot(rho.matrix() * eig.vectors.col(j)).real();
    if (eig.values(j) <= kZeroEigenvalue) {
      if (weight > kZeroEigenvalue) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log2(eig.values(j));
  }
  return -von_neumann_entropy(rho) - cross;
}

CoherenceBreakdown coherence_breakdown(const DensityMatrix& rho, const EnergyStructure& es) {
  const double s_rho = von_neumann_entropy(rho);
  const double s_twirled = von_neumann_entropy(twirl_pinching(rho, es));
  const double s_dephased = von_neumann_entropy(full_dephase(rho));
  return CoherenceBreakdown{
      .total = s_dephased - s_rho,
      .external = s_twirled - s_rho,
      .internal = s_dephased - s_twirled,
  };
}

double internal_coherence_closed_form(const BellDiagonalTriplet& t) {
  require_valid_triplet(t);
  const double x = t.c1 + t.c2;
  // xlog2x(a)/k = (a/k)·log₂a, which carries the 0·log0 = 0 convention.
  // The bracketed sum is symmetric in x, so (c1, c2) -> (-c1, -c2) gives a bitwise identical result.
  return -xlog2x(1 - t.c3) / 2 + (xlog2x(1 + x - t.c3) + xlog2x(1 - x - t.c3)) / 4;
}

double min_over_incoherent(const DensityMatrix& drho, int trials, std::uint64_t seed) {
  const Eigen::Index n = drho.dim();
  const RealVector p = drho.matrix().diagonal().real();
  const double s_drho = von_neumann_entropy(drho);

  // For diagonal τ = diag(q): S(drho||τ) = −S(drho) − Σ p_i log₂ q_i.
  const auto divergence = [&](const RealVector& q) {
    double cross = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (p(i) <= kZeroEigenvalue) continue;
      if (q(i) <= 0) return std::numeric_limits<double>::infinity();
      cross += p(i) * std::log2(q(i));
    }
    return -s_drho - cross;
  };

  RealVector analytic = p.cwiseMax(0.0);
  analytic /= analytic.sum();
  double best = divergence(analytic);

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exponential(1.0);
  RealVector q(n);
  for (int trial = 0; trial < trials; ++trial) {
    for (Eigen::Index i = 0; i < n; ++i) q(i) = exponential(rng);
    q /= q.sum();
    best = std::min(best, divergence(q));
  }
  return best;
}

Matrix spin_flip(const Matrix& rho) {
  const Matrix yy = sigma_yy();
  return yy * rho.conjugate() * yy;
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho);
  // Wootters' construction: with ρ = W W†, the square roots of the eigenvalues of
  // ρρ̃ are the singular values of Wᵀ (σy⊗σy) W. This avoids square roots of
  // eigenvalues that are zero up to rounding.
  const auto eig = hermitian_eigendecompose(rho.matrix(), rho.tolerance());
  RealVector weights(4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    weights(i) = eig.values(i) > kConcurrenceFloor ? std::sqrt(eig.values(i)) : 0.0;
  }
  const Matrix w = eig.vectors * weights.cast<Complex>().asDiagonal();
  const Matrix tau = w.transpose() * sigma_yy() * w;
  Eigen::JacobiSVD<Matrix> svd(tau);
  const RealVector s = svd.singularValues();  // decreasing
  return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

std::array<double, 4> concurrence_bd_eigenvalues(const BellDiagonalTriplet& t) {
  require_valid_triplet(t);
  const double c1 = t.c1, c2 = t.c2, c3 = t.c3;
  const double l1 = c1 * c1 / 16 + c1 * c2 / 8 - c1 * c3 / 8 + c1 / 8 + c2 * c2 / 16 - c2 * c3 / 8 + c2 / 8 +
                    c3 * c3 / 16 - c3 / 8 + 1.0 / 16;
  const double l2 = c1 * c1 / 16 + c1 * c2 / 8 + c1 * c3 / 8 - c1 / 8 + c2 * c2 / 16 + c2 * c3 / 8 - c2 / 8 +
                    c3 * c3 / 16 - c3 / 8 + 1.0 / 16;
  const double l3 = c3 * c3 / 16 + c3 / 8 + 1.0 / 16;
  return {l1, l2, l3, l3};
}

}  // namespace paw
