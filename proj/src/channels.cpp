#include "paw/channels.hpp"

#include <numbers>

namespace paw {

namespace {

void require_same_dim(const DensityMatrix& rho, const EnergyStructure& es) {
  if (rho.dim() != es.dim()) {
    throw Error(Errc::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                             " does not match Hamiltonian dimension " + std::to_string(es.dim()));
  }
}

Matrix hermitize(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

}  // namespace

EnergyStructure EnergyStructure::from_hamiltonian(const Matrix& hamiltonian, std::optional<double> period,
                                                  double grouping_tol) {
  require_square(hamiltonian, "Hamiltonian");
  if (period && !(*period > 0)) throw Error(Errc::InvalidArgument, "period must be positive");
  const auto eig = hermitian_eigendecompose(hamiltonian);

  EnergyStructure es;
  es.hamiltonian_ = hamiltonian;
  es.period_ = period;
  es.grouping_tol_ = grouping_tol;

  const Eigen::Index n = eig.values.size();
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || eig.values(i) - eig.values(i - 1) > grouping_tol) {
      const Matrix block = eig.vectors.middleCols(begin, i - begin);
      es.projectors_.push_back(hermitize(block * block.adjoint()));
      es.energies_.push_back(eig.values.segment(begin, i - begin).mean());
      begin = i;
    }
  }
  return es;
}

EnergyStructure zeeman_hamiltonian(double h) {
  if (h == 0 || !std::isfinite(h)) throw Error(Errc::ZeroField, "Zeeman field h must be finite and nonzero");
  const Matrix id = identity(2);
  const Matrix hz = -h * (kron(pauli_z(), id) + kron(id, pauli_z()));
  return EnergyStructure::from_hamiltonian(hz, std::numbers::pi / std::abs(h));
}

EnergyStructure single_spin_zeeman(double h) {
  if (h == 0 || !std::isfinite(h)) throw Error(Errc::ZeroField, "Zeeman field h must be finite and nonzero");
  const Matrix hz = -h * pauli_z();
  return EnergyStructure::from_hamiltonian(hz, std::numbers::pi / std::abs(h));
}

DensityMatrix full_dephase(const DensityMatrix& rho) {
  Matrix out = rho.matrix().diagonal().real().cast<Complex>().asDiagonal();
  return DensityMatrix(std::move(out), rho.tolerance());
}

DensityMatrix twirl_pinching(const DensityMatrix& rho, const EnergyStructure& es) {
  require_same_dim(rho, es);
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& p : es.projectors()) out += p * rho.matrix() * p;
  return DensityMatrix(hermitize(out), rho.tolerance());
}

DensityMatrix twirl_quadrature(const DensityMatrix& rho, const EnergyStructure& es, int steps) {
  require_same_dim(rho, es);
  if (steps < 4 || steps % 2 != 0) throw Error(Errc::BadStepCount, "Simpson rule needs an even step count >= 4");
  const auto period = es.period();
  if (!period) throw Error(Errc::AperiodicHamiltonian, "twirl_quadrature needs a Hamiltonian with a known period");

  const auto eig = hermitian_eigendecompose(es.hamiltonian());
  // In the eigenbasis the integrand is ρ̃_jk e^{-i(E_j-E_k)t}.
  const Matrix rho_e = eig.vectors.adjoint() * rho.matrix() * eig.vectors;
  const Eigen::Index n = rho.dim();
  const double dt = *period / steps;

  Matrix acc = Matrix::Zero(n, n);
  for (int s = 0; s <= steps; ++s) {
    const double weight = (s == 0 || s == steps) ? 1.0 : (s % 2 == 1 ? 4.0 : 2.0);
    const double t = s * dt;
    Vector phase(n);
    for (Eigen::Index j = 0; j < n; ++j) phase(j) = std::exp(Complex(0, -eig.values(j) * t));
    acc += weight * (phase.asDiagonal() * rho_e * phase.conjugate().asDiagonal());
  }
  acc *= dt / 3.0 / *period;
  Matrix out = eig.vectors * acc * eig.vectors.adjoint();
  return DensityMatrix(hermitize(out), rho.tolerance());
}

}  // namespace paw
