#include "paw/states.hpp"

#include <random>
#include <sstream>

namespace paw {

DensityMatrix::DensityMatrix(Matrix m, double tol) : m_(std::move(m)), tol_(tol) {
  require_square(m_, "density matrix");
  if (!all_finite(m_)) throw Error(Errc::InvalidState, "density matrix has non-finite entries");
  if (hermiticity_defect(m_) > tol_) throw Error(Errc::NotHermitian, "density matrix is not Hermitian");
  const Complex trace = m_.trace();
  if (std::abs(trace - Complex(1)) > tol_) {
    std::ostringstream msg;
    msg << "trace is " << trace.real() << " (expected 1)";
    throw Error(Errc::InvalidState, msg.str());
  }
  const double min_eig = hermitian_eigendecompose(m_, tol_).values.minCoeff();
  if (min_eig < -tol_) {
    std::ostringstream msg;
    msg << "minimum eigenvalue " << min_eig << " is negative";
    throw Error(Errc::InvalidState, msg.str());
  }
}

DensityMatrix pure_state(const Vector& psi) {
  const double norm = psi.norm();
  if (norm == 0) throw Error(Errc::InvalidState, "zero vector");
  const Vector unit = psi / norm;
  Matrix rho = unit * unit.adjoint();
  return DensityMatrix(std::move(rho));
}

std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalTriplet& t) {
  std::array<double, 4> out{};
  for (int gamma = 0; gamma < 2; ++gamma) {
    for (int nu = 0; nu < 2; ++nu) {
      const double sg = gamma == 0 ? 1.0 : -1.0;
      const double sn = nu == 0 ? 1.0 : -1.0;
      out[static_cast<std::size_t>(2 * gamma + nu)] = 0.25 * (1.0 + sg * t.c1 - sg * sn * t.c2 + sn * t.c3);
    }
  }
  return out;
}

bool is_valid_triplet(const BellDiagonalTriplet& t, double tol) {
  for (double c : {t.c1, t.c2, t.c3}) {
    if (!std::isfinite(c)) return false;
  }
  for (double l : bell_diagonal_eigenvalues(t)) {
    if (l < -tol) return false;
  }
  return true;
}

void require_valid_triplet(const BellDiagonalTriplet& t, double tol) {
  for (double c : {t.c1, t.c2, t.c3}) {
    if (!std::isfinite(c)) throw Error(Errc::InvalidTriplet, "triplet has a non-finite entry");
  }
  const auto lambdas = bell_diagonal_eigenvalues(t);
  for (int idx = 0; idx < 4; ++idx) {
    if (lambdas[static_cast<std::size_t>(idx)] < -tol) {
      std::ostringstream msg;
      msg << "lambda_" << idx / 2 << idx % 2 << " = " << lambdas[static_cast<std::size_t>(idx)]
          << " < 0 for {" << t.c1 << ", " << t.c2 << ", " << t.c3 << "}";
      throw Error(Errc::InvalidTriplet, msg.str());
    }
  }
}

DensityMatrix bell_diagonal(const BellDiagonalTriplet& t) {
  require_valid_triplet(t);
  Matrix rho = Matrix::Zero(4, 4);
  rho(0, 0) = rho(3, 3) = 1 + t.c3;
  rho(1, 1) = rho(2, 2) = 1 - t.c3;
  rho(0, 3) = rho(3, 0) = t.c1 - t.c2;
  rho(1, 2) = rho(2, 1) = t.c1 + t.c2;
  rho *= 0.25;
  // Boundary triplets sit on the PSD cone; allow the same slack as the triplet check.
  return DensityMatrix(std::move(rho), std::max(DensityMatrix::kDefaultTol, kTripletTol));
}

Vector ket_plus() {
  Vector v(2);
  v << 1, 1;
  return v / std::sqrt(2.0);
}

Vector ket_minus() {
  Vector v(2);
  v << 1, -1;
  return v / std::sqrt(2.0);
}

Vector bell_psi_plus() {
  Vector v = Vector::Zero(4);
  v(1) = v(2) = 1 / std::sqrt(2.0);
  return v;
}

Vector bell_phi_plus() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1 / std::sqrt(2.0);
  return v;
}

DensityMatrix thermal_state(const Matrix& h, double beta) {
  require_square(h, "Hamiltonian");
  if (!(beta >= 0) || !std::isfinite(beta)) throw Error(Errc::InvalidArgument, "beta must be finite and >= 0");
  const auto eig = hermitian_eigendecompose(h);
  const double ground = eig.values.minCoeff();
  // Shifting by the ground energy leaves e^{-βH}/Z unchanged and avoids overflow.
  RealVector weights = (-(beta) * (eig.values.array() - ground)).exp().matrix();
  weights /= weights.sum();
  Matrix rho = eig.vectors * weights.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  rho = (rho + rho.adjoint()) * 0.5;
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 2) throw Error(Errc::BadDimension, "random_density_matrix needs dim >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) * 0.5;
  return DensityMatrix(std::move(rho));
}

}  // namespace paw
