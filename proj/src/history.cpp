#include "paw/history.hpp"

#include <numbers>
#include <string>

namespace paw {

namespace {

constexpr double kZeroEnergyLimit = 1e-6;

void require_clock(Eigen::Index dim, double beta) {
  if (dim < 2) throw Error(Errc::BadDimension, "clock dimension must be at least 2");
  if (!(beta > 0) || !std::isfinite(beta)) throw Error(Errc::InvalidArgument, "beta must be finite and positive");
}

}  // namespace

Matrix commensurate_clock_hamiltonian(Eigen::Index dim, double beta) {
  require_clock(dim, beta);
  Matrix h = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    h(n, n) = 2 * std::numbers::pi * static_cast<double>(n) / (static_cast<double>(dim) * beta);
  }
  return h;
}

Vector clock_time_state(Eigen::Index clock_dim, double beta, Eigen::Index m) {
  require_clock(clock_dim, beta);
  Vector t(clock_dim);
  const double norm = 1 / std::sqrt(static_cast<double>(clock_dim));
  for (Eigen::Index n = 0; n < clock_dim; ++n) {
    // E_n·mβ = 2πnm/N; reducing nm mod N keeps the phase argument small.
    const auto k = static_cast<double>((n * m) % clock_dim);
    t(n) = norm * std::exp(Complex(0, -2 * std::numbers::pi * k / static_cast<double>(clock_dim)));
  }
  return t;
}

Matrix tick_qubit_hamiltonian(Eigen::Index clock_dim, double beta) {
  require_clock(clock_dim, beta);
  Matrix h = Matrix::Zero(2, 2);
  h(1, 1) = -2 * std::numbers::pi / (static_cast<double>(clock_dim) * beta);
  return h;
}

HistoryUniverse build_history_universe(Eigen::Index clock_dim, double beta, const Matrix& h_s, const Vector& psi0) {
  require_clock(clock_dim, beta);
  require_square(h_s, "system Hamiltonian");
  if (!is_hermitian(h_s)) throw Error(Errc::NotHermitian, "system Hamiltonian is not Hermitian");
  if (psi0.size() != h_s.rows()) throw Error(Errc::DimensionMismatch, "initial state does not match H_s");
  if (std::abs(psi0.norm() - 1) > 1e-10) throw Error(Errc::InvalidArgument, "initial state must be normalized");

  HistoryUniverse u;
  u.clock_dim = clock_dim;
  u.beta = beta;
  u.clock_h = commensurate_clock_hamiltonian(clock_dim, beta);
  u.system_h = h_s;
  u.psi0 = psi0;
  const Eigen::Index ds = h_s.rows();
  u.total_h = kron(u.clock_h, identity(ds)) + kron(identity(clock_dim), h_s);

  const auto eig = hermitian_eigendecompose(h_s);
  const Vector amplitudes = eig.vectors.adjoint() * psi0;
  u.psi = Vector::Zero(clock_dim * ds);
  for (Eigen::Index m = 0; m < clock_dim; ++m) {
    Vector phases(ds);
    for (Eigen::Index k = 0; k < ds; ++k) {
      phases(k) = std::exp(Complex(0, -eig.values(k) * static_cast<double>(m) * beta));
    }
    const Vector evolved = eig.vectors * phases.asDiagonal() * amplitudes;
    u.psi += kron(clock_time_state(clock_dim, beta, m), evolved);
  }
  u.psi /= u.psi.norm();

  const double residual = zero_energy_residual(u);
  if (residual > kZeroEnergyLimit) {
    throw Error(Errc::NoZeroEnergySector,
                "residual |H Psi| = " + std::to_string(residual) + "; -spec(H_s) must lie in the clock spectrum");
  }
  return u;
}

double zero_energy_residual(const HistoryUniverse& u) { return (u.total_h * u.psi).norm(); }

ConditionalState conditional_system_state(const HistoryUniverse& u, Eigen::Index m) {
  if (m < 0 || m >= u.clock_dim) {
    throw Error(Errc::IndexOutOfRange, "clock tick " + std::to_string(m) + " outside [0, " +
                                           std::to_string(u.clock_dim - 1) + "]");
  }
  const Eigen::Index ds = u.system_h.rows();
  const Vector t = clock_time_state(u.clock_dim, u.beta, m);
  Vector slice = Vector::Zero(ds);
  for (Eigen::Index n = 0; n < u.clock_dim; ++n) slice += std::conj(t(n)) * u.psi.segment(n * ds, ds);

  ConditionalState out;
  out.weight = slice.squaredNorm();
  out.normalized = out.weight > 0 ? Vector(slice / std::sqrt(out.weight)) : slice;
  out.unnormalized = std::move(slice);
  return out;
}

double fidelity(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "fidelity: vector sizes differ");
  return std::norm(a.dot(b));
}

EnergyStructure total_energy_structure(const HistoryUniverse& u) {
  return EnergyStructure::from_hamiltonian(u.total_h);
}

}  // namespace paw
