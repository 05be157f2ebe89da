#include "paw/thermo.hpp"

#include <numbers>

#include "paw/measures.hpp"

namespace paw {

namespace {

void require_positive_kT(double kT) {
  if (!(kT > 0) || !std::isfinite(kT)) throw Error(Errc::InvalidArgument, "kT must be finite and positive");
}

}  // namespace

double free_energy(const DensityMatrix& rho, const Matrix& h, double kT) {
  require_positive_kT(kT);
  if (h.rows() != h.cols() || h.rows() != rho.dim()) {
    throw Error(Errc::DimensionMismatch, "free_energy: Hamiltonian and state dimensions differ");
  }
  if (!is_hermitian(h)) throw Error(Errc::NotHermitian, "free_energy: Hamiltonian is not Hermitian");
  const double energy = (h * rho.matrix()).trace().real();
  return energy - kT * std::numbers::ln2 * von_neumann_entropy(rho);
}

double extractable_work_total(const DensityMatrix& rho, const EnergyStructure& es, const Matrix& bath_h,
                              double kT) {
  require_positive_kT(kT);
  const DensityMatrix bath = thermal_state(bath_h, 1.0 / kT);
  return free_energy(twirl_pinching(rho, es), es.hamiltonian(), kT) - free_energy(bath, bath_h, kT);
}

WorkReport work_from_internal_coherence(const DensityMatrix& rho, const EnergyStructure& es, double kT) {
  require_positive_kT(kT);
  WorkReport report;
  report.kT = kT;
  report.free_energy_twirled = free_energy(twirl_pinching(rho, es), es.hamiltonian(), kT);
  report.free_energy_dephased = free_energy(full_dephase(rho), es.hamiltonian(), kT);
  report.work = report.free_energy_twirled - report.free_energy_dephased;
  report.work_bits = report.work / (kT * std::numbers::ln2);
  return report;
}

WorkLockingReport work_locking_demo(double kT) {
  require_positive_kT(kT);
  WorkLockingReport out;

  Matrix rho1(2, 2);
  rho1 << 1, 1, 1, 1;
  rho1 *= 0.5;
  out.single_copy_state = rho1;

  const DensityMatrix single(rho1);
  const EnergyStructure spin = single_spin_zeeman(1.0);
  out.single_copy = work_from_internal_coherence(single, spin, kT);
  out.single_copy_twirl_gap = max_abs(twirl_pinching(single, spin).matrix() - full_dephase(single).matrix());

  const DensityMatrix product(kron(rho1, rho1));
  const EnergyStructure pair = zeeman_hamiltonian(1.0);
  out.product_twirled = twirl_pinching(product, pair).matrix();

  out.expected_product_twirled = Matrix::Zero(4, 4);
  out.expected_product_twirled(0, 0) = out.expected_product_twirled(3, 3) = 0.25;
  out.expected_product_twirled.block(1, 1, 2, 2).setConstant(0.25);

  const Matrix dephased1 = full_dephase(single).matrix();
  out.product_of_dephased = kron(dephased1, dephased1);
  out.unlocking_gap = max_abs(out.product_twirled - out.product_of_dephased);
  out.two_copy = work_from_internal_coherence(product, pair, kT);
  return out;
}

}  // namespace paw
