#pragma once

#include "paw/channels.hpp"
#include "paw/states.hpp"

namespace paw {

/// F(ρ) = tr(Hρ) − kT·S(ρ), entropy in nats.
double free_energy(const DensityMatrix& rho, const Matrix& h, double kT);

/// Single-shot work F(D(ρ)) − F(τ_B), τ_B the bath thermal state at the same kT.
double extractable_work_total(const DensityMatrix& rho, const EnergyStructure& es, const Matrix& bath_h, double kT);

struct WorkReport {
  double free_energy_twirled = 0;   // F(D(ρ))
  double free_energy_dephased = 0;  // F(Δ(ρ))
  double work = 0;                  // F(D(ρ)) − F(Δ(ρ))
  double work_bits = 0;             // work / (kT ln 2)
  double kT = 1;
};

WorkReport work_from_internal_coherence(const DensityMatrix& rho, const EnergyStructure& es, double kT = 1.0);

/// Two copies of |+⟩⟨+| under single-spin and two-spin Zeeman twirls.
struct WorkLockingReport {
  Matrix single_copy_state;          // ρ1 = ρ2
  WorkReport single_copy;            // twirled with −hσz: D(ρ1) = Δ(ρ1)
  double single_copy_twirl_gap = 0;  // max|D(ρ1) − Δ(ρ1)|
  Matrix product_twirled;            // D(ρ1⊗ρ2) under the two-spin Zeeman structure
  Matrix expected_product_twirled;   // ¼[[1,0,0,0],[0,1,1,0],[0,1,1,0],[0,0,0,1]]
  Matrix product_of_dephased;        // Δ(ρ1)⊗Δ(ρ2)
  double unlocking_gap = 0;          // max|D(ρ1⊗ρ2) − Δ(ρ1)⊗Δ(ρ2)|
  WorkReport two_copy;
};

WorkLockingReport work_locking_demo(double kT = 1.0);

}  // namespace paw
