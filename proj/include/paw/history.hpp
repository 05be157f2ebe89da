#pragma once

#include "paw/channels.hpp"
#include "paw/qmat.hpp"

namespace paw {

/// A stationary clock ⊗ system state whose clock-conditioned slices carry the
/// system's Schrödinger evolution.
struct HistoryUniverse {
  Eigen::Index clock_dim = 0;  // s + 1 ticks
  double beta = 1;             // time per tick
  Matrix clock_h;
  Matrix system_h;
  Matrix total_h;  // H_c⊗1 + 1⊗H_s
  Vector psi;      // global state, clock index most significant
  Vector psi0;     // initial system state
};

/// Diagonal clock Hamiltonian with E_n = 2πn/(dim·β), n = 0..dim−1.
Matrix commensurate_clock_hamiltonian(Eigen::Index dim, double beta);

/// |t_m⟩ = e^{-iH_c mβ}|t_0⟩, |t_0⟩ the uniform superposition of clock levels.
Vector clock_time_state(Eigen::Index clock_dim, double beta, Eigen::Index m);

/// Qubit Hamiltonian diag(0, −2π/(dim·β)): each clock tick advances the relative
/// phase by one clock quantum, and −H_s lies in the clock spectrum.
Matrix tick_qubit_hamiltonian(Eigen::Index clock_dim, double beta);

/// |Ψ⟩ = (1/√N) Σ_m |t_m⟩ ⊗ e^{-iH_s mβ}|ψ0⟩. Throws NoZeroEnergySector when
/// ‖H_total Ψ‖ exceeds 1e-6, i.e. −spec(H_s) is not contained in the clock spectrum.
HistoryUniverse build_history_universe(Eigen::Index clock_dim, double beta, const Matrix& h_s, const Vector& psi0);

double zero_energy_residual(const HistoryUniverse& u);

struct ConditionalState {
  Vector unnormalized;  // ⟨t_m|Ψ⟩
  Vector normalized;
  double weight = 0;  // ‖⟨t_m|Ψ⟩‖²
};

ConditionalState conditional_system_state(const HistoryUniverse& u, Eigen::Index m);

/// |⟨a|b⟩|² for unit vectors.
double fidelity(const Vector& a, const Vector& b);

/// Energy structure of the total Hamiltonian (no period attached).
EnergyStructure total_energy_structure(const HistoryUniverse& u);

}  // namespace paw
