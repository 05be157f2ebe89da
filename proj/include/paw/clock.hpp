#pragma once

#include <array>
#include <vector>

#include "paw/measures.hpp"
#include "paw/states.hpp"

namespace paw {

/// Outcomes of a σx measurement: right is |+⟩, left is |−⟩.
enum class Direction { Right, Left };

/// E_{ημ} = |η⟩⟨η| ⊗ |μ⟩⟨μ|; qubit 1 is the system, qubit 2 the clock.
struct AgreementProjectors {
  Matrix rr, rl, lr, ll;  // first letter system, second letter clock

  const Matrix& operator()(Direction system, Direction clock) const;
};

AgreementProjectors agreement_projectors();

/// Conditional probabilities p_{system,clock} = tr(D E_{system,clock}) / tr(D (1⊗E_clock)).
/// p_rr and p_ll are agreements; p_rl and p_lr disagreements.
struct ClockTable {
  double p_rr = 0;
  double p_ll = 0;
  double p_rl = 0;
  double p_lr = 0;
};

inline constexpr double kMinClockProbability = 1e-12;

ClockTable conditional_probabilities(const DensityMatrix& drho);

/// (2 + c1 + c2)/4
double p_rr_closed_form(const BellDiagonalTriplet& t);

struct SweepRecord {
  BellDiagonalTriplet triplet;
  ClockTable clock;
  CoherenceBreakdown breakdown;
  double concurrence_initial = 0;
  double concurrence_dephased = 0;
  double work_bits = 0;
};

/// Every quantity reported for a single Bell-diagonal state, with h = 1 and kT = 1.
SweepRecord evaluate_triplet(const BellDiagonalTriplet& t);

/// Row-major grid over (c1, c2) ∈ [-1, 1]² at fixed c3, keeping valid triplets only.
std::vector<SweepRecord> sweep_family(double c3, double step);

/// Grid coordinates -1, -1+step, ..., up to 1 (inclusive when step divides 2).
std::vector<double> grid_axis(double step);

}  // namespace paw
