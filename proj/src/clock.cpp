#include "paw/clock.hpp"

#include <cmath>

#include "paw/thermo.hpp"

namespace paw {

const Matrix& AgreementProjectors::operator()(Direction system, Direction clock) const {
  if (system == Direction::Right) return clock == Direction::Right ? rr : rl;
  return clock == Direction::Right ? lr : ll;
}

AgreementProjectors agreement_projectors() {
  const Matrix right = ket_plus() * ket_plus().adjoint();
  const Matrix left = ket_minus() * ket_minus().adjoint();
  return AgreementProjectors{
      .rr = kron(right, right),
      .rl = kron(right, left),
      .lr = kron(left, right),
      .ll = kron(left, left),
  };
}

ClockTable conditional_probabilities(const DensityMatrix& drho) {
  if (drho.dim() != 4) throw Error(Errc::DimensionMismatch, "conditional_probabilities needs a 4x4 state");
  const auto e = agreement_projectors();
  const auto prob = [&](const Matrix& proj) { return (drho.matrix() * proj).trace().real(); };

  const double clock_right = prob(e.rr + e.lr);
  const double clock_left = prob(e.rl + e.ll);
  if (clock_right < kMinClockProbability || clock_left < kMinClockProbability) {
    throw Error(Errc::DegenerateConditional, "a clock outcome has zero probability");
  }
  return ClockTable{
      .p_rr = prob(e.rr) / clock_right,
      .p_ll = prob(e.ll) / clock_left,
      .p_rl = prob(e.rl) / clock_left,
      .p_lr = prob(e.lr) / clock_right,
  };
}

double p_rr_closed_form(const BellDiagonalTriplet& t) {
  require_valid_triplet(t);
  return (2 + t.c1 + t.c2) / 4;
}

SweepRecord evaluate_triplet(const BellDiagonalTriplet& t) {
  static const EnergyStructure zeeman = zeeman_hamiltonian(1.0);
  const DensityMatrix rho = bell_diagonal(t);
  const DensityMatrix drho = twirl_pinching(rho, zeeman);
  SweepRecord rec;
  rec.triplet = t;
  rec.clock = conditional_probabilities(drho);
  rec.breakdown = coherence_breakdown(rho, zeeman);
  rec.concurrence_initial = concurrence(rho);
  rec.concurrence_dephased = concurrence(drho);
  rec.work_bits = work_from_internal_coherence(rho, zeeman, 1.0).work_bits;
  return rec;
}

std::vector<double> grid_axis(double step) {
  if (!(step > 0) || !std::isfinite(step)) throw Error(Errc::InvalidArgument, "grid step must be positive");
  const auto count = static_cast<long>(std::floor(2.0 / step + 1e-9));
  std::vector<double> axis;
  axis.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) {
    // Snap to 1e-12 so accumulated rounding never nudges a boundary point outside the tetrahedron.
    const double c = std::round((-1.0 + static_cast<double>(i) * step) * 1e12) / 1e12;
    axis.push_back(c == 0.0 ? 0.0 : c);
  }
  return axis;
}

std::vector<SweepRecord> sweep_family(double c3, double step) {
  if (!(c3 >= -1 && c3 <= 1)) throw Error(Errc::InvalidArgument, "c3 must lie in [-1, 1]");
  if (!(step > 0 && step <= 2)) throw Error(Errc::InvalidArgument, "step must lie in (0, 2]");
  const auto axis = grid_axis(step);
  std::vector<SweepRecord> records;
  for (double c1 : axis) {
    for (double c2 : axis) {
      const BellDiagonalTriplet t{c1, c2, c3};
      if (!is_valid_triplet(t)) continue;
      records.push_back(evaluate_triplet(t));
    }
  }
  return records;
}

}  // namespace paw
