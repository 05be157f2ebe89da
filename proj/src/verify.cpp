#include "paw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>

#include "paw/clock.hpp"
#include "paw/history.hpp"
#include "paw/measures.hpp"
#include "paw/thermo.hpp"

namespace paw {

bool evaluate(Comparison comparison, double expected, double observed, double tolerance) {
  if (!std::isfinite(observed)) return false;
  switch (comparison) {
    case Comparison::Equal: return std::abs(expected - observed) <= tolerance;
    case Comparison::AtMost: return observed <= expected + tolerance;
    case Comparison::AtLeast: return observed >= expected - tolerance;
  }
  return false;
}

namespace {

class Recorder {
 public:
  void add(int criterion, std::string name, double expected, double observed, double tol,
           Comparison cmp, std::string anchor) {
    rows_.push_back(VerificationResult{criterion, std::move(name), expected, observed, tol, cmp,
                                       evaluate(cmp, expected, observed, tol), std::move(anchor)});
  }
  std::vector<VerificationResult> take() { return std::move(rows_); }

 private:
  std::vector<VerificationResult> rows_;
};

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<BellDiagonalTriplet> valid_grid(double step) {
  const auto axis = grid_axis(step);
  std::vector<BellDiagonalTriplet> out;
  for (double c1 : axis)
    for (double c2 : axis)
      for (double c3 : axis) {
        const BellDiagonalTriplet t{c1, c2, c3};
        if (is_valid_triplet(t)) out.push_back(t);
      }
  return out;
}

double prr_projector(const BellDiagonalTriplet& t, const EnergyStructure& es) {
  return conditional_probabilities(twirl_pinching(bell_diagonal(t), es)).p_rr;
}

void agreement_checks(Recorder& r, const EnergyStructure& es) {
  const auto both = [&](const BellDiagonalTriplet& t, const std::string& label, double expected,
                        const std::string& anchor) {
    r.add(1, "prr(" + label + ") projector", expected, prr_projector(t, es), 1e-12, Comparison::Equal, anchor);
    r.add(1, "prr(" + label + ") closed form", expected, p_rr_closed_form(t), 1e-12, Comparison::Equal, anchor);
  };
  both({1, 0, 0}, "{1,0,0}", 0.75, "agreement for the c1+c2=1, c3=0 family");
  for (double c3 : {-0.5, 0.0, 0.5}) {
    const BellDiagonalTriplet t{0, 0, c3};
    const std::string label = "{0,0," + short_number(c3) + "}";
    both(t, label, 0.5, "no clock-system correlation");
    const auto table = conditional_probabilities(twirl_pinching(bell_diagonal(t), es));
    const double worst = std::max({std::abs(table.p_ll - 0.5), std::abs(table.p_rl - 0.5), std::abs(table.p_lr - 0.5)});
    r.add(1, "pll,prl,plr(" + label + ") deviation from 0.5", 0, worst, 1e-12, Comparison::Equal,
          "all four conditionals equal 0.5");
  }
  both({1, 1, -1}, "{1,1,-1}", 1.0, "perfect agreement for |psi+>");
  r.add(1, "prr({1,-1,1})", 0.5, prr_projector({1, -1, 1}, es), 1e-12, Comparison::Equal,
        "|phi+> gives the worst clock");
}

void internal_anchor_checks(Recorder& r, const EnergyStructure& es) {
  const BellDiagonalTriplet best{1, 1, -1};
  r.add(2, "internal({1,1,-1}) entropy route", 1, coherence_breakdown(bell_diagonal(best), es).internal, 1e-12,
        Comparison::Equal, "maximal internal coherence");
  r.add(2, "internal({1,1,-1}) closed form", 1, internal_coherence_closed_form(best), 1e-12, Comparison::Equal,
        "maximal internal coherence");

  double worst = 0;
  int points = 0;
  const auto axis = grid_axis(0.1);
  for (double c : axis) {
    for (double c3 : axis) {
      const BellDiagonalTriplet t{c, -c, c3};
      if (!is_valid_triplet(t)) continue;
      ++points;
      worst = std::max(worst, std::abs(internal_coherence_closed_form(t)));
      worst = std::max(worst, std::abs(coherence_breakdown(bell_diagonal(t), es).internal));
    }
  }
  r.add(2, "max |internal| on c1=-c2 (" + std::to_string(points) + " points)", 0, worst, 1e-12, Comparison::Equal,
        "internal coherence vanishes for the worst clocks");
}

void decomposition_checks(Recorder& r, const EnergyStructure& es) {
  const auto start = std::chrono::steady_clock::now();
  double identity = 0;
  double ordering = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto b = coherence_breakdown(random_density_matrix(4, seed), es);
    identity = std::max(identity, std::abs(b.total - b.internal - b.external));
    ordering = std::min(ordering, b.total - b.external);
  }
  const double elapsed = seconds_since(start);
  r.add(3, "max |C_r - C_int - A_G| over 1000 random states", 0, identity, 1e-9, Comparison::Equal,
        "total = internal + external");
  r.add(3, "min (C_r - A_G) over 1000 random states", 0, ordering, 1e-10, Comparison::AtLeast,
        "total coherence bounds the asymmetry");
  r.add(3, "runtime [s]", 2, elapsed, 0, Comparison::AtMost, "desk-scale runtime");
}

void closed_form_grid_checks(Recorder& r, const EnergyStructure& es) {
  const auto start = std::chrono::steady_clock::now();
  const auto grid = valid_grid(0.05);
  double worst = 0;
  for (const auto& t : grid) {
    const double entropy_route = coherence_breakdown(bell_diagonal(t), es).internal;
    worst = std::max(worst, std::abs(internal_coherence_closed_form(t) - entropy_route));
  }
  const double elapsed = seconds_since(start);
  r.add(4, "max |closed form - entropy route| (" + std::to_string(grid.size()) + " triplets)", 0, worst, 1e-9,
        Comparison::Equal, "analytic internal coherence of Bell-diagonal states");
  r.add(4, "runtime [s]", 10, elapsed, 0, Comparison::AtMost, "desk-scale runtime");
}

void monotonicity_checks(Recorder& r) {
  for (double c3 : {-1.0, -0.5, 0.0, 0.5}) {
    // x = c1 + c2 on the 0.05 grid, keyed by an integer multiple of the step.
    std::map<long, std::vector<SweepRecord>> by_x;
    for (auto& rec : sweep_family(c3, 0.05)) {
      const long key = std::lround((rec.triplet.c1 + rec.triplet.c2) / 0.05);
      if (key >= 0) by_x[key].push_back(rec);
    }
    int violations = 0;
    double spread = 0;
    const SweepRecord* prev = nullptr;
    for (const auto& [key, recs] : by_x) {
      for (const auto& rec : recs) {
        spread = std::max(spread, std::abs(rec.breakdown.internal - recs.front().breakdown.internal));
      }
      const SweepRecord& cur = recs.front();
      if (prev != nullptr) {
        if (cur.breakdown.internal < prev->breakdown.internal - 1e-10) ++violations;
        if (!(cur.clock.p_rr > prev->clock.p_rr)) ++violations;
      }
      prev = &cur;
    }
    const std::string label = "c3=" + short_number(c3);
    r.add(5, "internal depends on x only (" + label + ")", 0, spread, 1e-10, Comparison::Equal,
          "family structure at fixed c3");
    r.add(5, "ordering violations along x>=0 (" + label + ", " + std::to_string(by_x.size()) + " x-values)", 0,
          violations, 0, Comparison::Equal, "more internal coherence, better agreement");
  }
}

void concurrence_checks(Recorder& r, const EnergyStructure& es) {
  double worst = 0;
  const auto axis = grid_axis(0.05);
  for (double c1 : axis)
    for (double c2 : axis) {
      const BellDiagonalTriplet t{c1, c2, 0};
      if (!is_valid_triplet(t)) continue;
      const DensityMatrix rho = bell_diagonal(t);
      worst = std::max({worst, concurrence(rho), concurrence(twirl_pinching(rho, es))});
    }
  r.add(6, "max concurrence on c3=0 (initial and dephased)", 0, worst, 1e-10, Comparison::Equal,
        "clock works without entanglement");
  r.add(6, "concurrence({1,1,-1})", 1, concurrence(bell_diagonal({1, 1, -1})), 1e-10, Comparison::Equal,
        "|psi+> is maximally entangled");

  double eig_dev = 0;
  for (const auto& t : valid_grid(0.1)) {
    const Matrix d = twirl_pinching(bell_diagonal(t), es).matrix();
    Eigen::ComplexEigenSolver<Matrix> solver(d * spin_flip(d));
    std::vector<double> numeric;
    for (Eigen::Index i = 0; i < 4; ++i) numeric.push_back(solver.eigenvalues()(i).real());
    auto closed = concurrence_bd_eigenvalues(t);
    std::sort(numeric.begin(), numeric.end());
    std::sort(closed.begin(), closed.end());
    for (std::size_t i = 0; i < 4; ++i) eig_dev = std::max(eig_dev, std::abs(numeric[i] - closed[i]));
  }
  r.add(6, "max |closed-form lambda_i - eig(rho rho~)|", 0, eig_dev, 1e-10, Comparison::Equal,
        "eigenvalues of rho rho~ for the dephased state");
}

void twirl_checks(Recorder& r, const EnergyStructure& es) {
  double worst = 0;
  for (std::uint64_t seed = 2001; seed <= 2100; ++seed) {
    const DensityMatrix rho = random_density_matrix(4, seed);
    worst = std::max(worst, max_abs(twirl_quadrature(rho, es, 1024).matrix() - twirl_pinching(rho, es).matrix()));
  }
  r.add(7, "max |Simpson(1024) - pinching| over 100 states", 0, worst, 1e-8, Comparison::Equal,
        "time average equals block pinching");
}

void work_checks(Recorder& r, const EnergyStructure& es) {
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const DensityMatrix rho = random_density_matrix(4, seed);
    const auto work = work_from_internal_coherence(rho, es, 1.0);
    worst = std::max(worst, std::abs(work.work_bits - coherence_breakdown(rho, es).internal));
  }
  r.add(8, "max |W/(kT ln2) - C_int| over 1000 states", 0, worst, 1e-9, Comparison::Equal,
        "work equals kT times internal coherence");

  const auto demo = work_locking_demo(1.0);
  r.add(8, "work-locking matrix deviation", 0, max_abs(demo.product_twirled - demo.expected_product_twirled), 1e-12,
        Comparison::Equal, "dephased product of two |+> copies");
  r.add(8, "single-copy work", 0, demo.single_copy.work, 1e-12, Comparison::Equal, "work is locked for one copy");
  r.add(8, "two-copy work [bits]", 0.5, demo.two_copy.work_bits, 1e-9, Comparison::Equal,
        "an ancilla copy unlocks work");
}

void incoherent_minimum_checks(Recorder& r, const EnergyStructure& es) {
  double gap = std::numeric_limits<double>::infinity();
  double at_dephased = 0;
  for (std::uint64_t seed = 3001; seed <= 3020; ++seed) {
    const DensityMatrix rho = random_density_matrix(4, seed);
    const DensityMatrix drho = twirl_pinching(rho, es);
    const double internal = coherence_breakdown(rho, es).internal;
    gap = std::min(gap, min_over_incoherent(drho, kDefaultIncoherentTrials, seed) - internal);
    at_dephased = std::max(at_dephased, std::abs(relative_entropy(drho, full_dephase(rho)) - internal));
  }
  r.add(9, "min over samples of S(D||tau) - C_int", 0, gap, 1e-9, Comparison::AtLeast,
        "no incoherent state is closer than the dephased one");
  r.add(9, "max |S(D||Delta) - C_int|", 0, at_dephased, 1e-9, Comparison::Equal, "minimum attained at Delta(rho)");
}

void history_checks(Recorder& r) {
  constexpr Eigen::Index kClock = 8;
  constexpr double kBeta = 1.0;
  const Matrix hs = tick_qubit_hamiltonian(kClock, kBeta);
  const auto u = build_history_universe(kClock, kBeta, hs, ket_plus());
  r.add(10, "zero-energy residual", 0, zero_energy_residual(u), 1e-9, Comparison::Equal, "H|Psi> = 0");

  double min_fid = 1;
  for (Eigen::Index m = 0; m < kClock; ++m) {
    const Vector direct = unitary_evolution(hs, static_cast<double>(m) * kBeta) * ket_plus();
    min_fid = std::min(min_fid, fidelity(conditional_system_state(u, m).normalized, direct));
  }
  r.add(10, "min conditional fidelity", 1, min_fid, 1e-9, Comparison::AtLeast, "conditional Schrodinger evolution");

  const DensityMatrix global = pure_state(u.psi);
  const double twirl_dev = max_abs(twirl_pinching(global, total_energy_structure(u)).matrix() - global.matrix());
  r.add(10, "twirl invariance of |Psi><Psi|", 0, twirl_dev, 1e-9, Comparison::Equal,
        "stationary global state");
}

}  // namespace

std::vector<VerificationResult> run_verification() {
  const EnergyStructure es = zeeman_hamiltonian(1.0);
  Recorder r;
  agreement_checks(r, es);
  internal_anchor_checks(r, es);
  decomposition_checks(r, es);
  closed_form_grid_checks(r, es);
  monotonicity_checks(r);
  concurrence_checks(r, es);
  twirl_checks(r, es);
  work_checks(r, es);
  incoherent_minimum_checks(r, es);
  history_checks(r);
  return r.take();
}

}  // namespace paw
