// Acceptance suite: criteria 1–11, one PASS/FAIL line each.
// Library results are compared against oracles built directly on Eigen.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "paw/clock.hpp"
#include "paw/history.hpp"
#include "paw/measures.hpp"
#include "paw/thermo.hpp"

using namespace paw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- oracles ---------------------------------------------------------------

double entropy_bits(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  double s = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 0) s -= p * std::log2(p);
  }
  return s;
}

Matrix dephase(const Matrix& m) { return Matrix(m.diagonal().asDiagonal()); }

// Energy blocks of diag(-2, 0, 0, 2) are {0}, {1, 2}, {3}.
Matrix pinch_zeeman(const Matrix& m) {
  Matrix out = dephase(m);
  out(1, 2) = m(1, 2);
  out(2, 1) = m(2, 1);
  return out;
}

Matrix x_form(double c1, double c2, double c3) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = (1 + c3) / 4;
  m(1, 1) = m(2, 2) = (1 - c3) / 4;
  m(0, 3) = m(3, 0) = (c1 - c2) / 4;
  m(1, 2) = m(2, 1) = (c1 + c2) / 4;
  return m;
}

bool valid(double c1, double c2, double c3) {
  return std::abs(c1 - c2) <= 1 + c3 + 1e-12 && std::abs(c1 + c2) <= 1 - c3 + 1e-12;
}

std::vector<double> axis(double step) {
  std::vector<double> out;
  const int n = static_cast<int>(std::floor(2 / step + 1e-9));
  for (int i = 0; i <= n; ++i) out.push_back(std::round((-1 + i * step) * 1e12) / 1e12);
  return out;
}

// p(system +, clock +) / p(clock +) with both qubits read in the σx basis.
double prr_oracle(const Matrix& rho) {
  Vector plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  Vector minus(2);
  minus << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  const auto prob = [&](const Vector& a, const Vector& b) {
    Vector v(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) v(2 * i + j) = a(i) * b(j);
    return v.dot(rho * v).real();
  };
  const double rr = prob(plus, plus);
  return rr / (rr + prob(minus, plus));
}

// X-state concurrence: 2 max(0, |ρ03| − √(ρ11ρ22), |ρ12| − √(ρ00ρ33)).
double x_state_concurrence(const Matrix& m) {
  const double a = std::abs(m(0, 3)) - std::sqrt(m(1, 1).real() * m(2, 2).real());
  const double b = std::abs(m(1, 2)) - std::sqrt(m(0, 0).real() * m(3, 3).real());
  return 2 * std::max({0.0, a, b});
}

// ---- reporting -------------------------------------------------------------

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what, double value) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << " = " << value << "]";
    }
  }
};

int failures = 0;

void report(int criterion, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << title << o.detail.str()
            << std::endl;
}

// ---- criteria --------------------------------------------------------------

const EnergyStructure& zeeman() {
  static const EnergyStructure es = zeeman_hamiltonian(1.0);
  return es;
}

void criterion_1(Outcome& o) {
  const std::vector<std::pair<BellDiagonalTriplet, double>> cases = {
      {{1, 0, 0}, 0.75}, {{0, 0, -0.5}, 0.5}, {{0, 0, 0}, 0.5}, {{0, 0, 0.5}, 0.5}, {{1, 1, -1}, 1.0}};
  double worst = 0;
  for (const auto& [t, expected] : cases) {
    const double projector = conditional_probabilities(twirl_pinching(bell_diagonal(t), zeeman())).p_rr;
    const double oracle = prr_oracle(pinch_zeeman(x_form(t.c1, t.c2, t.c3)));
    worst = std::max({worst, std::abs(projector - expected), std::abs(p_rr_closed_form(t) - expected),
                      std::abs(oracle - expected)});
  }
  o.require(worst <= 1e-12, "max deviation", worst);
  o.detail << " max deviation " << worst;
}

void criterion_2(Outcome& o) {
  const double best = coherence_breakdown(bell_diagonal({1, 1, -1}), zeeman()).internal;
  o.require(std::abs(best - 1) <= 1e-12, "C_int({1,1,-1}) - 1", best - 1);
  double worst = 0;
  int points = 0;
  for (double c : axis(0.1))
    for (double c3 : axis(0.1)) {
      if (!valid(c, -c, c3)) continue;
      ++points;
      const BellDiagonalTriplet t{c, -c, c3};
      worst = std::max({worst, std::abs(coherence_breakdown(bell_diagonal(t), zeeman()).internal),
                        std::abs(internal_coherence_closed_form(t))});
    }
  o.require(worst <= 1e-12, "max |C_int| on c1=-c2", worst);
  o.detail << " C_int({1,1,-1}) = " << best << ", max |C_int| on c1=-c2 = " << worst << " (" << points
           << " points)";
}

void criterion_3(Outcome& o) {
  std::vector<DensityMatrix> states;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) states.push_back(random_density_matrix(4, seed));
  const auto start = Clock::now();
  std::vector<CoherenceBreakdown> lib;
  for (const auto& rho : states) lib.push_back(coherence_breakdown(rho, zeeman()));
  const double elapsed = seconds_since(start);

  double identity = 0;
  double ordering = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Matrix& m = states[i].matrix();
    const double s = entropy_bits(m);
    const double c_r = entropy_bits(dephase(m)) - s;
    const double a_g = entropy_bits(pinch_zeeman(m)) - s;
    identity = std::max(identity, std::abs(c_r - lib[i].internal - a_g));
    ordering = std::min(ordering, c_r - a_g);
  }
  o.require(identity <= 1e-9, "max |C_r - C_int - A_G|", identity);
  o.require(ordering >= -1e-10, "min (C_r - A_G)", ordering);
  o.require(elapsed < 2, "runtime [s]", elapsed);
  o.detail << " identity " << identity << ", min(C_r - A_G) " << ordering << ", " << elapsed << " s";
}

void criterion_4(Outcome& o) {
  const auto ax = axis(0.05);
  const auto start = Clock::now();
  double worst = 0;
  int points = 0;
  for (double c1 : ax)
    for (double c2 : ax)
      for (double c3 : ax) {
        if (!valid(c1, c2, c3)) continue;
        ++points;
        const BellDiagonalTriplet t{c1, c2, c3};
        const double route = coherence_breakdown(bell_diagonal(t), zeeman()).internal;
        worst = std::max(worst, std::abs(internal_coherence_closed_form(t) - route));
      }
  const double elapsed = seconds_since(start);
  // Independent check of the closed form on a coarser grid.
  double oracle_dev = 0;
  for (double c1 : axis(0.1))
    for (double c2 : axis(0.1))
      for (double c3 : axis(0.1)) {
        if (!valid(c1, c2, c3)) continue;
        const Matrix m = x_form(c1, c2, c3);
        const double oracle = entropy_bits(dephase(m)) - entropy_bits(pinch_zeeman(m));
        oracle_dev = std::max(oracle_dev, std::abs(internal_coherence_closed_form({c1, c2, c3}) - oracle));
      }
  o.require(worst <= 1e-9, "max |closed - entropy route|", worst);
  o.require(oracle_dev <= 1e-9, "max |closed - oracle|", oracle_dev);
  o.require(elapsed < 10, "runtime [s]", elapsed);
  o.detail << " " << points << " triplets, max deviation " << worst << ", " << elapsed << " s";
}

void criterion_5(Outcome& o) {
  int families = 0;
  for (double c3 : {-1.0, -0.5, 0.0, 0.5}) {
    std::map<long, std::pair<double, double>> by_x;  // x/step -> (C_int, p_rr)
    for (const auto& r : sweep_family(c3, 0.05)) {
      const long key = std::lround((r.triplet.c1 + r.triplet.c2) / 0.05);
      if (key < 0) continue;
      // p_rr against the projector oracle.
      const double oracle = prr_oracle(pinch_zeeman(x_form(r.triplet.c1, r.triplet.c2, c3)));
      o.require(std::abs(oracle - r.clock.p_rr) <= 1e-12, "p_rr vs oracle", oracle - r.clock.p_rr);
      by_x.emplace(key, std::make_pair(r.breakdown.internal, r.clock.p_rr));
    }
    const std::pair<double, double>* prev = nullptr;
    for (const auto& [key, value] : by_x) {
      if (prev != nullptr) {
        o.require(value.first >= prev->first - 1e-10, "C_int step", value.first - prev->first);
        o.require(value.second > prev->second, "p_rr step", value.second - prev->second);
      }
      prev = &value;
    }
    o.require(by_x.size() >= 2, "x values", static_cast<double>(by_x.size()));
    ++families;
  }
  o.detail << " " << families << " families ordered along x >= 0";
}

void criterion_6(Outcome& o) {
  double worst = 0;
  double oracle_worst = 0;
  for (double c1 : axis(0.05))
    for (double c2 : axis(0.05)) {
      if (!valid(c1, c2, 0)) continue;
      const DensityMatrix rho = bell_diagonal({c1, c2, 0});
      const DensityMatrix d = twirl_pinching(rho, zeeman());
      worst = std::max({worst, concurrence(rho), concurrence(d)});
      oracle_worst = std::max({oracle_worst, x_state_concurrence(rho.matrix()), x_state_concurrence(d.matrix())});
    }
  o.require(worst <= 1e-10, "max concurrence (c3=0)", worst);
  o.require(oracle_worst <= 1e-10, "max oracle concurrence (c3=0)", oracle_worst);

  const double c = concurrence(bell_diagonal({1, 1, -1}));
  o.require(std::abs(c - 1) <= 1e-10, "concurrence({1,1,-1}) - 1", c - 1);
  o.require(std::abs(x_state_concurrence(x_form(1, 1, -1)) - 1) <= 1e-12, "oracle concurrence - 1",
            x_state_concurrence(x_form(1, 1, -1)) - 1);

  // Library concurrence against the X-state formula, and closed-form λ against ρρ̃.
  double agree = 0;
  double eig_dev = 0;
  for (double c1 : axis(0.1))
    for (double c2 : axis(0.1))
      for (double c3 : axis(0.1)) {
        if (!valid(c1, c2, c3)) continue;
        const Matrix d = pinch_zeeman(x_form(c1, c2, c3));
        agree = std::max({agree, std::abs(concurrence(bell_diagonal({c1, c2, c3})) -
                                          x_state_concurrence(x_form(c1, c2, c3))),
                          std::abs(concurrence(DensityMatrix(d)) - x_state_concurrence(d))});
        const Matrix yy = kron(pauli_y(), pauli_y());
        Eigen::ComplexEigenSolver<Matrix> solver(d * (yy * d.conjugate() * yy), false);
        std::vector<double> numeric;
        for (Eigen::Index i = 0; i < 4; ++i) numeric.push_back(solver.eigenvalues()(i).real());
        auto closed = concurrence_bd_eigenvalues({c1, c2, c3});
        std::sort(numeric.begin(), numeric.end());
        std::sort(closed.begin(), closed.end());
        for (std::size_t i = 0; i < 4; ++i) eig_dev = std::max(eig_dev, std::abs(numeric[i] - closed[i]));
      }
  o.require(agree <= 1e-10, "max |concurrence - X-state oracle|", agree);
  o.require(eig_dev <= 1e-10, "max |lambda closed - numeric|", eig_dev);
  o.detail << " max C(c3=0) " << worst << ", C({1,1,-1}) " << c << ", lambda deviation " << eig_dev;
}

void criterion_7(Outcome& o) {
  // Simpson over [0, π] with e^{-iHt} = diag(e^{2it}, 1, 1, e^{-2it}).
  const int steps = 1024;
  const double period = std::numbers::pi;
  const double energies[4] = {-2, 0, 0, 2};
  double worst = 0;
  for (std::uint64_t seed = 2001; seed <= 2100; ++seed) {
    const DensityMatrix rho = random_density_matrix(4, seed);
    Matrix acc = Matrix::Zero(4, 4);
    for (int k = 0; k <= steps; ++k) {
      const double t = period * k / steps;
      const double w = (k == 0 || k == steps) ? 1 : (k % 2 == 1 ? 4 : 2);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          acc(i, j) += w * std::exp(Complex(0, -(energies[i] - energies[j]) * t)) * rho.matrix()(i, j);
    }
    acc *= (period / steps / 3) / period;
    const Matrix lib_quad = twirl_quadrature(rho, zeeman(), steps).matrix();
    const Matrix lib_pinch = twirl_pinching(rho, zeeman()).matrix();
    worst = std::max({worst, max_abs(lib_quad - lib_pinch), max_abs(acc - lib_pinch),
                      max_abs(pinch_zeeman(rho.matrix()) - lib_pinch)});
  }
  o.require(worst <= 1e-8, "max |quadrature - pinching|", worst);
  o.detail << " max deviation " << worst << " over 100 states";
}

void criterion_8(Outcome& o) {
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const DensityMatrix rho = random_density_matrix(4, seed);
    const auto work = work_from_internal_coherence(rho, zeeman(), 1.0);
    const double c_int = entropy_bits(dephase(rho.matrix())) - entropy_bits(pinch_zeeman(rho.matrix()));
    worst = std::max({worst, std::abs(work.work / std::numbers::ln2 - c_int), std::abs(work.work_bits - c_int)});
  }
  o.require(worst <= 1e-9, "max |W/(kT ln2) - C_int|", worst);

  const auto demo = work_locking_demo(1.0);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = expected(1, 1) = expected(2, 2) = 0.25;
  expected(1, 2) = expected(2, 1) = 0.25;
  const double matrix_dev = max_abs(demo.product_twirled - expected);
  o.require(matrix_dev <= 1e-12, "work-locking matrix deviation", matrix_dev);
  o.require(std::abs(demo.single_copy.work) <= 1e-12, "single-copy work", demo.single_copy.work);
  o.require(std::abs(demo.two_copy.work_bits - 0.5) <= 1e-9, "two-copy work bits - 0.5",
            demo.two_copy.work_bits - 0.5);
  o.detail << " identity " << worst << ", matrix deviation " << matrix_dev << ", two-copy "
           << demo.two_copy.work_bits << " bits";
}

void criterion_9(Outcome& o) {
  double gap = std::numeric_limits<double>::infinity();
  double at_dephased = 0;
  double lib_gap = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(9);
  std::exponential_distribution<double> exponential(1.0);
  for (std::uint64_t seed = 3001; seed <= 3020; ++seed) {
    const DensityMatrix rho = random_density_matrix(4, seed);
    const Matrix d = pinch_zeeman(rho.matrix());
    const double s_d = entropy_bits(d);
    const double c_int = coherence_breakdown(rho, zeeman()).internal;
    const Eigen::VectorXd p = d.diagonal().real();
    // For diagonal τ = diag(q): S(D||τ) = −S(D) − Σ p_i log₂ q_i.
    const auto divergence = [&](const Eigen::VectorXd& q) {
      double cross = 0;
      for (int i = 0; i < 4; ++i) cross += p(i) * std::log2(q(i));
      return -s_d - cross;
    };
    for (int trial = 0; trial < 10000; ++trial) {
      Eigen::VectorXd q(4);
      for (int i = 0; i < 4; ++i) q(i) = exponential(rng);
      q /= q.sum();
      gap = std::min(gap, divergence(q) - c_int);
    }
    at_dephased = std::max({at_dephased, std::abs(divergence(p) - c_int),
                            std::abs(relative_entropy(DensityMatrix(d), full_dephase(rho)) - c_int)});
    lib_gap = std::min(lib_gap, min_over_incoherent(DensityMatrix(d), kDefaultIncoherentTrials, seed) - c_int);
  }
  o.require(gap >= -1e-9, "min S(D||tau) - C_int", gap);
  o.require(lib_gap >= -1e-9, "library min - C_int", lib_gap);
  o.require(std::abs(lib_gap) <= 1e-9, "library minimum attained", lib_gap);
  o.require(at_dephased <= 1e-9, "max |S(D||Delta) - C_int|", at_dephased);
  o.detail << " min gap " << gap << ", equality deviation " << at_dephased;
}

void criterion_10(Outcome& o) {
  const Eigen::Index n = 8;
  const double beta = 1.0;
  const Matrix hs = tick_qubit_hamiltonian(n, beta);
  const Vector psi0 = ket_plus();
  const auto u = build_history_universe(n, beta, hs, psi0);

  Matrix hc = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) hc(k, k) = 2 * std::numbers::pi * static_cast<double>(k) / (n * beta);
  const Matrix total = kron(hc, identity(2)) + kron(identity(n), hs);
  const double residual = (total * u.psi).norm();
  o.require(residual <= 1e-9, "zero-energy residual", residual);
  o.require(zero_energy_residual(u) <= 1e-9, "library residual", zero_energy_residual(u));

  double min_fid = 1;
  for (Eigen::Index m = 0; m < n; ++m) {
    Vector tm(n);
    for (Eigen::Index k = 0; k < n; ++k)
      tm(k) = std::exp(Complex(0, -2 * std::numbers::pi * static_cast<double>(k * m) / static_cast<double>(n))) /
              std::sqrt(static_cast<double>(n));
    Vector slice = Vector::Zero(2);
    for (Eigen::Index k = 0; k < n; ++k) slice += std::conj(tm(k)) * u.psi.segment(2 * k, 2);
    slice.normalize();
    // e^{-iH_s t} for diagonal H_s.
    Vector direct(2);
    for (int i = 0; i < 2; ++i) direct(i) = std::exp(Complex(0, -hs(i, i).real() * static_cast<double>(m) * beta)) * psi0(i);
    min_fid = std::min({min_fid, std::norm(direct.dot(slice)),
                        fidelity(conditional_system_state(u, m).normalized, direct)});
  }
  o.require(min_fid >= 1 - 1e-9, "min fidelity", min_fid);

  const DensityMatrix global = pure_state(u.psi);
  const double twirl_dev = max_abs(twirl_pinching(global, total_energy_structure(u)).matrix() - global.matrix());
  o.require(twirl_dev <= 1e-9, "twirl deviation", twirl_dev);
  o.detail << " residual " << residual << ", min fidelity " << min_fid << ", twirl deviation " << twirl_dev;
}

void criterion_11(Outcome& o) {
  const auto start = Clock::now();
  const int status = std::system((std::string(PAW_CLI_PATH) + " verify > /dev/null").c_str());
  const double elapsed = seconds_since(start);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.require(code == 0, "exit code", code);
  o.require(elapsed < 60, "runtime [s]", elapsed);
  o.detail << " exit " << code << " in " << elapsed << " s";
}

}  // namespace

int main() {
  report(1, "agreement probabilities", criterion_1);
  report(2, "internal coherence anchors", criterion_2);
  report(3, "total = internal + external on random states", criterion_3);
  report(4, "closed-form internal coherence on the valid grid", criterion_4);
  report(5, "internal coherence and agreement ordered along x", criterion_5);
  report(6, "concurrence", criterion_6);
  report(7, "twirl quadrature equals pinching", criterion_7);
  report(8, "work from internal coherence and work locking", criterion_8);
  report(9, "dephased state minimizes divergence to incoherent states", criterion_9);
  report(10, "history state", criterion_10);
  report(11, "verify subcommand", criterion_11);
  std::cout << (11 - failures) << "/11 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
