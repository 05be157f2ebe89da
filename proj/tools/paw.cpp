// Command-line front end: verify, sweep, state, work-locking, history.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paw/clock.hpp"
#include "paw/errors.hpp"
#include "paw/history.hpp"
#include "paw/report.hpp"
#include "paw/thermo.hpp"
#include "paw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalid = 2;

int cmd_verify() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = paw::run_verification();
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  paw::print_verification(std::cout, rows);
  std::cout << "elapsed " << paw::format_number(elapsed) << " s\n";
  for (const auto& r : rows) {
    if (!r.passed) return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_sweep(double c3, double step, const std::string& out_path, const std::string& format) {
  const auto records = paw::sweep_family(c3, step);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitInvalid;
    }
    out = &file;
  }
  if (format == "json") {
    *out << paw::sweep_json(records).dump(2) << '\n';
  } else {
    paw::write_sweep_csv(*out, records);
  }
  out->flush();
  if (!*out) {
    std::cerr << "error: failed writing sweep output\n";
    return kExitInvalid;
  }
  return kExitOk;
}

int cmd_state(double c1, double c2, double c3) {
  std::cout << paw::state_report({c1, c2, c3}).dump(2) << '\n';
  return kExitOk;
}

int cmd_work_locking(double kT) {
  paw::print_work_locking(std::cout, paw::work_locking_demo(kT));
  return kExitOk;
}

int cmd_history(int dim, double beta) {
  const paw::Matrix hs = paw::tick_qubit_hamiltonian(dim, beta);
  const paw::Vector psi0 = paw::ket_plus();
  const auto u = paw::build_history_universe(dim, beta, hs, psi0);
  std::cout << "clock dim " << dim << ", beta " << paw::format_number(beta)
            << ", system H = diag(0, " << paw::format_number(hs(1, 1).real()) << "), psi0 = |+>\n";
  std::cout << "zero-energy residual |H Psi| = " << paw::format_number(paw::zero_energy_residual(u)) << '\n';
  std::cout << "tick  weight          fidelity\n";
  for (Eigen::Index m = 0; m < dim; ++m) {
    const auto cond = paw::conditional_system_state(u, m);
    const paw::Vector direct = paw::unitary_evolution(hs, static_cast<double>(m) * beta) * psi0;
    std::cout << std::setw(4) << m << "  " << std::setw(14) << std::left << paw::format_number(cond.weight)
              << std::right << "  " << paw::format_number(paw::fidelity(cond.normalized, direct)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Internal coherence and Page-Wootters clock analysis"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run every reproduction check; exit 1 if any fails");

  double sweep_c3 = 0;
  double sweep_step = 0.05;
  std::string sweep_out;
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Tabulate a fixed-c3 family of Bell-diagonal states");
  sweep->add_option("--c3", sweep_c3, "Fixed correlation c3")->required()->check(CLI::Range(-1.0, 1.0));
  sweep->add_option("--step", sweep_step, "Grid step for c1 and c2")->check(CLI::Range(1e-6, 2.0));
  sweep->add_option("--out", sweep_out, "Output path (default: standard output)");
  sweep->add_option("--format", sweep_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  double c1 = 0, c2 = 0, c3 = 0;
  auto* state = app.add_subcommand("state", "JSON report for one Bell-diagonal triplet");
  state->add_option("c1", c1)->required();
  state->add_option("c2", c2)->required();
  state->add_option("c3", c3)->required();

  double kT = 1.0;
  auto* locking = app.add_subcommand("work-locking", "Single- versus two-copy work from |+> states");
  locking->add_option("--kT", kT, "Bath temperature times Boltzmann constant")->check(CLI::PositiveNumber);

  int dim = 8;
  double beta = 1.0;
  auto* history = app.add_subcommand("history", "Clock-conditioned evolution of a history state");
  history->add_option("--dim", dim, "Clock dimension")->check(CLI::Range(2, 1 << 12));
  history->add_option("--beta", beta, "Time per clock tick")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (verify->parsed()) return cmd_verify();
    if (sweep->parsed()) return cmd_sweep(sweep_c3, sweep_step, sweep_out, sweep_format);
    if (state->parsed()) return cmd_state(c1, c2, c3);
    if (locking->parsed()) return cmd_work_locking(kT);
    if (history->parsed()) return cmd_history(dim, beta);
  } catch (const paw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
