#include "paw/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "paw/channels.hpp"

namespace paw {

std::string format_number(double value) {
  if (value == 0) value = 0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, value);
  return buf;
}

namespace {

// Rounds through the 12-digit text form so JSON and CSV carry identical values.
double rounded(double value) { return std::stod(format_number(value)); }

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    const double fields[] = {r.triplet.c1,       r.triplet.c2,          r.triplet.c3,         r.clock.p_rr,
                             r.clock.p_ll,       r.clock.p_rl,          r.clock.p_lr,         r.breakdown.total,
                             r.breakdown.external, r.breakdown.internal, r.concurrence_initial, r.concurrence_dephased,
                             r.work_bits};
    bool first = true;
    for (double f : fields) {
      if (!first) out << ',';
      out << format_number(f);
      first = false;
    }
    out << '\n';
  }
}

nlohmann::json to_json(const SweepRecord& r) {
  return nlohmann::json{
      {"c1", rounded(r.triplet.c1)},
      {"c2", rounded(r.triplet.c2)},
      {"c3", rounded(r.triplet.c3)},
      {"p_rr", rounded(r.clock.p_rr)},
      {"p_ll", rounded(r.clock.p_ll)},
      {"p_rl", rounded(r.clock.p_rl)},
      {"p_lr", rounded(r.clock.p_lr)},
      {"C_total", rounded(r.breakdown.total)},
      {"C_external", rounded(r.breakdown.external)},
      {"C_internal", rounded(r.breakdown.internal)},
      {"concurrence_initial", rounded(r.concurrence_initial)},
      {"concurrence_dephased", rounded(r.concurrence_dephased)},
      {"work_bits", rounded(r.work_bits)},
  };
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(rounded(m(i, j).real()));
      im_row.push_back(rounded(m(i, j).imag()));
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return nlohmann::json{{"real", std::move(re)}, {"imag", std::move(im)}};
}

nlohmann::json sweep_json(const std::vector<SweepRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

nlohmann::json state_report(const BellDiagonalTriplet& t) {
  const SweepRecord record = evaluate_triplet(t);
  const DensityMatrix rho = bell_diagonal(t);
  nlohmann::json out = to_json(record);
  out["rho"] = to_json(rho.matrix());
  out["rho_dephased"] = to_json(twirl_pinching(rho, zeeman_hamiltonian(1.0)).matrix());
  return out;
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double re = std::abs(m(i, j).real()) < 1e-15 ? 0.0 : m(i, j).real();
      out << std::setw(8) << format_number(re);
      if (std::abs(m(i, j).imag()) >= 1e-15) out << (m(i, j).imag() < 0 ? "-" : "+") << format_number(std::abs(m(i, j).imag())) << 'i';
      if (j + 1 < m.cols()) out << ' ';
    }
    out << " ]\n";
  }
}

void print_verification(std::ostream& out, const std::vector<VerificationResult>& rows) {
  std::size_t passed = 0;
  for (const auto& r : rows) {
    const char* op = r.comparison == Comparison::Equal ? "==" : (r.comparison == Comparison::AtMost ? "<=" : ">=");
    out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.criterion << "] " << r.name << ": observed "
        << format_number(r.observed) << ", expected " << op << ' ' << format_number(r.expected) << " (tol "
        << format_number(r.tolerance) << ")  -- " << r.anchor << '\n';
    if (r.passed) ++passed;
  }
  out << passed << '/' << rows.size() << " checks passed\n";
}

void print_work_locking(std::ostream& out, const WorkLockingReport& report) {
  out << "kT = " << format_number(report.two_copy.kT) << '\n';
  out << "single copy rho1:\n";
  print_matrix(out, report.single_copy_state);
  out << "single-copy work W(rho1) = " << format_number(report.single_copy.work) << " ("
      << format_number(report.single_copy.work_bits) << " bits)\n";
  out << "max |D(rho1) - Delta(rho1)| = " << format_number(report.single_copy_twirl_gap) << '\n';
  out << "D(rho1 x rho2):\n";
  print_matrix(out, report.product_twirled);
  out << "max |D(rho1 x rho2) - Delta(rho1) x Delta(rho2)| = " << format_number(report.unlocking_gap) << '\n';
  out << "two-copy work W(rho1 x rho2) = " << format_number(report.two_copy.work) << " ("
      << format_number(report.two_copy.work_bits) << " bits)\n";
}

}  // namespace paw
