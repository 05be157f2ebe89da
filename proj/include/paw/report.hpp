#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "paw/clock.hpp"
#include "paw/thermo.hpp"
#include "paw/verify.hpp"

namespace paw {

inline constexpr int kSignificantDigits = 12;

/// %.12g rendering used by every serialized float.
std::string format_number(double value);

inline constexpr const char* kSweepCsvHeader =
    "c1,c2,c3,p_rr,p_ll,p_rl,p_lr,C_total,C_external,C_internal,concurrence_initial,concurrence_dephased,work_bits";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

nlohmann::json to_json(const SweepRecord& record);
nlohmann::json to_json(const Matrix& m);  // {"real": [[...]], "imag": [[...]]}

/// Sweep records as a JSON array of objects keyed like the CSV header.
nlohmann::json sweep_json(const std::vector<SweepRecord>& records);

/// Every SweepRecord quantity plus the X-form and twirled matrices.
nlohmann::json state_report(const BellDiagonalTriplet& t);

void print_verification(std::ostream& out, const std::vector<VerificationResult>& rows);
void print_work_locking(std::ostream& out, const WorkLockingReport& report);
void print_matrix(std::ostream& out, const Matrix& m);

}  // namespace paw
