#pragma once

// Report serialization.  The JSON-lines schema (one object per report):
//
//   id        string
//   status    "pass" | "fail"
//   method    string, e.g. "induction-link verified"
//   order     integer, smallest order an identity was compared to (0: none)
//   count     integer, values of n scanned (0: none)
//   checks    integer, sub-checks executed
//   mismatch  null | {step, index, coefficient_index?, lhs, rhs, error?}
//   millis    number

#include <string>
#include <vector>

#include <json.hpp>

#include "qseries/verify.hpp"

namespace qseries::verify {

nlohmann::json to_json(const VerificationReport& report);

/// Single-line JSON rendering of to_json().
std::string to_json_line(const VerificationReport& report);

std::string csv_header();
std::string to_csv_row(const VerificationReport& report);

std::string table_header();
std::string to_table_row(const VerificationReport& report);

}  // namespace qseries::verify
