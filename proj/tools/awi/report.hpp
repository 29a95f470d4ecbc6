#pragma once

#include <string>

#include "awi/suites.hpp"

namespace awi::cli {

// JSON rendering of a validation suite run.
std::string suite_report_json(const SuiteReport& report, double budget);

// Human-oriented one-line-per-property text summary.
std::string suite_report_text(const SuiteReport& report);

}  // namespace awi::cli
