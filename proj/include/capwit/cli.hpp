// Report rendering (aligned text and flat JSON), the per-report check
// list, and the command entry points the capwit binary dispatches to.
// Exit codes: 0 all checks pass, 1 a verified claim failed, 2 invalid
// input or enumeration cap exceeded.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "capwit/capability.hpp"

namespace capwit {

enum class OutputFormat { text, json };

struct CheckResult {
  std::string name;
  bool pass = false;
};

/// The named checks behind all_checks_pass, in report order.
std::vector<CheckResult> report_checks(const WitnessReport& report);

/// Flat JSON object whose keys are exactly the WitnessReport fields.
/// Integers are JSON numbers up to 2^53 and decimal strings beyond;
/// int_strings forces decimal strings for every integer field.
nlohmann::json report_to_json(const WitnessReport& report,
                              bool int_strings = false);

/// Inverse of report_to_json (accepts both encodings).
WitnessReport report_from_json(const nlohmann::json& j);

void render_report_text(const WitnessReport& report, std::ostream& out);

int run_witness(Int p, Int r, OutputFormat format, bool int_strings,
                std::uint64_t cap, std::ostream& out, std::ostream& err);
int run_dihedral(Int c, OutputFormat format, bool int_strings,
                 std::uint64_t cap, std::ostream& out, std::ostream& err);
int run_scan(Int p, Int r_max, OutputFormat format, bool int_strings,
             std::uint64_t cap, std::ostream& out, std::ostream& err);
int run_lemma(Int p, Int r, OutputFormat format, std::uint64_t cap,
              std::ostream& out, std::ostream& err);
int run_presentation(Int p, Int r, std::ostream& out, std::ostream& err);

}  // namespace capwit
