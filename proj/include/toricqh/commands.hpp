#pragma once

// The toric-qh command dispatcher. Every command builds a JSON report; the
// text format is rendered from that report. See docs/report-schema.md.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace toricqh {

inline constexpr int kReportSchemaVersion = 1;

/// args excludes the program name. Returns the process exit code:
/// 0 success, 1 mathematical rejection or failed verdict, 2 usage/input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented "key: value" rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace toricqh
