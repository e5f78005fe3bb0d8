#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "breakloops/pipeline.hpp"

namespace breakloops {

/// Bumped whenever a key is renamed or removed.
inline constexpr int kReportFormatVersion = 1;

enum class ReportFormat { text, json };

/// Human-readable remarks for one family: placeholder or founder breakers,
/// breakers cloned more than once.
std::vector<std::string> break_notes(const FamilyResult& r);

void write_break_report(std::ostream& out, const std::vector<FamilyResult>& results,
                        const std::vector<PersonId>& dropped_ids, ReportFormat format);

void write_check_report(std::ostream& out, const std::vector<FamilyDiagnostics>& families,
                        const std::vector<PersonId>& dropped_ids, ReportFormat format);

void write_diagnostics_report(std::ostream& out, const std::vector<FamilyDiagnostics>& families,
                              const std::vector<PersonId>& dropped_ids, ReportFormat format);

}  // namespace breakloops
