#include "breakloops/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace breakloops {

namespace {

using nlohmann::json;

json counts_json(const PedigreeCounts& c) {
    return {{"n_i", c.individuals}, {"n_m", c.matings}, {"n_0", c.offspring}};
}

void write_dropped(std::ostream& out, const std::vector<PersonId>& dropped_ids) {
    if (dropped_ids.empty()) return;
    out << "warning: dropped " << dropped_ids.size() << " individual(s) not connected to a proband:";
    for (auto id : dropped_ids) out << ' ' << id;
    out << '\n';
}

}  // namespace

std::vector<std::string> break_notes(const FamilyResult& r) {
    std::vector<std::string> notes;
    const auto& p = r.result.pedigree;
    std::vector<PersonId> seen;
    for (const auto& step : r.result.plan.steps) {
        if (std::find(seen.begin(), seen.end(), step.breaker) != seen.end()) continue;
        seen.push_back(step.breaker);
        const auto& ind = p.at(step.breaker);
        if (ind.is_placeholder) {
            notes.push_back("breaker " + std::to_string(step.breaker) + " is a placeholder parent");
        } else if (ind.is_founder()) {
            notes.push_back("breaker " + std::to_string(step.breaker) +
                            " is a founder on a loop; the selection may not be optimal");
        }
    }
    for (const auto& [id, n] : r.result.complexity.repeated_breakers) {
        notes.push_back("individual " + std::to_string(id) + " was cloned " + std::to_string(n) + " times");
    }
    return notes;
}

void write_break_report(std::ostream& out, const std::vector<FamilyResult>& results,
                        const std::vector<PersonId>& dropped_ids, ReportFormat format) {
    if (format == ReportFormat::json) {
        json doc;
        doc["format_version"] = kReportFormatVersion;
        doc["dropped_ids"] = dropped_ids;
        doc["families"] = json::array();
        for (const auto& r : results) {
            json steps = json::array();
            for (std::size_t i = 0; i < r.result.plan.steps.size(); ++i) {
                const auto& s = r.result.plan.steps[i];
                steps.push_back({{"breaker", s.breaker},
                                 {"mating", s.mating},
                                 {"method", to_string(s.method)},
                                 {"log_count", s.log_count},
                                 {"clone", r.result.clones.at(i).clone_id}});
            }
            json trace = json::array();
            for (auto m : r.result.plan.method_trace) trace.push_back(to_string(m));
            json repeated = json::object();
            for (const auto& [id, n] : r.result.complexity.repeated_breakers) {
                repeated[std::to_string(id)] = n;
            }
            doc["families"].push_back({{"family", r.family_index},
                                       {"counts", counts_json(r.counts)},
                                       {"loops", r.loops},
                                       {"clones", r.result.clones.size()},
                                       {"steps", steps},
                                       {"method_trace", trace},
                                       {"complexity_factor", r.result.complexity.factor},
                                       {"log_complexity_factor", r.result.complexity.log_factor},
                                       {"repeated_breakers", repeated},
                                       {"notes", break_notes(r)},
                                       {"seconds", r.seconds}});
        }
        out << doc.dump(2) << '\n';
        return;
    }

    write_dropped(out, dropped_ids);
    for (const auto& r : results) {
        out << "family " << r.family_index << ": " << r.loops << " loops, " << r.result.clones.size()
            << " clones\n";
        for (std::size_t i = 0; i < r.result.plan.steps.size(); ++i) {
            const auto& s = r.result.plan.steps[i];
            out << "  step " << i + 1 << ": breaker " << s.breaker << " severed from mating " << s.mating
                << " (method=" << to_string(s.method) << ", log|G|=" << std::setprecision(6) << s.log_count
                << ", clone " << r.result.clones.at(i).clone_id << ")\n";
        }
        if (!r.result.plan.method_trace.empty()) {
            out << "  method trace:";
            for (auto m : r.result.plan.method_trace) out << ' ' << to_string(m);
            out << '\n';
        }
        out << "  complexity factor: " << r.result.complexity.factor
            << " (log " << r.result.complexity.log_factor << ")\n";
        for (const auto& note : break_notes(r)) out << "  note: " << note << '\n';
        out << "  break time: " << std::fixed << std::setprecision(6) << r.seconds << " s\n"
            << std::defaultfloat;
    }
}

void write_check_report(std::ostream& out, const std::vector<FamilyDiagnostics>& families,
                        const std::vector<PersonId>& dropped_ids, ReportFormat format) {
    if (format == ReportFormat::json) {
        json doc;
        doc["format_version"] = kReportFormatVersion;
        doc["dropped_ids"] = dropped_ids;
        doc["families"] = json::array();
        for (const auto& f : families) {
            doc["families"].push_back({{"family", f.family_index}, {"loops", f.loops}});
        }
        out << doc.dump(2) << '\n';
        return;
    }
    write_dropped(out, dropped_ids);
    for (const auto& f : families) {
        out << "family " << f.family_index << ": " << f.loops << " loops\n";
    }
}

void write_diagnostics_report(std::ostream& out, const std::vector<FamilyDiagnostics>& families,
                              const std::vector<PersonId>& dropped_ids, ReportFormat format) {
    if (format == ReportFormat::json) {
        json doc;
        doc["format_version"] = kReportFormatVersion;
        doc["dropped_ids"] = dropped_ids;
        doc["families"] = json::array();
        for (const auto& f : families) {
            json candidates = json::array();
            for (const auto& c : f.candidates) {
                candidates.push_back({{"id", c.person},
                                      {"genotype_count", c.genotype_count},
                                      {"trimmed_degree", c.trimmed_degree},
                                      {"parent_links", c.parent_links},
                                      {"cost", c.cost},
                                      {"placeholder", c.placeholder}});
            }
            doc["families"].push_back({{"family", f.family_index},
                                       {"counts", counts_json(f.counts)},
                                       {"loops", f.loops},
                                       {"trimmed", {{"persons", f.trimmed_persons},
                                                    {"matings", f.trimmed_matings},
                                                    {"edges", f.trimmed_edges}}},
                                       {"classification", f.classification},
                                       {"candidates", candidates},
                                       {"founders_in_loops", f.founders_in_loops}});
        }
        out << doc.dump(2) << '\n';
        return;
    }

    write_dropped(out, dropped_ids);
    for (const auto& f : families) {
        out << "family " << f.family_index << ":\n"
            << "  n_i=" << f.counts.individuals << " n_m=" << f.counts.matings << " n_0=" << f.counts.offspring
            << '\n'
            << "  loops=" << f.loops << '\n'
            << "  trimmed graph: " << f.trimmed_persons << " persons, " << f.trimmed_matings << " matings, "
            << f.trimmed_edges << " edges\n"
            << "  classification=" << f.classification << '\n';
        if (!f.candidates.empty()) {
            out << "  candidates:\n"
                << "    " << std::left << std::setw(8) << "id" << std::setw(8) << "|G|" << std::setw(8) << "d"
                << std::setw(10) << "parental" << "cost\n";
            for (const auto& c : f.candidates) {
                out << "    " << std::setw(8) << c.person << std::setw(8) << c.genotype_count << std::setw(8)
                    << c.trimmed_degree << std::setw(10) << c.parent_links << std::setprecision(6) << c.cost
                    << (c.placeholder ? "  (placeholder)" : "") << '\n';
            }
            out << std::right;
        }
        if (!f.founders_in_loops.empty()) {
            out << "  founders in loops:";
            for (auto id : f.founders_in_loops) out << ' ' << id;
            out << '\n';
        }
    }
}

}  // namespace breakloops
