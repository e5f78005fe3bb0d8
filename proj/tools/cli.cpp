#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "breakloops/graph.hpp"
#include "breakloops/pedigree_io.hpp"
#include "breakloops/pipeline.hpp"
#include "breakloops/report.hpp"

namespace breakloops::cli {

namespace {

struct CommonFlags {
    std::string input;
    std::string delimiter;
    std::vector<std::string> variants;
    std::optional<double> uniform_genotypes;
    std::string report = "text";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("input", flags.input, "Pedigree table (CSV or TSV)")->required();
    cmd->add_option("--delimiter", flags.delimiter,
                    "Input field separator: ',', 'tab' or any single character (default: detect)");
    cmd->add_option("--variants", flags.variants, "Variant test columns to use (default: all extra columns)")
        ->delimiter(',');
    cmd->add_option("--uniform-genotypes", flags.uniform_genotypes,
                    "Use this genotype count for every individual")
        ->check(CLI::Range(1.0, 1e300));
    cmd->add_option("--report", flags.report, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
}

ParseOptions parse_options(const CommonFlags& flags) {
    ParseOptions options;
    if (!flags.delimiter.empty()) {
        if (flags.delimiter == "tab" || flags.delimiter == "\\t") {
            options.delimiter = '\t';
        } else if (flags.delimiter.size() == 1) {
            options.delimiter = flags.delimiter.front();
        } else {
            throw PedigreeError(PedigreeError::Kind::invalid_argument, 0,
                                "delimiter must be a single character or 'tab'");
        }
    }
    if (!flags.variants.empty()) options.variants = flags.variants;
    return options;
}

ReportFormat report_format(const CommonFlags& flags) {
    return flags.report == "json" ? ReportFormat::json : ReportFormat::text;
}

PreparedInput load(const CommonFlags& flags) {
    return prepare_families(read_pedigree_file(flags.input, parse_options(flags)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Detect and break consanguinity loops in pedigrees"};
    app.require_subcommand(1);

    CommonFlags check_flags, break_flags, report_flags;

    auto* check = app.add_subcommand("check", "Report loops per family; exit 1 if any family has loops");
    add_common(check, check_flags);

    auto* brk = app.add_subcommand("break", "Break all loops with founder clones and write the new table");
    add_common(brk, break_flags);
    std::string output;
    std::string format = "csv";
    bool parallel = false;
    brk->add_option("-o,--output", output, "Output table path")->required();
    brk->add_option("--format", format, "Output table format")->check(CLI::IsMember({"csv", "tsv"}));
    brk->add_flag("--parallel", parallel, "Process families concurrently");

    auto* rep = app.add_subcommand("report", "Print counts, trimmed-graph size and candidate costs");
    add_common(rep, report_flags);
    std::string dot_path;
    rep->add_option("--graph-dot", dot_path, "Write the family graphs in Graphviz DOT format");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidationError;
    }

    try {
        if (*check) {
            const auto input = load(check_flags);
            std::vector<FamilyDiagnostics> families;
            bool any_loops = false;
            for (std::size_t i = 0; i < input.families.size(); ++i) {
                FamilyDiagnostics d;
                d.family_index = i + 1;
                d.counts = count_pedigree(input.families[i]);
                d.loops = loop_count(input.families[i]);
                any_loops = any_loops || d.loops > 0;
                families.push_back(std::move(d));
            }
            write_check_report(out, families, input.dropped_ids, report_format(check_flags));
            return any_loops ? kLoopsFound : kOk;
        }

        if (*brk) {
            const auto input = load(break_flags);
            BreakOptions options{break_flags.uniform_genotypes};
            const auto results =
                parallel ? break_families_parallel(input, options) : break_families_serial(input, options);
            const auto merged = merge_families(results, input.variant_names);
            std::ofstream file(output);
            if (!file) {
                err << "error: cannot write " << output << '\n';
                return kValidationError;
            }
            write_pedigree(file, merged, format == "tsv" ? '\t' : ',');
            write_break_report(out, results, input.dropped_ids, report_format(break_flags));
            return kOk;
        }

        if (*rep) {
            const auto input = load(report_flags);
            BreakOptions options{report_flags.uniform_genotypes};
            std::vector<FamilyDiagnostics> families;
            for (std::size_t i = 0; i < input.families.size(); ++i) {
                families.push_back(diagnose_family(input.families[i], i + 1, options));
            }
            write_diagnostics_report(out, families, input.dropped_ids, report_format(report_flags));
            if (!dot_path.empty()) {
                std::ofstream dot(dot_path);
                if (!dot) {
                    err << "error: cannot write " << dot_path << '\n';
                    return kValidationError;
                }
                for (const auto& family : input.families) write_dot(dot, build_graph(family));
            }
            return kOk;
        }
    } catch (const PedigreeError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kOk;
}

}  // namespace breakloops::cli
