#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "breakloops/breakers.hpp"
#include "breakloops/family.hpp"
#include "breakloops/graph.hpp"
#include "breakloops/pedigree.hpp"
#include "breakloops/transform.hpp"

namespace breakloops {

/// Families ready for loop analysis: parents fixed, split into connected
/// units, and filtered to those containing a proband.
struct PreparedInput {
    std::vector<Pedigree> families;
    std::vector<PersonId> dropped_ids;
    std::vector<std::string> variant_names;
    /// Largest id over every family after placeholders were added.
    PersonId max_id = 0;
};

PreparedInput prepare_families(const Pedigree& raw);

struct BreakOptions {
    /// Overrides every |G_i| when set.
    std::optional<double> uniform_genotypes;
};

struct FamilyResult {
    std::size_t family_index = 0;  // 1-based
    PedigreeCounts counts;
    std::size_t loops = 0;
    BreakResult result;
    double seconds = 0.0;  // wall-clock time of break_loops
};

/// Clone ids for family k start after the input's largest id plus the loops
/// of families 0..k-1, so serial and parallel runs agree exactly.
std::vector<PersonId> clone_id_offsets(const std::vector<Pedigree>& families, PersonId max_id);

/// Serial reference kernel.
std::vector<FamilyResult> break_families_serial(const PreparedInput& input, const BreakOptions& options);

/// OpenMP kernel, one family per iteration. Results are in family order and
/// identical to the serial kernel apart from timings.
std::vector<FamilyResult> break_families_parallel(const PreparedInput& input, const BreakOptions& options);

/// Concatenates family outputs in family order.
Pedigree merge_families(const std::vector<FamilyResult>& results, const std::vector<std::string>& variant_names);

/// Per-family diagnostics for the report subcommand.
struct CandidateCost {
    PersonId person = 0;
    double genotype_count = 0.0;
    std::size_t trimmed_degree = 0;
    std::size_t parent_links = 0;
    double cost = 0.0;
    bool placeholder = false;
};

struct FamilyDiagnostics {
    std::size_t family_index = 0;
    PedigreeCounts counts;
    std::size_t loops = 0;
    std::size_t trimmed_persons = 0;
    std::size_t trimmed_matings = 0;
    std::size_t trimmed_edges = 0;
    /// "none", "no-MM", "MM" or "mixed" (greedy rounds followed by a
    /// spanning-tree pass).
    std::string classification;
    std::vector<CandidateCost> candidates;
    /// Founders that sit on a loop.
    std::vector<PersonId> founders_in_loops;
};

FamilyDiagnostics diagnose_family(const Pedigree& family, std::size_t family_index, const BreakOptions& options);

}  // namespace breakloops
