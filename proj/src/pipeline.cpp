#include "breakloops/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

namespace breakloops {

namespace {

FamilyResult break_one(const Pedigree& family, std::size_t index, PersonId first_clone_id,
                       const BreakOptions& options) {
    FamilyResult out;
    out.family_index = index + 1;
    out.counts = count_pedigree(family);
    out.loops = loop_count(family);
    const auto weights = GenotypeWeights::for_pedigree(family, options.uniform_genotypes);
    const auto start = std::chrono::steady_clock::now();
    out.result = break_loops(family, weights, first_clone_id);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

PreparedInput prepare_families(const Pedigree& raw) {
    const auto fixed = fix_parents(raw);
    auto pruned = prune_unconnected(partition_families(fixed));
    PreparedInput input;
    input.families = std::move(pruned.families);
    input.dropped_ids = std::move(pruned.dropped_ids);
    input.variant_names = fixed.variant_names();
    input.max_id = fixed.max_id();
    return input;
}

std::vector<PersonId> clone_id_offsets(const std::vector<Pedigree>& families, PersonId max_id) {
    std::vector<PersonId> offsets;
    offsets.reserve(families.size());
    PersonId next = max_id + 1;
    for (const auto& f : families) {
        offsets.push_back(next);
        next += static_cast<PersonId>(loop_count(f));
    }
    return offsets;
}

std::vector<FamilyResult> break_families_serial(const PreparedInput& input, const BreakOptions& options) {
    const auto offsets = clone_id_offsets(input.families, input.max_id);
    std::vector<FamilyResult> results;
    results.reserve(input.families.size());
    for (std::size_t i = 0; i < input.families.size(); ++i) {
        results.push_back(break_one(input.families[i], i, offsets[i], options));
    }
    return results;
}

std::vector<FamilyResult> break_families_parallel(const PreparedInput& input, const BreakOptions& options) {
    const auto offsets = clone_id_offsets(input.families, input.max_id);
    const auto n = static_cast<std::ptrdiff_t>(input.families.size());
    std::vector<FamilyResult> results(input.families.size());
    std::vector<std::exception_ptr> errors(input.families.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            results[k] = break_one(input.families[k], k, offsets[k], options);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

Pedigree merge_families(const std::vector<FamilyResult>& results, const std::vector<std::string>& variant_names) {
    std::vector<Individual> all;
    for (const auto& r : results) {
        const auto& rows = r.result.pedigree.individuals();
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return Pedigree(std::move(all), variant_names);
}

FamilyDiagnostics diagnose_family(const Pedigree& family, std::size_t family_index, const BreakOptions& options) {
    FamilyDiagnostics d;
    d.family_index = family_index;
    d.counts = count_pedigree(family);
    d.loops = loop_count(family);

    const auto trimmed = trim_leaves(build_graph(family));
    d.trimmed_persons = trimmed.persons().size();
    d.trimmed_matings = trimmed.matings().size();
    d.trimmed_edges = trimmed.graph.edge_count();

    const auto weights = GenotypeWeights::for_pedigree(family, options.uniform_genotypes);
    for (auto person : trimmed.persons()) {
        const auto& ind = family.at(person);
        d.candidates.push_back({person, weights.count(person), trimmed.trimmed_degree.at(person),
                                trimmed.parent_link_count(person), greedy_cost(person, trimmed, weights),
                                ind.is_placeholder});
        if (ind.is_founder()) d.founders_in_loops.push_back(person);
    }

    if (trimmed.empty()) {
        d.classification = "none";
    } else {
        const auto plan = plan_breaks(family, weights);
        const bool greedy = std::find(plan.method_trace.begin(), plan.method_trace.end(), Method::greedy) !=
                            plan.method_trace.end();
        const bool mst = std::find(plan.method_trace.begin(), plan.method_trace.end(), Method::mst) !=
                         plan.method_trace.end();
        d.classification = greedy && mst ? "mixed" : greedy ? "MM" : "no-MM";
    }
    return d;
}

}  // namespace breakloops
