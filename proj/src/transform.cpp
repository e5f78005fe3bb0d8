#include "breakloops/transform.hpp"

#include <cmath>

#include "breakloops/graph.hpp"

namespace breakloops {

std::pair<Pedigree, CloneRecord> apply_break(const Pedigree& p, PersonId breaker, MatingId mating_id,
                                             PersonId clone_id, std::size_t step_index) {
    using Kind = TransformError::Kind;
    const auto* mating = p.find_mating(mating_id);
    if (!mating) {
        throw TransformError(Kind::unknown_mating, "no mating with id " + std::to_string(mating_id));
    }
    const auto* original = p.find(breaker);
    if (!original) {
        throw TransformError(Kind::not_a_parent, "no individual with id " + std::to_string(breaker));
    }
    const bool as_mother = original->sex == Sex::female;
    const PersonId slot = as_mother ? mating->mother_id : mating->father_id;
    if (slot != breaker) {
        const auto& occupant = p.at(slot);
        if (occupant.clone_of == breaker) {
            throw TransformError(Kind::already_replaced, "individual " + std::to_string(breaker) +
                                                             " was already replaced in mating " +
                                                             std::to_string(mating_id));
        }
        throw TransformError(Kind::not_a_parent, "individual " + std::to_string(breaker) +
                                                     " is not a parent of mating " +
                                                     std::to_string(mating_id));
    }

    if (clone_id == 0) clone_id = p.max_id() + 1;
    if (p.contains(clone_id)) {
        throw TransformError(Kind::clone_id_taken, "clone id " + std::to_string(clone_id) + " is in use");
    }

    Individual clone;
    clone.id = clone_id;
    clone.sex = original->sex;
    clone.test_results = original->test_results;
    clone.clone_of = breaker;

    auto individuals = p.individuals();
    for (auto child : mating->child_ids) {
        for (auto& ind : individuals) {
            if (ind.id != child) continue;
            (as_mother ? ind.mother_id : ind.father_id) = clone_id;
        }
    }
    individuals.push_back(std::move(clone));

    return {Pedigree(std::move(individuals), p.variant_names()),
            CloneRecord{clone_id, breaker, mating_id, step_index}};
}

ComplexityReport complexity_report(const std::vector<CloneRecord>& records, const GenotypeWeights& weights) {
    ComplexityReport report;
    std::map<PersonId, std::size_t> clones_per_original;
    for (const auto& r : records) {
        report.log_factor += weights.log_count(r.original_id);
        ++clones_per_original[r.original_id];
    }
    report.factor = std::exp(report.log_factor);
    // exact product when it fits; exp(log) drifts in the last bits
    double product = 1.0;
    for (const auto& r : records) product *= weights.count(r.original_id);
    if (std::isfinite(product)) report.factor = product;
    for (const auto& [id, n] : clones_per_original) {
        if (n > 1) report.repeated_breakers.emplace(id, n);
    }
    return report;
}

BreakResult break_loops(const Pedigree& p, const GenotypeWeights& weights, PersonId first_clone_id) {
    BreakResult result{p, {}, {}, {}};
    if (!check_loops(p)) return result;

    result.plan = plan_breaks(p, weights);
    PersonId next_id = first_clone_id != 0 ? first_clone_id : p.max_id() + 1;
    for (std::size_t i = 0; i < result.plan.steps.size(); ++i) {
        const auto& step = result.plan.steps[i];
        auto [next, record] = apply_break(result.pedigree, step.breaker, step.mating, next_id++, i);
        result.pedigree = std::move(next);
        result.clones.push_back(record);
    }

    if (check_loops(result.pedigree) || has_cycle_dfs(build_graph(result.pedigree))) {
        throw StructuralError("pedigree still has loops after applying the break plan");
    }
    result.complexity = complexity_report(result.clones, weights);
    return result;
}

}  // namespace breakloops
