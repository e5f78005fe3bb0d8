#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "breakloops/pedigree.hpp"

namespace breakloops {

/// Gives every individual with exactly one known parent a founder
/// placeholder for the missing side.
///
/// Children that share the same known parent and miss the same side share a
/// single placeholder, so half-sibling groups keep one implied mating.
/// Placeholder ids continue from the largest existing id.
Pedigree fix_parents(const Pedigree& p);

/// Connected components of the parent/child relation, each as its own
/// pedigree. Components are ordered by their smallest id; rows keep their
/// input order.
std::vector<Pedigree> partition_families(const Pedigree& p);

struct PruneResult {
    std::vector<Pedigree> families;
    /// Ids of every individual in a dropped component, ascending.
    std::vector<PersonId> dropped_ids;
};

/// Keeps the components that contain at least one proband. Throws
/// PedigreeError (no_proband) when none does.
PruneResult prune_unconnected(const std::vector<Pedigree>& families);

/// Number of genotype vectors consistent with the individual's results:
/// 2^(untested variants among `variant_names`).
std::uint64_t genotype_count(const Individual& ind, const std::vector<std::string>& variant_names);

/// Per-person genotype counts |G_i| and their natural logs.
class GenotypeWeights {
public:
    GenotypeWeights() = default;

    /// Counts from each individual's test results. A pedigree without variant
    /// columns is scored against one synthetic variant, so every |G_i| is 2.
    static GenotypeWeights from_pedigree(const Pedigree& p);
    /// Every individual gets the same count.
    static GenotypeWeights uniform(const Pedigree& p, double count);
    /// `uniform(p, *count)` when set, otherwise `from_pedigree(p)`.
    static GenotypeWeights for_pedigree(const Pedigree& p, std::optional<double> uniform_count);

    void set(PersonId id, double count);
    bool contains(PersonId id) const { return counts_.contains(id); }
    double count(PersonId id) const;
    double log_count(PersonId id) const;

    /// Raises every count to `power`. Selections are invariant under this.
    GenotypeWeights powered(double power) const;

private:
    std::unordered_map<PersonId, double> counts_;
};

}  // namespace breakloops
