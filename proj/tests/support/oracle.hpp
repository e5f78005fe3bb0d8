#pragma once

// Test-only reference solvers and random pedigree generation. Nothing here
// reuses the graph or planning code it is meant to check.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "breakloops/family.hpp"
#include "breakloops/pedigree.hpp"

namespace breakloops::oracle {

class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimal total log|G| over sets of parent links whose removal leaves the
/// loop core acyclic, by exhaustive enumeration. Refuses (OracleLimitError)
/// when the core has more than `max_parent_links` parent links.
double brute_force_min_plan(const Pedigree& p, const GenotypeWeights& weights,
                            std::size_t max_parent_links = 12);

/// Number of parent links in the loop core, as the oracle sees it.
std::size_t core_parent_link_count(const Pedigree& p);

/// Counts simple cycles of the person/mating graph by exhaustive path
/// search. Only for tiny pedigrees.
std::size_t count_simple_cycles(const Pedigree& p);

struct GeneratorParams {
    std::size_t min_individuals = 5;
    std::size_t max_individuals = 20;
    std::size_t loops = 1;
    /// When false every individual has at most one mating, which rules out
    /// multiple matings inside loops.
    bool multiple_matings = false;
    std::size_t variant_count = 0;
    double tested_fraction = 0.0;
    std::uint64_t seed = 1;
};

/// Connected, valid pedigree with exactly `params.loops` independent loops
/// and one proband. Same params give the same pedigree.
Pedigree random_pedigree(const GeneratorParams& params);

}  // namespace breakloops::oracle
