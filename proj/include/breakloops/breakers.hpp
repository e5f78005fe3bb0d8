#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "breakloops/family.hpp"
#include "breakloops/graph.hpp"
#include "breakloops/pedigree.hpp"

namespace breakloops {

enum class LoopCase { empty, no_multiple_matings, multiple_matings };

enum class Method { greedy, mst };

const char* to_string(LoopCase c);
const char* to_string(Method m);

/// Two costs within this relative distance are treated as tied.
inline constexpr double kTieTolerance = 1e-9;

/// Classifies a trimmed graph by the number of parent links each person
/// keeps inside it.
LoopCase classify_case(const TrimmedGraph& t);

/// Mating-only multigraph: each loop person becomes one weighted edge
/// between their child mating and their parental mating.
struct MatingSubgraph {
    struct PersonEdge {
        PersonId person = 0;
        MatingId child_mating = 0;
        MatingId parental_mating = 0;
        double weight = 0.0;  // log |G_person|
    };

    std::vector<MatingId> vertices;  // ascending
    std::vector<PersonEdge> edges;   // ascending person id
};

/// Contracts every person of a no-multiple-matings trim into an edge.
/// Throws StructuralError on any other case.
MatingSubgraph build_subgraph(const TrimmedGraph& t, const GenotypeWeights& weights);

struct BreakStep {
    PersonId breaker = 0;
    MatingId mating = 0;
    Method method = Method::greedy;
    double log_count = 0.0;  // log |G_breaker|
};

struct BreakPlan {
    std::vector<BreakStep> steps;
    /// Sum of the steps' log counts.
    double total_log_complexity = 0.0;
    /// One tag per selection round: one per greedy breaker, one for the final
    /// spanning-tree pass.
    std::vector<Method> method_trace;

    bool empty() const { return steps.empty(); }
    void add(BreakStep step);
};

/// Maximum-weight spanning tree over the mating subgraph grown with Prim's
/// algorithm from the smallest mating. Every edge left out of the tree is a
/// loop breaker, severed from their parental mating. Among equally heavy
/// candidate edges the smaller person id joins the tree first, so among tied
/// persons the largest id ends up as the breaker. Throws StructuralError if
/// the subgraph is disconnected.
BreakPlan select_breakers_mst(const MatingSubgraph& sg);

/// log |G_i| / d_i with d_i the person's trimmed degree.
double greedy_cost(PersonId person, const TrimmedGraph& t, const GenotypeWeights& weights);

struct GreedyChoice {
    PersonId breaker = 0;
    std::vector<MatingId> matings;  // severance order
};

/// Picks the loop person with the lowest greedy cost (smallest id on ties)
/// and severs their parental matings one at a time, in ascending mating id,
/// re-trimming after each until no loop is left or the breaker drops out of
/// the trimmed graph. Only parent links that lie on a cycle are eligible.
GreedyChoice select_breaker_greedy(const TrimmedGraph& t, const GenotypeWeights& weights);

/// Hybrid planner: greedy rounds while the trim has multiple matings, then a
/// single spanning-tree pass once it does not.
BreakPlan plan_breaks(const Pedigree& p, const GenotypeWeights& weights);

}  // namespace breakloops
