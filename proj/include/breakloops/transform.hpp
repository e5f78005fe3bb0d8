#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "breakloops/breakers.hpp"
#include "breakloops/family.hpp"
#include "breakloops/pedigree.hpp"

namespace breakloops {

struct CloneRecord {
    PersonId clone_id = 0;
    PersonId original_id = 0;
    MatingId mating_id = 0;
    std::size_t step_index = 0;

    bool operator==(const CloneRecord&) const = default;
};

/// apply_break was asked to sever a link that is not there.
class TransformError : public std::invalid_argument {
public:
    enum class Kind { unknown_mating, not_a_parent, already_replaced, clone_id_taken };

    TransformError(Kind kind, const std::string& message)
        : std::invalid_argument(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Replaces `breaker` by a new founder clone as the parent of every child of
/// `mating`. The clone copies sex and test results, is never a proband, and
/// is appended after the existing rows. `clone_id` 0 means max id + 1.
std::pair<Pedigree, CloneRecord> apply_break(const Pedigree& p, PersonId breaker, MatingId mating,
                                             PersonId clone_id = 0, std::size_t step_index = 0);

struct ComplexityReport {
    /// Product of |G| over cloned originals, one factor per clone.
    double factor = 1.0;
    double log_factor = 0.0;
    /// Originals cloned more than once, with their clone counts.
    std::map<PersonId, std::size_t> repeated_breakers;
};

ComplexityReport complexity_report(const std::vector<CloneRecord>& records, const GenotypeWeights& weights);

struct BreakResult {
    Pedigree pedigree;
    std::vector<CloneRecord> clones;
    BreakPlan plan;
    ComplexityReport complexity;
};

/// Plans and applies loop breaks for one connected family. A loop-free
/// family is returned unchanged. Clone ids start at `first_clone_id`, or at
/// max id + 1 when it is 0. Throws StructuralError if the result still has
/// loops.
BreakResult break_loops(const Pedigree& p, const GenotypeWeights& weights, PersonId first_clone_id = 0);

}  // namespace breakloops
