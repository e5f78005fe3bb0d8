#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace breakloops {

using PersonId = std::int64_t;
using MatingId = std::int64_t;

enum class Sex { female, male };

enum class TestResult { untested, non_carrier, carrier };

/// One pedigree row.
///
/// `test_results` holds only variants with a definite result; a variant that
/// is absent from the map is untested.
struct Individual {
    PersonId id = 0;
    std::optional<PersonId> mother_id;
    std::optional<PersonId> father_id;
    Sex sex = Sex::female;
    bool is_proband = false;
    std::map<std::string, TestResult> test_results;
    std::optional<PersonId> clone_of;
    bool is_placeholder = false;

    TestResult result_for(const std::string& variant) const;
    bool is_founder() const { return !mother_id && !father_id; }
    bool has_both_parents() const { return mother_id && father_id; }

    bool operator==(const Individual&) const = default;
};

/// A (father, mother) pair with at least one child in the pedigree.
struct Mating {
    MatingId mating_id = 0;
    PersonId father_id = 0;
    PersonId mother_id = 0;
    std::vector<PersonId> child_ids;  // ascending

    bool has_parent(PersonId id) const { return id == father_id || id == mother_id; }
    bool operator==(const Mating&) const = default;
};

/// Rejected pedigree input. `row` is the 1-based data row, 0 when the problem
/// is not tied to one row.
class PedigreeError : public std::runtime_error {
public:
    enum class Kind {
        malformed_table,
        duplicate_id,
        invalid_id,
        unknown_sex,
        unknown_token,
        missing_reference,
        self_parent,
        parent_sex_mismatch,
        own_ancestor,
        no_proband,
        invalid_argument,
    };

    PedigreeError(Kind kind, std::size_t row, const std::string& message);

    Kind kind() const { return kind_; }
    std::size_t row() const { return row_; }

private:
    Kind kind_;
    std::size_t row_;
};

/// A broken internal contract: a routine was called outside its precondition
/// or produced a state that should be unreachable.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Validated, immutable collection of individuals.
///
/// Row order is preserved. Matings are derived on construction from the
/// parent links of individuals that have both parents.
class Pedigree {
public:
    Pedigree() = default;

    /// Throws PedigreeError when ids repeat, a parent reference dangles,
    /// someone is their own parent or ancestor, or a parent has the wrong sex.
    Pedigree(std::vector<Individual> individuals, std::vector<std::string> variant_names);

    const std::vector<Individual>& individuals() const { return individuals_; }
    const std::vector<std::string>& variant_names() const { return variant_names_; }
    const std::vector<Mating>& matings() const { return matings_; }

    std::size_t size() const { return individuals_.size(); }
    bool empty() const { return individuals_.empty(); }

    const Individual* find(PersonId id) const;
    const Individual& at(PersonId id) const;
    bool contains(PersonId id) const { return find(id) != nullptr; }

    const Mating* find_mating(MatingId id) const;
    const Mating& mating(MatingId id) const;

    PersonId max_id() const;
    /// Individuals with both parents present.
    std::size_t offspring_count() const;
    bool has_proband() const;

    bool operator==(const Pedigree& other) const {
        return individuals_ == other.individuals_ && variant_names_ == other.variant_names_;
    }

private:
    std::vector<Individual> individuals_;
    std::vector<std::string> variant_names_;
    std::vector<Mating> matings_;
    std::unordered_map<PersonId, std::size_t> index_;
};

/// One mating per distinct (father, mother) pair with children. Ids are
/// assigned 1, 2, ... in ascending order of each mating's smallest child id.
std::vector<Mating> derive_matings(const std::vector<Individual>& individuals);
std::vector<Mating> derive_matings(const Pedigree& p);

/// Same individuals, sorted by id. Used for structural comparison.
Pedigree canonical_order(const Pedigree& p);

}  // namespace breakloops
