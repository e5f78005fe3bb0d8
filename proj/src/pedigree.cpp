#include "breakloops/pedigree.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace breakloops {

namespace {

std::string with_row(std::size_t row, const std::string& message) {
    if (row == 0) return message;
    std::ostringstream out;
    out << "row " << row << ": " << message;
    return out.str();
}

// Kahn's algorithm over child -> parent edges; anything left over sits on a
// cycle of descent.
void check_descent_is_acyclic(const std::vector<Individual>& individuals,
                              const std::unordered_map<PersonId, std::size_t>& index) {
    std::vector<std::size_t> pending_children(individuals.size(), 0);
    for (const auto& ind : individuals) {
        if (ind.mother_id) ++pending_children[index.at(*ind.mother_id)];
        if (ind.father_id) ++pending_children[index.at(*ind.father_id)];
    }
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < individuals.size(); ++i) {
        if (pending_children[i] == 0) ready.push_back(i);
    }
    std::size_t settled = 0;
    while (!ready.empty()) {
        const auto& ind = individuals[ready.back()];
        ready.pop_back();
        ++settled;
        for (const auto& parent : {ind.mother_id, ind.father_id}) {
            if (!parent) continue;
            auto pos = index.at(*parent);
            if (--pending_children[pos] == 0) ready.push_back(pos);
        }
    }
    if (settled == individuals.size()) return;
    for (std::size_t i = 0; i < individuals.size(); ++i) {
        if (pending_children[i] != 0) {
            throw PedigreeError(PedigreeError::Kind::own_ancestor, i + 1,
                                "individual " + std::to_string(individuals[i].id) +
                                    " is their own ancestor");
        }
    }
}

}  // namespace

TestResult Individual::result_for(const std::string& variant) const {
    auto it = test_results.find(variant);
    return it == test_results.end() ? TestResult::untested : it->second;
}

PedigreeError::PedigreeError(Kind kind, std::size_t row, const std::string& message)
    : std::runtime_error(with_row(row, message)), kind_(kind), row_(row) {}

Pedigree::Pedigree(std::vector<Individual> individuals, std::vector<std::string> variant_names)
    : individuals_(std::move(individuals)), variant_names_(std::move(variant_names)) {
    using Kind = PedigreeError::Kind;
    index_.reserve(individuals_.size());
    for (std::size_t i = 0; i < individuals_.size(); ++i) {
        const auto& ind = individuals_[i];
        if (ind.id <= 0) {
            throw PedigreeError(Kind::invalid_id, i + 1,
                                "id " + std::to_string(ind.id) + " is not a positive integer");
        }
        if (!index_.emplace(ind.id, i).second) {
            throw PedigreeError(Kind::duplicate_id, i + 1,
                                "duplicate id " + std::to_string(ind.id));
        }
    }

    for (std::size_t i = 0; i < individuals_.size(); ++i) {
        const auto& ind = individuals_[i];
        const std::size_t row = i + 1;
        auto check_parent = [&](const std::optional<PersonId>& parent, Sex expected,
                                const char* role) {
            if (!parent) return;
            if (*parent == ind.id) {
                throw PedigreeError(Kind::self_parent, row,
                                    "individual " + std::to_string(ind.id) + " is their own " + role);
            }
            auto it = index_.find(*parent);
            if (it == index_.end()) {
                throw PedigreeError(Kind::missing_reference, row,
                                    std::string(role) + " " + std::to_string(*parent) + " of individual " +
                                        std::to_string(ind.id) + " does not exist");
            }
            if (individuals_[it->second].sex != expected) {
                throw PedigreeError(Kind::parent_sex_mismatch, row,
                                    std::string(role) + " " + std::to_string(*parent) + " of individual " +
                                        std::to_string(ind.id) + " has the wrong sex");
            }
        };
        check_parent(ind.mother_id, Sex::female, "mother");
        check_parent(ind.father_id, Sex::male, "father");
        if (ind.clone_of && !index_.contains(*ind.clone_of)) {
            throw PedigreeError(Kind::missing_reference, row,
                                "clone " + std::to_string(ind.id) + " refers to missing individual " +
                                    std::to_string(*ind.clone_of));
        }
    }

    check_descent_is_acyclic(individuals_, index_);
    matings_ = derive_matings(individuals_);
}

const Individual* Pedigree::find(PersonId id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &individuals_[it->second];
}

const Individual& Pedigree::at(PersonId id) const {
    if (const auto* ind = find(id)) return *ind;
    throw std::out_of_range("no individual with id " + std::to_string(id));
}

const Mating* Pedigree::find_mating(MatingId id) const {
    // mating ids are 1..n in vector order
    if (id < 1 || static_cast<std::size_t>(id) > matings_.size()) return nullptr;
    return &matings_[static_cast<std::size_t>(id - 1)];
}

const Mating& Pedigree::mating(MatingId id) const {
    if (const auto* m = find_mating(id)) return *m;
    throw std::out_of_range("no mating with id " + std::to_string(id));
}

PersonId Pedigree::max_id() const {
    PersonId best = 0;
    for (const auto& ind : individuals_) best = std::max(best, ind.id);
    return best;
}

std::size_t Pedigree::offspring_count() const {
    return static_cast<std::size_t>(
        std::count_if(individuals_.begin(), individuals_.end(),
                      [](const Individual& ind) { return ind.has_both_parents(); }));
}

bool Pedigree::has_proband() const {
    return std::any_of(individuals_.begin(), individuals_.end(),
                       [](const Individual& ind) { return ind.is_proband; });
}

std::vector<Mating> derive_matings(const std::vector<Individual>& individuals) {
    std::map<std::pair<PersonId, PersonId>, std::vector<PersonId>> children;
    for (const auto& ind : individuals) {
        if (!ind.has_both_parents()) continue;
        children[{*ind.father_id, *ind.mother_id}].push_back(ind.id);
    }

    std::vector<Mating> matings;
    matings.reserve(children.size());
    for (auto& [parents, kids] : children) {
        std::sort(kids.begin(), kids.end());
        matings.push_back(Mating{0, parents.first, parents.second, std::move(kids)});
    }
    std::sort(matings.begin(), matings.end(), [](const Mating& a, const Mating& b) {
        return a.child_ids.front() < b.child_ids.front();
    });
    for (std::size_t i = 0; i < matings.size(); ++i) {
        matings[i].mating_id = static_cast<MatingId>(i + 1);
    }
    return matings;
}

std::vector<Mating> derive_matings(const Pedigree& p) { return derive_matings(p.individuals()); }

Pedigree canonical_order(const Pedigree& p) {
    auto individuals = p.individuals();
    std::sort(individuals.begin(), individuals.end(),
              [](const Individual& a, const Individual& b) { return a.id < b.id; });
    return Pedigree(std::move(individuals), p.variant_names());
}

}  // namespace breakloops
