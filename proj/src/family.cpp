#include "breakloops/family.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace breakloops {

namespace {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

const std::string kSyntheticVariant = "__uniform__";

}  // namespace

Pedigree fix_parents(const Pedigree& p) {
    auto individuals = p.individuals();

    std::vector<std::size_t> order(individuals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return individuals[a].id < individuals[b].id;
    });

    // (known parent, missing side is father) -> placeholder id
    std::map<std::pair<PersonId, bool>, PersonId> shared;
    std::vector<Individual> placeholders;
    PersonId next_id = p.max_id() + 1;

    for (auto pos : order) {
        auto& ind = individuals[pos];
        if (ind.has_both_parents() || ind.is_founder()) continue;

        const bool missing_father = !ind.father_id.has_value();
        const PersonId known = missing_father ? *ind.mother_id : *ind.father_id;
        auto [it, inserted] = shared.try_emplace({known, missing_father}, next_id);
        if (inserted) {
            Individual placeholder;
            placeholder.id = next_id++;
            placeholder.sex = missing_father ? Sex::male : Sex::female;
            placeholder.is_placeholder = true;
            placeholders.push_back(std::move(placeholder));
        }
        if (missing_father) {
            ind.father_id = it->second;
        } else {
            ind.mother_id = it->second;
        }
    }

    if (placeholders.empty()) return p;
    individuals.insert(individuals.end(), placeholders.begin(), placeholders.end());
    return Pedigree(std::move(individuals), p.variant_names());
}

std::vector<Pedigree> partition_families(const Pedigree& p) {
    const auto& individuals = p.individuals();
    std::unordered_map<PersonId, std::size_t> pos;
    for (std::size_t i = 0; i < individuals.size(); ++i) pos.emplace(individuals[i].id, i);

    DisjointSet components(individuals.size());
    for (std::size_t i = 0; i < individuals.size(); ++i) {
        const auto& ind = individuals[i];
        if (ind.mother_id) components.unite(i, pos.at(*ind.mother_id));
        if (ind.father_id) components.unite(i, pos.at(*ind.father_id));
    }

    // root -> member rows in input order
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < individuals.size(); ++i) members[components.find(i)].push_back(i);

    std::vector<std::pair<PersonId, std::vector<std::size_t>>> groups;
    for (auto& [root, rows] : members) {
        PersonId smallest = individuals[rows.front()].id;
        for (auto r : rows) smallest = std::min(smallest, individuals[r].id);
        groups.emplace_back(smallest, std::move(rows));
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Pedigree> families;
    families.reserve(groups.size());
    for (const auto& [smallest, rows] : groups) {
        std::vector<Individual> family;
        family.reserve(rows.size());
        for (auto r : rows) family.push_back(individuals[r]);
        families.emplace_back(std::move(family), p.variant_names());
    }
    return families;
}

PruneResult prune_unconnected(const std::vector<Pedigree>& families) {
    PruneResult result;
    for (const auto& family : families) {
        if (family.has_proband()) {
            result.families.push_back(family);
        } else {
            for (const auto& ind : family.individuals()) result.dropped_ids.push_back(ind.id);
        }
    }
    if (result.families.empty()) {
        throw PedigreeError(PedigreeError::Kind::no_proband, 0,
                            "no family contains a proband; nothing to analyze");
    }
    std::sort(result.dropped_ids.begin(), result.dropped_ids.end());
    return result;
}

std::uint64_t genotype_count(const Individual& ind, const std::vector<std::string>& variant_names) {
    if (variant_names.empty()) {
        throw PedigreeError(PedigreeError::Kind::invalid_argument, 0,
                            "genotype count needs at least one variant");
    }
    if (variant_names.size() >= 64) {
        throw PedigreeError(PedigreeError::Kind::invalid_argument, 0,
                            "too many variants for a 64-bit genotype count");
    }
    std::size_t untested = 0;
    for (const auto& v : variant_names) {
        if (ind.result_for(v) == TestResult::untested) ++untested;
    }
    return std::uint64_t{1} << untested;
}

GenotypeWeights GenotypeWeights::from_pedigree(const Pedigree& p) {
    std::vector<std::string> variants = p.variant_names();
    if (variants.empty()) variants.push_back(kSyntheticVariant);
    GenotypeWeights w;
    for (const auto& ind : p.individuals()) {
        w.set(ind.id, static_cast<double>(genotype_count(ind, variants)));
    }
    return w;
}

GenotypeWeights GenotypeWeights::uniform(const Pedigree& p, double count) {
    GenotypeWeights w;
    for (const auto& ind : p.individuals()) w.set(ind.id, count);
    return w;
}

GenotypeWeights GenotypeWeights::for_pedigree(const Pedigree& p, std::optional<double> uniform_count) {
    return uniform_count ? uniform(p, *uniform_count) : from_pedigree(p);
}

void GenotypeWeights::set(PersonId id, double count) {
    if (!(count >= 1.0)) {
        throw std::invalid_argument("genotype count must be at least 1");
    }
    counts_[id] = count;
}

double GenotypeWeights::count(PersonId id) const {
    auto it = counts_.find(id);
    if (it == counts_.end()) {
        throw std::out_of_range("no genotype count for individual " + std::to_string(id));
    }
    return it->second;
}

double GenotypeWeights::log_count(PersonId id) const { return std::log(count(id)); }

GenotypeWeights GenotypeWeights::powered(double power) const {
    GenotypeWeights w;
    for (const auto& [id, c] : counts_) w.counts_[id] = std::pow(c, power);
    return w;
}

}  // namespace breakloops
