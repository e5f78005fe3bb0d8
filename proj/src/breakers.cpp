#include "breakloops/breakers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace breakloops {

namespace {

bool definitely_less(double a, double b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return a < b - kTieTolerance * scale;
}

bool tied(double a, double b) { return !definitely_less(a, b) && !definitely_less(b, a); }

std::size_t parent_edge(const PedigreeGraph& g, PersonId person, MatingId mating) {
    auto pv = g.find_person(person);
    auto mv = g.find_mating(mating);
    if (pv && mv) {
        for (auto e : g.incident(*pv)) {
            const auto& edge = g.edge(e);
            if (edge.mating == *mv && edge.role == EdgeRole::parent_link) return e;
        }
    }
    throw StructuralError("person " + std::to_string(person) + " is not a parent of mating " +
                          std::to_string(mating) + " in the trimmed graph");
}

TrimmedGraph sever(const TrimmedGraph& t, PersonId person, MatingId mating) {
    return trim_leaves(t.graph.without_edge(parent_edge(t.graph, person, mating)));
}

// Parental matings of `person` reachable through edges that lie on a cycle.
std::vector<MatingId> cyclic_parental_matings(const TrimmedGraph& t, PersonId person,
                                              const std::vector<bool>& bridges) {
    std::vector<MatingId> ids;
    auto v = t.graph.find_person(person);
    if (!v) return ids;
    for (auto e : t.graph.incident(*v)) {
        const auto& edge = t.graph.edge(e);
        if (edge.role == EdgeRole::parent_link && !bridges[e]) {
            ids.push_back(t.graph.vertex(edge.mating).ref_id);
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

const char* to_string(LoopCase c) {
    switch (c) {
        case LoopCase::empty: return "empty";
        case LoopCase::no_multiple_matings: return "no-MM";
        case LoopCase::multiple_matings: return "MM";
    }
    return "?";
}

const char* to_string(Method m) { return m == Method::greedy ? "greedy" : "mst"; }

void BreakPlan::add(BreakStep step) {
    total_log_complexity += step.log_count;
    steps.push_back(step);
}

LoopCase classify_case(const TrimmedGraph& t) {
    if (t.empty()) return LoopCase::empty;
    bool multiple = false;
    const auto& g = t.graph;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.vertex(v).kind != VertexKind::person) continue;
        std::size_t parent_links = 0;
        for (auto e : g.incident(v)) {
            if (g.edge(e).role == EdgeRole::parent_link) ++parent_links;
        }
        if (g.degree(v) == 0) {
            throw StructuralError("isolated person " + std::to_string(g.vertex(v).ref_id) +
                                  " in trimmed graph");
        }
        if (parent_links >= 2) multiple = true;
    }
    return multiple ? LoopCase::multiple_matings : LoopCase::no_multiple_matings;
}

MatingSubgraph build_subgraph(const TrimmedGraph& t, const GenotypeWeights& weights) {
    const auto& g = t.graph;
    MatingSubgraph sg;
    sg.vertices = t.matings();
    for (auto person : t.persons()) {
        const auto v = *g.find_person(person);
        std::optional<MatingId> child_of, parent_of;
        for (auto e : g.incident(v)) {
            const auto& edge = g.edge(e);
            auto& slot = edge.role == EdgeRole::parent_link ? parent_of : child_of;
            if (slot) {
                throw StructuralError("person " + std::to_string(person) +
                                      " has multiple matings in the loop and cannot be one edge");
            }
            slot = g.vertex(edge.mating).ref_id;
        }
        if (!child_of || !parent_of) {
            throw StructuralError("person " + std::to_string(person) +
                                  " does not connect two matings in the trimmed graph");
        }
        sg.edges.push_back({person, *child_of, *parent_of, weights.log_count(person)});
    }
    return sg;
}

BreakPlan select_breakers_mst(const MatingSubgraph& sg) {
    BreakPlan plan;
    if (sg.vertices.empty()) return plan;

    std::map<MatingId, bool> in_tree;
    for (auto m : sg.vertices) in_tree[m] = false;
    in_tree[sg.vertices.front()] = true;
    std::size_t tree_size = 1;
    std::vector<bool> tree_edge(sg.edges.size(), false);

    while (tree_size < sg.vertices.size()) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < sg.edges.size(); ++i) {
            const auto& e = sg.edges[i];
            if (in_tree.at(e.child_mating) == in_tree.at(e.parental_mating)) continue;
            if (!best) {
                best = i;
                continue;
            }
            const auto& b = sg.edges[*best];
            // heavier first; among ties the smaller person id
            if (definitely_less(b.weight, e.weight) || (tied(b.weight, e.weight) && e.person < b.person)) {
                best = i;
            }
        }
        if (!best) {
            throw StructuralError("mating subgraph is disconnected");
        }
        const auto& chosen = sg.edges[*best];
        tree_edge[*best] = true;
        in_tree[chosen.child_mating] = true;
        in_tree[chosen.parental_mating] = true;
        ++tree_size;
    }

    for (std::size_t i = 0; i < sg.edges.size(); ++i) {
        if (tree_edge[i]) continue;
        const auto& e = sg.edges[i];
        plan.add({e.person, e.parental_mating, Method::mst, e.weight});
    }
    if (!plan.empty()) plan.method_trace.push_back(Method::mst);
    return plan;
}

double greedy_cost(PersonId person, const TrimmedGraph& t, const GenotypeWeights& weights) {
    auto it = t.trimmed_degree.find(person);
    if (it == t.trimmed_degree.end() || it->second == 0) {
        throw StructuralError("person " + std::to_string(person) + " has no trimmed degree");
    }
    return weights.log_count(person) / static_cast<double>(it->second);
}

GreedyChoice select_breaker_greedy(const TrimmedGraph& t, const GenotypeWeights& weights) {
    const auto bridges = bridge_edges(t.graph);

    std::optional<PersonId> breaker;
    double best_cost = std::numeric_limits<double>::infinity();
    for (auto person : t.persons()) {
        if (cyclic_parental_matings(t, person, bridges).empty()) continue;
        const double cost = greedy_cost(person, t, weights);
        if (!breaker || definitely_less(cost, best_cost)) {
            breaker = person;
            best_cost = cost;
        }
    }
    if (!breaker) {
        throw StructuralError("no person in the trimmed graph has a parent link on a loop");
    }

    GreedyChoice choice{*breaker, {}};
    TrimmedGraph current = t;
    while (true) {
        const auto candidates = cyclic_parental_matings(current, *breaker, bridge_edges(current.graph));
        if (candidates.empty()) break;
        const MatingId mating = candidates.front();
        choice.matings.push_back(mating);
        current = sever(current, *breaker, mating);
        if (current.empty()) break;
        auto d = current.trimmed_degree.find(*breaker);
        if (d == current.trimmed_degree.end() || d->second <= 1) break;
    }
    return choice;
}

BreakPlan plan_breaks(const Pedigree& p, const GenotypeWeights& weights) {
    BreakPlan plan;
    TrimmedGraph t = trim_leaves(build_graph(p));
    while (true) {
        switch (classify_case(t)) {
            case LoopCase::empty:
                return plan;
            case LoopCase::multiple_matings: {
                const auto choice = select_breaker_greedy(t, weights);
                plan.method_trace.push_back(Method::greedy);
                const double log_count = weights.log_count(choice.breaker);
                for (auto mating : choice.matings) {
                    plan.add({choice.breaker, mating, Method::greedy, log_count});
                    t = sever(t, choice.breaker, mating);
                }
                break;
            }
            case LoopCase::no_multiple_matings: {
                const auto mst = select_breakers_mst(build_subgraph(t, weights));
                for (const auto& step : mst.steps) plan.add(step);
                plan.method_trace.insert(plan.method_trace.end(), mst.method_trace.begin(),
                                         mst.method_trace.end());
                return plan;
            }
        }
    }
}

}  // namespace breakloops
