#include "breakloops/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>

namespace breakloops {

std::size_t PedigreeGraph::add_vertex(Vertex v) {
    auto [it, inserted] = lookup_.emplace(v, vertices_.size());
    if (!inserted) {
        throw StructuralError("duplicate graph vertex");
    }
    vertices_.push_back(v);
    incident_.emplace_back();
    return it->second;
}

std::size_t PedigreeGraph::add_edge(std::size_t person, std::size_t mating, EdgeRole role) {
    if (person >= vertices_.size() || mating >= vertices_.size() ||
        vertices_[person].kind != VertexKind::person || vertices_[mating].kind != VertexKind::mating) {
        throw StructuralError("edges must join a person vertex to a mating vertex");
    }
    const std::size_t e = edges_.size();
    edges_.push_back({person, mating, role});
    incident_[person].push_back(e);
    incident_[mating].push_back(e);
    return e;
}

std::size_t PedigreeGraph::other_end(std::size_t e, std::size_t v) const {
    const auto& edge = edges_[e];
    return edge.person == v ? edge.mating : edge.person;
}

std::optional<std::size_t> PedigreeGraph::find(Vertex v) const {
    auto it = lookup_.find(v);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

PedigreeGraph PedigreeGraph::subgraph(const std::vector<bool>& keep_vertex,
                                      const std::vector<bool>& keep_edge) const {
    PedigreeGraph out;
    std::vector<std::size_t> remap(vertices_.size(), 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (keep_vertex[v]) remap[v] = out.add_vertex(vertices_[v]);
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!keep_edge[e]) continue;
        const auto& edge = edges_[e];
        if (!keep_vertex[edge.person] || !keep_vertex[edge.mating]) {
            throw StructuralError("kept edge joins a removed vertex");
        }
        out.add_edge(remap[edge.person], remap[edge.mating], edge.role);
    }
    return out;
}

PedigreeGraph PedigreeGraph::without_edge(std::size_t e) const {
    std::vector<bool> keep_vertex(vertices_.size(), true);
    std::vector<bool> keep_edge(edges_.size(), true);
    keep_edge.at(e) = false;
    return subgraph(keep_vertex, keep_edge);
}

std::vector<PersonId> TrimmedGraph::persons() const {
    std::vector<PersonId> ids;
    for (const auto& v : graph.vertices()) {
        if (v.kind == VertexKind::person) ids.push_back(v.ref_id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<MatingId> TrimmedGraph::matings() const {
    std::vector<MatingId> ids;
    for (const auto& v : graph.vertices()) {
        if (v.kind == VertexKind::mating) ids.push_back(v.ref_id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<MatingId> TrimmedGraph::parental_matings(PersonId person) const {
    std::vector<MatingId> ids;
    auto v = graph.find_person(person);
    if (!v) return ids;
    for (auto e : graph.incident(*v)) {
        const auto& edge = graph.edge(e);
        if (edge.role == EdgeRole::parent_link) ids.push_back(graph.vertex(edge.mating).ref_id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::size_t TrimmedGraph::parent_link_count(PersonId person) const {
    return parental_matings(person).size();
}

PedigreeCounts count_pedigree(const Pedigree& p) {
    return {p.size(), p.matings().size(), p.offspring_count()};
}

PedigreeGraph build_graph(const Pedigree& p) {
    PedigreeGraph g;
    std::vector<PersonId> ids;
    ids.reserve(p.size());
    for (const auto& ind : p.individuals()) ids.push_back(ind.id);
    std::sort(ids.begin(), ids.end());
    for (auto id : ids) g.add_vertex({VertexKind::person, id});

    for (const auto& m : p.matings()) {
        const auto mv = g.add_vertex({VertexKind::mating, m.mating_id});
        g.add_edge(*g.find_person(m.father_id), mv, EdgeRole::parent_link);
        g.add_edge(*g.find_person(m.mother_id), mv, EdgeRole::parent_link);
        for (auto child : m.child_ids) g.add_edge(*g.find_person(child), mv, EdgeRole::child_link);
    }
    return g;
}

bool check_loops(const Pedigree& p) {
    const auto c = count_pedigree(p);
    return c.matings + c.offspring + 1 > c.individuals;
}

std::size_t loop_count(const Pedigree& p) {
    if (connected_component_count(build_graph(p)) > 1) {
        throw StructuralError("loop_count expects one connected family");
    }
    const auto c = count_pedigree(p);
    const auto edges_plus_one = c.matings + c.offspring + 1;
    return edges_plus_one > c.individuals ? edges_plus_one - c.individuals : 0;
}

bool has_cycle_dfs(const PedigreeGraph& g) {
    struct Frame {
        std::size_t vertex;
        std::optional<std::size_t> via_edge;
        std::size_t next = 0;
    };
    std::vector<bool> visited(g.vertex_count(), false);
    std::vector<Frame> stack;
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        stack.push_back({start, std::nullopt});
        while (!stack.empty()) {
            auto& top = stack.back();
            const auto& incident = g.incident(top.vertex);
            if (top.next == incident.size()) {
                stack.pop_back();
                continue;
            }
            const auto e = incident[top.next++];
            if (top.via_edge && *top.via_edge == e) continue;
            const auto u = g.other_end(e, top.vertex);
            if (visited[u]) return true;  // back edge
            visited[u] = true;
            stack.push_back({u, e});
        }
    }
    return false;
}

std::size_t connected_component_count(const PedigreeGraph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t components = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto e : g.incident(v)) {
                auto u = g.other_end(e, v);
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    return components;
}

TrimmedGraph trim_leaves(const PedigreeGraph& g) {
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.vertex(a) < g.vertex(b); });
    return trim_leaves(g, order);
}

TrimmedGraph trim_leaves(const PedigreeGraph& g, std::span<const std::size_t> visit_order) {
    const auto n = g.vertex_count();
    if (visit_order.size() != n) {
        throw StructuralError("visit order must list every vertex once");
    }
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> alive_vertex(n, true);
    std::vector<bool> alive_edge(g.edge_count(), true);

    std::deque<std::size_t> worklist;
    for (auto v : visit_order) {
        if (degree[v] <= 1) worklist.push_back(v);
    }
    while (!worklist.empty()) {
        const auto v = worklist.front();
        worklist.pop_front();
        if (!alive_vertex[v] || degree[v] > 1) continue;
        alive_vertex[v] = false;
        for (auto e : g.incident(v)) {
            if (!alive_edge[e]) continue;
            alive_edge[e] = false;
            const auto u = g.other_end(e, v);
            if (--degree[u] <= 1 && alive_vertex[u]) worklist.push_back(u);
        }
    }

    TrimmedGraph t{g.subgraph(alive_vertex, alive_edge), {}};
    for (std::size_t v = 0; v < t.graph.vertex_count(); ++v) {
        const auto& vx = t.graph.vertex(v);
        if (vx.kind == VertexKind::person) t.trimmed_degree[vx.ref_id] = t.graph.degree(v);
    }
    return t;
}

std::vector<bool> bridge_edges(const PedigreeGraph& g) {
    const auto n = g.vertex_count();
    std::vector<bool> bridge(g.edge_count(), false);
    std::vector<std::size_t> discovered(n, 0), low(n, 0);
    std::size_t clock = 0;

    struct Frame {
        std::size_t vertex;
        std::optional<std::size_t> via_edge;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (discovered[s] != 0) continue;
        discovered[s] = low[s] = ++clock;
        stack.push_back({s, std::nullopt});
        while (!stack.empty()) {
            auto& top = stack.back();
            const auto v = top.vertex;
            const auto& incident = g.incident(v);
            if (top.next < incident.size()) {
                const auto e = incident[top.next++];
                if (top.via_edge && *top.via_edge == e) continue;
                const auto u = g.other_end(e, v);
                if (discovered[u] == 0) {
                    discovered[u] = low[u] = ++clock;
                    stack.push_back({u, e});
                } else {
                    low[v] = std::min(low[v], discovered[u]);
                }
                continue;
            }
            const auto via = top.via_edge;
            stack.pop_back();
            if (!via) continue;
            const auto parent = g.other_end(*via, v);
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] > discovered[parent]) bridge[*via] = true;
        }
    }
    return bridge;
}

void write_dot(std::ostream& out, const PedigreeGraph& g) {
    out << "graph pedigree {\n";
    for (const auto& v : g.vertices()) {
        if (v.kind == VertexKind::person) {
            out << "  v" << v.ref_id << " [shape=box,label=\"" << v.ref_id << "\"];\n";
        } else {
            out << "  m" << v.ref_id << " [shape=point,xlabel=\"m" << v.ref_id << "\"];\n";
        }
    }
    for (const auto& e : g.edges()) {
        out << "  v" << g.vertex(e.person).ref_id << " -- m" << g.vertex(e.mating).ref_id;
        if (e.role == EdgeRole::child_link) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace breakloops
