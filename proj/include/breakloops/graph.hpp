#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "breakloops/pedigree.hpp"

namespace breakloops {

enum class VertexKind { person, mating };

struct Vertex {
    VertexKind kind = VertexKind::person;
    std::int64_t ref_id = 0;  // PersonId or MatingId

    auto operator<=>(const Vertex&) const = default;
};

enum class EdgeRole { parent_link, child_link };

/// Edge between a person vertex and a mating vertex (indices into the
/// graph's vertex list).
struct Edge {
    std::size_t person = 0;
    std::size_t mating = 0;
    EdgeRole role = EdgeRole::parent_link;

    bool operator==(const Edge&) const = default;
};

/// Bipartite person/mating graph. Parents attach to their mating with
/// parent_link edges, children with child_link edges.
class PedigreeGraph {
public:
    std::size_t add_vertex(Vertex v);
    std::size_t add_edge(std::size_t person, std::size_t mating, EdgeRole role);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    /// Edge indices touching vertex `v`.
    const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
    std::size_t degree(std::size_t v) const { return incident_[v].size(); }
    std::size_t other_end(std::size_t e, std::size_t v) const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    std::optional<std::size_t> find(Vertex v) const;
    std::optional<std::size_t> find_person(PersonId id) const {
        return find({VertexKind::person, id});
    }
    std::optional<std::size_t> find_mating(MatingId id) const {
        return find({VertexKind::mating, id});
    }

    /// Copy keeping only the vertices and edges flagged true; kept edges must
    /// join kept vertices.
    PedigreeGraph subgraph(const std::vector<bool>& keep_vertex, const std::vector<bool>& keep_edge) const;
    PedigreeGraph without_edge(std::size_t e) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
    std::map<Vertex, std::size_t> lookup_;
};

/// The 2-core left after recursively deleting leaves.
struct TrimmedGraph {
    PedigreeGraph graph;
    /// Remaining degree of each surviving person.
    std::map<PersonId, std::size_t> trimmed_degree;

    bool empty() const { return graph.empty(); }
    std::vector<PersonId> persons() const;
    std::vector<MatingId> matings() const;
    /// Matings in which `person` is a parent inside the trimmed graph, ascending.
    std::vector<MatingId> parental_matings(PersonId person) const;
    std::size_t parent_link_count(PersonId person) const;
};

/// Pedigree size counters.
struct PedigreeCounts {
    std::size_t individuals = 0;  // n_i
    std::size_t matings = 0;      // n_m
    std::size_t offspring = 0;    // n_0
};

PedigreeCounts count_pedigree(const Pedigree& p);

/// One person vertex per individual (ascending id), then one mating vertex
/// per mating (ascending mating id). |E| = 2 n_m + n_0 and |V| = n_i + n_m.
PedigreeGraph build_graph(const Pedigree& p);

/// Loop test from counts alone: n_m + n_0 > n_i - 1.
bool check_loops(const Pedigree& p);

/// Number of independent loops of a connected family,
/// max(0, n_m + n_0 - n_i + 1). Throws StructuralError when `p` is not
/// connected.
std::size_t loop_count(const Pedigree& p);

/// Depth-first search for a back edge. Works on any graph; every component
/// is searched.
bool has_cycle_dfs(const PedigreeGraph& g);

std::size_t connected_component_count(const PedigreeGraph& g);

/// Recursively removes vertices of degree <= 1. The worklist starts in
/// ascending (kind, ref_id) order.
TrimmedGraph trim_leaves(const PedigreeGraph& g);

/// Same, seeding the worklist in `visit_order` (a permutation of vertex
/// indices). The surviving set does not depend on the order.
TrimmedGraph trim_leaves(const PedigreeGraph& g, std::span<const std::size_t> visit_order);

/// Marks edges whose removal disconnects their component.
std::vector<bool> bridge_edges(const PedigreeGraph& g);

/// Graphviz DOT export for debugging. Persons are boxes labelled by id,
/// matings are points labelled m<id>; parent links are solid, child links
/// dashed.
void write_dot(std::ostream& out, const PedigreeGraph& g);

}  // namespace breakloops
