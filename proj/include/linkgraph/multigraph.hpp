#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linkgraph {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Sentinel for distances and girth of graphs where the quantity is unbounded.
inline constexpr std::size_t infinite = static_cast<std::size_t>(-1);

struct EdgeSpec {
    std::string id;
    std::string u;
    std::string v;
};

/// Loopless undirected multigraph with string identifiers.
///
/// Vertices are indexed in lexicographic order of their ids and edges in
/// lexicographic order of theirs, so comparing indices is the same as
/// comparing ids. Everything downstream (link canonicalisation, derived graph
/// numbering) leans on that. Parallel edges are distinct edges with distinct
/// ids; there is no multiplicity counter.
class Multigraph {
public:
    Multigraph() = default;

    /// Throws UnknownVertex for dangling endpoints, LoopRejected for loops and
    /// InvalidParameter for duplicate ids.
    Multigraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);

    auto vertex_count() const -> std::size_t { return _vertex_ids.size(); }
    auto edge_count() const -> std::size_t { return _edge_ids.size(); }
    auto null() const -> bool { return _vertex_ids.empty(); }

    auto vertex_id(VertexIndex v) const -> const std::string & { return _vertex_ids[v]; }
    auto edge_id(EdgeIndex e) const -> const std::string & { return _edge_ids[e]; }
    auto vertex_ids() const -> const std::vector<std::string> & { return _vertex_ids; }
    auto edge_ids() const -> const std::vector<std::string> & { return _edge_ids; }

    auto find_vertex(std::string_view id) const -> std::optional<VertexIndex>;
    auto find_edge(std::string_view id) const -> std::optional<EdgeIndex>;
    auto vertex_index(std::string_view id) const -> VertexIndex;
    auto edge_index(std::string_view id) const -> EdgeIndex;

    auto endpoints(EdgeIndex e) const -> std::pair<VertexIndex, VertexIndex> { return _ends[e]; }
    auto other_end(EdgeIndex e, VertexIndex v) const -> VertexIndex
    {
        return _ends[e].first == v ? _ends[e].second : _ends[e].first;
    }
    auto incident(EdgeIndex e, VertexIndex v) const -> bool
    {
        return _ends[e].first == v || _ends[e].second == v;
    }

    /// Incident edges in ascending edge index order.
    auto incident_edges(VertexIndex v) const -> std::span<const EdgeIndex> { return _incidence[v]; }
    auto degree(VertexIndex v) const -> std::size_t { return _incidence[v].size(); }

    auto edge_specs() const -> std::vector<EdgeSpec>;

    friend auto operator==(const Multigraph &, const Multigraph &) -> bool = default;

private:
    std::vector<std::string> _vertex_ids;
    std::vector<std::string> _edge_ids;
    std::vector<std::pair<VertexIndex, VertexIndex>> _ends;
    std::vector<std::vector<EdgeIndex>> _incidence;
};

/// Plain simple graph on 0..n-1 with sorted adjacency lists. The algorithms
/// that do not care about labels (colouring, minors, connectivity) run on this.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : _adj(n) {}

    /// Ignores loops and duplicate edges.
    void add_edge(std::uint32_t u, std::uint32_t v);
    /// Sorts and deduplicates adjacency lists; call once after add_edge.
    void finalise();

    auto size() const -> std::size_t { return _adj.size(); }
    auto edge_count() const -> std::size_t;
    auto neighbours(std::uint32_t v) const -> std::span<const std::uint32_t> { return _adj[v]; }
    auto degree(std::uint32_t v) const -> std::size_t { return _adj[v].size(); }
    auto adjacent(std::uint32_t u, std::uint32_t v) const -> bool;

private:
    std::vector<std::vector<std::uint32_t>> _adj;
};

auto underlying_simple(const Multigraph & g) -> SimpleGraph;

// ---- generators -----------------------------------------------------------

auto dipole(std::size_t t) -> Multigraph;
auto complete(std::size_t n) -> Multigraph;
auto complete_bipartite(std::size_t n, std::size_t m) -> Multigraph;
/// cycle(2) is a pair of parallel edges.
auto cycle(std::size_t n) -> Multigraph;
/// Path with n >= 1 edges (n + 1 vertices).
auto path(std::size_t n) -> Multigraph;
auto petersen() -> Multigraph;
/// Hub "h" joined to every vertex of a rim cycle of length n.
auto wheel(std::size_t n) -> Multigraph;
/// Seeded random loopless multigraph with exactly n vertices and m edges.
auto random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed) -> Multigraph;
/// Disjoint union; ids are prefixed with "a." and "b." respectively.
auto disjoint_union(const Multigraph & a, const Multigraph & b) -> Multigraph;

// ---- metrics ----------------------------------------------------------------

auto degree(const Multigraph & g, std::string_view v) -> std::size_t;
auto max_degree(const Multigraph & g) -> std::size_t;
auto min_degree(const Multigraph & g) -> std::size_t;
auto degeneracy(const Multigraph & g) -> std::size_t;
/// Vertex set of a subgraph whose minimum degree equals the degeneracy.
auto degeneracy_core(const Multigraph & g) -> std::vector<VertexIndex>;
auto girth(const Multigraph & g) -> std::size_t;
auto is_connected(const Multigraph & g) -> bool;
auto components(const Multigraph & g) -> std::vector<std::vector<VertexIndex>>;
auto is_biconnected(const Multigraph & g) -> bool;
auto diameter(const Multigraph & g) -> std::size_t;
auto has_cycle(const Multigraph & g) -> bool;
auto is_regular(const Multigraph & g) -> std::optional<std::size_t>;

auto is_connected(const SimpleGraph & g) -> bool;
auto components(const SimpleGraph & g) -> std::vector<std::vector<std::uint32_t>>;

auto induced_subgraph(const Multigraph & g, std::span<const std::string> vertices) -> Multigraph;
auto induced_subgraph(const Multigraph & g, std::span<const VertexIndex> vertices) -> Multigraph;
auto edge_subgraph(const Multigraph & g, std::span<const std::string> edges, std::span<const std::string> vertices)
    -> Multigraph;
auto edge_subgraph(const Multigraph & g, std::span<const EdgeIndex> edges, std::span<const VertexIndex> vertices)
    -> Multigraph;
auto remove_vertices(const Multigraph & g, std::span<const VertexIndex> vertices) -> Multigraph;
/// Repeatedly deletes vertices of degree one.
auto peel_leaves(const Multigraph & g) -> Multigraph;

// ---- I/O ----------------------------------------------------------------------

auto parse_edge_list(std::string_view text) -> Multigraph;
auto read_edge_list(const std::string & path) -> Multigraph;
auto serialize_edge_list(const Multigraph & g) -> std::string;
auto to_dot(const Multigraph & g, std::string_view name = "G") -> std::string;

}
