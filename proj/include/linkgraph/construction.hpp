#pragma once

#include <linkgraph/links.hpp>

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace linkgraph {

/// A graph derived from a source multigraph: vertices are l-links, edges are
/// labelled by (l+1)-links joining their two l-windows. Both are kept in
/// canonical link order, so vertex and edge indices are reproducible.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::shared_ptr<const Multigraph> source, std::size_t ell, LinkSet vertices, LinkSet labels,
            std::vector<std::pair<std::uint32_t, std::uint32_t>> ends);

    auto source() const -> const Multigraph & { return *_source; }
    auto source_ptr() const -> const std::shared_ptr<const Multigraph> & { return _source; }
    auto ell() const -> std::size_t { return _ell; }

    auto vertex_count() const -> std::size_t { return _vertices.size(); }
    auto edge_count() const -> std::size_t { return _labels.size(); }
    auto vertices() const -> const LinkSet & { return _vertices; }
    auto labels() const -> const LinkSet & { return _labels; }
    auto vertex(std::uint32_t v) const -> Link { return _vertices.at(v); }
    auto label(std::uint32_t e) const -> Link { return _labels.at(e); }
    auto endpoints(std::uint32_t e) const -> std::pair<std::uint32_t, std::uint32_t> { return _ends[e]; }
    auto incident_edges(std::uint32_t v) const -> std::span<const std::uint32_t> { return _incidence[v]; }
    auto degree(std::uint32_t v) const -> std::size_t { return _incidence[v].size(); }
    auto find_vertex(const Link & l) const -> std::optional<std::uint32_t>;

    auto underlying_simple() const -> SimpleGraph;
    /// Copy as a plain multigraph whose ids are the formatted links.
    auto to_multigraph() const -> Multigraph;

    friend auto operator==(const LabeledGraph & a, const LabeledGraph & b) -> bool;

private:
    std::shared_ptr<const Multigraph> _source;
    std::size_t _ell = 0;
    LinkSet _vertices;
    LinkSet _labels;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> _ends;
    std::vector<std::vector<std::uint32_t>> _incidence;
};

auto link_graph(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> LabeledGraph;
/// Throws NotALink when an element is not a link of g of the right length.
auto partial_link_graph(const Multigraph & g, std::size_t ell, const std::vector<Link> & links,
        const std::vector<Link> & steps) -> LabeledGraph;
/// Collapses parallel edges, keeping the least label of each class.
auto simplify(const LabeledGraph & h) -> LabeledGraph;
auto path_graph(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> LabeledGraph;
/// Same graph with one edge removed; used to build corrupted instances.
auto drop_edge(const LabeledGraph & h, std::uint32_t e) -> LabeledGraph;
auto is_connected(const LabeledGraph & h) -> bool;

/// Directed counterpart over arcs. Vertex labels are arcs of the source;
/// arc labels are one unit longer.
struct LabeledDigraph {
    std::size_t ell = 0;
    std::vector<Arc> vertices;
    struct Edge {
        std::uint32_t tail;
        std::uint32_t head;
        Arc label;
    };
    std::vector<Edge> arcs;

    auto underlying_simple() const -> SimpleGraph;
};

auto arc_digraph(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> LabeledDigraph;
/// Line digraph of a labelled digraph: one vertex per arc, labelled by the
/// arc's label; an arc a -> b whenever head(a) = tail(b). Labels of new arcs
/// are obtained by overlapping the labels of a and b.
auto line_digraph(const LabeledDigraph & d, std::size_t limit = default_link_limit) -> LabeledDigraph;
/// The arc digraph at length one, then line_digraph applied ell - 1 times.
auto iterated_line_digraph(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit)
    -> LabeledDigraph;
/// Maps each vertex of the iterated line digraph to the arc its chain
/// flattens to and checks the map is an isomorphism of labelled digraphs
/// onto the arc digraph.
auto digraph_natural_iso_check(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> bool;
auto digraph_natural_iso_check(const LabeledDigraph & arcs, const LabeledDigraph & iterated) -> bool;

/// Vertex and edge partitions of a derived graph. Keys are present for the
/// natural partition and empty for hand-built ones.
struct AlmostStandardPartition {
    std::vector<std::vector<std::uint32_t>> vertex_parts;
    std::vector<std::vector<std::uint32_t>> edge_parts;
    std::vector<Link> vertex_keys;
    std::vector<Link> edge_keys;
};

struct PartitionReport {
    bool a = false;
    bool b = false;
    bool c = false;
    bool d = false;
    bool e = false;

    auto all() const -> bool { return a && b && c && d && e; }
};

/// Parts keyed by middle (l-2)-segments of vertices and middle
/// (l-1)-segments of edge labels, in key order. Throws WindowTooShort.
auto natural_partition(const LabeledGraph & h) -> AlmostStandardPartition;
/// Throws PartitionMismatch unless both families partition the graph.
auto verify_almost_standard(const LabeledGraph & h, const AlmostStandardPartition & p) -> PartitionReport;
/// One vertex per vertex part and one edge per edge part. Vertex and edge ids
/// are the formatted keys, or "V<i>" / "E<i>" for unkeyed parts.
/// Throws PartitionMismatch if an edge part does not meet exactly two parts.
auto quotient(const LabeledGraph & h, const AlmostStandardPartition & p) -> Multigraph;
/// Checks that sending each part to its key is an isomorphism from the
/// quotient onto an induced subgraph of the link graph two levels down.
auto quotient_embedding_check(const LabeledGraph & h, const AlmostStandardPartition & p,
        const LabeledGraph & lower) -> bool;
auto quotient_embedding_check(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> bool;

struct ConnectivityEvidence {
    bool hub_connected = false;
    /// False when the hub carries no l-link of its own.
    bool hub_has_links = false;
    /// Result of the hub test, or of the middle-unit test when the hub has no links.
    bool criterion = false;
    /// Breadth-first search over the constructed link graph.
    bool direct = false;
};

/// Decides connectivity of the l-link graph by shunting alone, without
/// building it: the hub must be connected and every l-link must shunt onto an
/// l-link of the hub. When the hub has no l-links of its own, falls back to
/// requiring that links sharing a middle unit shunt to each other.
auto link_graph_connected(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> bool;
auto connectivity_evidence(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit)
    -> ConnectivityEvidence;

auto to_json(const LabeledGraph & h) -> nlohmann::json;
auto to_json(const LabeledDigraph & d, const Multigraph & g) -> nlohmann::json;
auto to_dot(const LabeledGraph & h, const AlmostStandardPartition * partition = nullptr) -> std::string;
auto serialize_edge_list(const LabeledGraph & h) -> std::string;

}
