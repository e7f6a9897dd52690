#pragma once

#include <linkgraph/multigraph.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linkgraph {

inline constexpr std::size_t default_link_limit = 1'000'000;

/// An oriented walk (v0, e1, v1, ..., e_l, v_l) in which consecutive edges
/// differ. Units are stored as indices into the source graph, vertices at even
/// positions and edges at odd ones.
class Arc {
public:
    Arc() = default;
    /// Unchecked; use make() for untrusted input.
    explicit Arc(std::vector<std::uint32_t> units) : _units(std::move(units)) {}

    static auto at_vertex(VertexIndex v) -> Arc { return Arc(std::vector<std::uint32_t>{ v }); }
    /// Validates incidence and the no-immediate-reuse rule; throws NotALink.
    static auto make(const Multigraph & g, std::vector<std::uint32_t> units) -> Arc;

    auto length() const -> std::size_t { return _units.size() / 2; }
    auto units() const -> std::span<const std::uint32_t> { return _units; }
    auto vertex(std::size_t i) const -> VertexIndex { return _units[2 * i]; }
    /// 1-based, matching e_1 .. e_l.
    auto edge(std::size_t i) const -> EdgeIndex { return _units[2 * i - 1]; }
    auto tail() const -> VertexIndex { return _units.front(); }
    auto head() const -> VertexIndex { return _units.back(); }
    auto tail_edge() const -> EdgeIndex { return edge(1); }
    auto head_edge() const -> EdgeIndex { return edge(length()); }

    auto reversed() const -> Arc;
    /// Sub-arc from vertex position i to j; for i > j this is the reverse of segment(j, i).
    auto segment(std::size_t i, std::size_t j) const -> Arc;
    /// Appends one edge at the head.
    auto extended(const Multigraph & g, EdgeIndex e) const -> Arc;

    auto valid_in(const Multigraph & g) const -> bool;

    friend auto operator<=>(const Arc &, const Arc &) = default;
    friend auto operator==(const Arc &, const Arc &) -> bool = default;

private:
    std::vector<std::uint32_t> _units;
};

/// An arc identified with its reverse; stored as the lexicographically
/// smaller orientation.
class Link {
public:
    Link() = default;
    static auto of(const Arc & a) -> Link;
    static auto of_units(std::span<const std::uint32_t> units) -> Link;

    auto canonical() const -> const Arc & { return _canonical; }
    auto length() const -> std::size_t { return _canonical.length(); }
    auto units() const -> std::span<const std::uint32_t> { return _canonical.units(); }

    friend auto operator<=>(const Link &, const Link &) = default;
    friend auto operator==(const Link &, const Link &) -> bool = default;

private:
    explicit Link(Arc a) : _canonical(std::move(a)) {}
    Arc _canonical;
};

/// A vertex (even length) or an edge (odd length).
struct Unit {
    bool is_edge = false;
    std::uint32_t index = 0;

    friend auto operator<=>(const Unit &, const Unit &) = default;
};

struct ShuntTrace {
    Arc base;
    std::size_t window = 0;
    std::vector<Link> images;
    std::vector<Link> steps;
};

struct Shunt {
    Link via;
    Link to;

    friend auto operator<=>(const Shunt &, const Shunt &) = default;
};

struct ShuntSearch {
    bool reachable = false;
    /// The (l+1)-links shunted through, in order; replays from L to R.
    std::vector<Link> witness;
};

/// True when the units are smaller than or equal to their reversal.
auto is_canonical(std::span<const std::uint32_t> units) -> bool;

/// Flat sorted storage for many links of one length; lookup by binary search
/// on exact unit sequences.
class LinkSet {
public:
    explicit LinkSet(std::size_t length = 0) : _length(length) {}

    auto length() const -> std::size_t { return _length; }
    auto size() const -> std::size_t { return _data.size() / stride(); }
    auto empty() const -> bool { return _data.empty(); }
    auto units(std::size_t i) const -> std::span<const std::uint32_t>
    {
        return std::span<const std::uint32_t>(_data).subspan(i * stride(), stride());
    }
    auto at(std::size_t i) const -> Link { return Link::of_units(units(i)); }

    void push_back(std::span<const std::uint32_t> canonical_units);
    void sort_unique();
    /// Requires sorted contents.
    auto find(std::span<const std::uint32_t> canonical_units) const -> std::optional<std::size_t>;
    auto find(const Link & l) const -> std::optional<std::size_t> { return find(l.units()); }
    /// Accepts either orientation.
    auto find_either(std::span<const std::uint32_t> units) const -> std::optional<std::size_t>;

    friend auto operator==(const LinkSet &, const LinkSet &) -> bool = default;

private:
    auto stride() const -> std::size_t { return 2 * _length + 1; }

    std::size_t _length;
    std::vector<std::uint32_t> _data;
};

/// Depth-first enumeration of l-arcs in lexicographic order. The callback sees
/// a scratch buffer that is overwritten after it returns.
void for_each_arc(const Multigraph & g, std::size_t ell,
        const std::function<void (std::span<const std::uint32_t>)> & visit);

auto enumerate_arcs(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> std::vector<Arc>;
auto enumerate_links(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> std::vector<Link>;
auto link_set(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> LinkSet;
auto count_links(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> std::size_t;

auto canonicalize(const Arc & a) -> Link;
auto is_path(const Link & l) -> bool;
auto is_cycle(const Link & l) -> bool;
auto middle_unit(const Link & l) -> Unit;
/// The middle segment of the given length; l.length() - length must be even.
auto middle_segment(const Link & l, std::size_t length) -> Link;

/// Concatenation at a shared vertex; throws EndpointMismatch or BacktrackEdge.
auto conjunction(const Arc & a, const Arc & b) -> Arc;
auto shunt_trace(const Arc & base, std::size_t ell) -> ShuntTrace;
/// The two l-windows of an (l+1)-link.
auto windows(const Link & q) -> std::pair<Link, Link>;

auto one_step_shunts(const Multigraph & g, const Link & l) -> std::vector<Shunt>;
auto can_shunt(const Multigraph & g, const Link & from, const Link & to) -> ShuntSearch;
/// Shunting where every image must satisfy `allowed`; both ends must satisfy it too.
auto can_shunt_restricted(const Multigraph & g, const Link & from, const Link & to,
        const std::function<bool (const Link &)> & allowed) -> ShuntSearch;

/// Membership masks of the middle units of all l-links.
struct HubUnits {
    std::vector<bool> vertices;
    std::vector<bool> edges;
};

auto hub_units(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> HubUnits;
/// The subgraph induced by the middle units of l-links: induced on the middle
/// vertices for even l, edge-induced by the middle edges for odd l.
auto hub_subgraph(const Multigraph & g, std::size_t ell, std::size_t limit = default_link_limit) -> Multigraph;

auto format(const Multigraph & g, const Arc & a) -> std::string;
auto format(const Multigraph & g, const Link & l) -> std::string;
auto format_units(const Multigraph & g, std::span<const std::uint32_t> units) -> std::string;
/// Accepts "[v0 e1 v1 ...]" or "(v0 e1 v1 ...)"; throws NotALink.
auto parse_arc(const Multigraph & g, std::string_view text) -> Arc;
auto parse_link(const Multigraph & g, std::string_view text) -> Link;

}
