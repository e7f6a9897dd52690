#include <linkgraph/construction.hpp>
#include <linkgraph/error.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace linkgraph {

LabeledGraph::LabeledGraph(std::shared_ptr<const Multigraph> source, std::size_t ell, LinkSet vertices, LinkSet labels,
        std::vector<std::pair<std::uint32_t, std::uint32_t>> ends) :
    _source(std::move(source)),
    _ell(ell),
    _vertices(std::move(vertices)),
    _labels(std::move(labels)),
    _ends(std::move(ends)),
    _incidence(_vertices.size())
{
    for (std::uint32_t e = 0 ; e < _ends.size() ; ++e) {
        _incidence[_ends[e].first].push_back(e);
        _incidence[_ends[e].second].push_back(e);
    }
}

auto LabeledGraph::find_vertex(const Link & l) const -> std::optional<std::uint32_t>
{
    if (auto i = _vertices.find(l))
        return static_cast<std::uint32_t>(*i);
    return std::nullopt;
}

auto LabeledGraph::underlying_simple() const -> SimpleGraph
{
    SimpleGraph s(vertex_count());
    for (auto & [u, v] : _ends)
        s.add_edge(u, v);
    s.finalise();
    return s;
}

auto LabeledGraph::to_multigraph() const -> Multigraph
{
    std::vector<std::string> vertex_ids;
    for (std::uint32_t v = 0 ; v < vertex_count() ; ++v)
        vertex_ids.push_back(format(source(), vertex(v)));
    std::vector<EdgeSpec> edges;
    for (std::uint32_t e = 0 ; e < edge_count() ; ++e)
        edges.push_back({ format(source(), label(e)), vertex_ids[_ends[e].first], vertex_ids[_ends[e].second] });
    return Multigraph(std::move(vertex_ids), std::move(edges));
}

auto operator==(const LabeledGraph & a, const LabeledGraph & b) -> bool
{
    return a._ell == b._ell && a._vertices == b._vertices && a._labels == b._labels && a._ends == b._ends &&
        (a._source == b._source || (a._source && b._source && *a._source == *b._source));
}

namespace
{
    // Keeps every candidate step whose two windows are both vertices. With
    // `strict`, a missing window is a construction error instead.
    auto assemble(std::shared_ptr<const Multigraph> source, std::size_t ell, LinkSet vertices,
            const LinkSet & candidates, bool strict) -> LabeledGraph
    {
        LinkSet labels(ell + 1);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
        for (std::size_t q = 0 ; q < candidates.size() ; ++q) {
            auto units = candidates.units(q);
            auto first = vertices.find_either(units.subspan(0, 2 * ell + 1));
            auto second = vertices.find_either(units.subspan(2, 2 * ell + 1));
            if (! first || ! second) {
                if (strict)
                    fail(ErrorCode::ConstructionFailed, "window of " + format_units(*source, units) + " is not a vertex");
                continue;
            }
            if (*first == *second)
                fail(ErrorCode::ConstructionFailed, "both windows of " + format_units(*source, units) + " coincide");
            labels.push_back(units);
            ends.emplace_back(std::min(*first, *second), std::max(*first, *second));
        }
        return LabeledGraph(std::move(source), ell, std::move(vertices), std::move(labels), std::move(ends));
    }

    auto to_set(const Multigraph & g, std::size_t ell, const std::vector<Link> & links) -> LinkSet
    {
        LinkSet set(ell);
        for (auto & l : links) {
            if (l.length() != ell || ! l.canonical().valid_in(g))
                fail(ErrorCode::NotALink, "not a " + std::to_string(ell) + "-link of the source graph");
            set.push_back(l.units());
        }
        set.sort_unique();
        return set;
    }

    auto filtered(const LinkSet & set, bool (*keep)(const Link &)) -> LinkSet
    {
        LinkSet result(set.length());
        for (std::size_t i = 0 ; i < set.size() ; ++i)
            if (keep(set.at(i)))
                result.push_back(set.units(i));
        return result;
    }
}

auto link_graph(const Multigraph & g, std::size_t ell, std::size_t limit) -> LabeledGraph
{
    auto source = std::make_shared<const Multigraph>(g);
    auto vertices = link_set(g, ell, limit);
    auto steps = link_set(g, ell + 1, limit);
    return assemble(std::move(source), ell, std::move(vertices), steps, true);
}

auto partial_link_graph(const Multigraph & g, std::size_t ell, const std::vector<Link> & links,
        const std::vector<Link> & steps) -> LabeledGraph
{
    auto vertices = to_set(g, ell, links);
    auto candidates = to_set(g, ell + 1, steps);
    return assemble(std::make_shared<const Multigraph>(g), ell, std::move(vertices), candidates, false);
}

auto simplify(const LabeledGraph & h) -> LabeledGraph
{
    LinkSet labels(h.ell() + 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
        if (seen.insert(h.endpoints(e)).second) {
            labels.push_back(h.labels().units(e));
            ends.push_back(h.endpoints(e));
        }
    return LabeledGraph(h.source_ptr(), h.ell(), h.vertices(), std::move(labels), std::move(ends));
}

auto path_graph(const Multigraph & g, std::size_t ell, std::size_t limit) -> LabeledGraph
{
    if (ell <= 1)
        return simplify(link_graph(g, ell, limit));

    auto vertices = filtered(link_set(g, ell, limit), is_path);
    auto steps = filtered(link_set(g, ell + 1, limit), [] (const Link & l) { return is_path(l) || is_cycle(l); });
    return simplify(assemble(std::make_shared<const Multigraph>(g), ell, std::move(vertices), steps, false));
}

auto drop_edge(const LabeledGraph & h, std::uint32_t e) -> LabeledGraph
{
    if (e >= h.edge_count())
        fail(ErrorCode::UnknownEdge, "edge index " + std::to_string(e) + " out of range");
    LinkSet labels(h.ell() + 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
    for (std::uint32_t f = 0 ; f < h.edge_count() ; ++f)
        if (f != e) {
            labels.push_back(h.labels().units(f));
            ends.push_back(h.endpoints(f));
        }
    return LabeledGraph(h.source_ptr(), h.ell(), h.vertices(), std::move(labels), std::move(ends));
}

auto is_connected(const LabeledGraph & h) -> bool
{
    return is_connected(h.underlying_simple());
}

// ---- digraphs ---------------------------------------------------------------------

auto LabeledDigraph::underlying_simple() const -> SimpleGraph
{
    SimpleGraph s(vertices.size());
    for (auto & a : arcs)
        s.add_edge(a.tail, a.head);
    s.finalise();
    return s;
}

namespace
{
    auto index_of(const std::vector<Arc> & sorted, const Arc & a) -> std::optional<std::uint32_t>
    {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
        if (it == sorted.end() || *it != a)
            return std::nullopt;
        return static_cast<std::uint32_t>(it - sorted.begin());
    }
}

auto arc_digraph(const Multigraph & g, std::size_t ell, std::size_t limit) -> LabeledDigraph
{
    if (ell < 1)
        fail(ErrorCode::InvalidParameter, "arc digraph needs ell >= 1");
    LabeledDigraph d;
    d.ell = ell;
    d.vertices = enumerate_arcs(g, ell, limit);
    for (auto & q : enumerate_arcs(g, ell + 1, limit)) {
        auto tail = index_of(d.vertices, q.segment(0, ell));
        auto head = index_of(d.vertices, q.segment(1, ell + 1));
        if (! tail || ! head)
            fail(ErrorCode::ConstructionFailed, "window of " + format(g, q) + " is not an arc");
        d.arcs.push_back({ *tail, *head, q });
    }
    return d;
}

auto line_digraph(const LabeledDigraph & d, std::size_t limit) -> LabeledDigraph
{
    std::vector<std::vector<std::uint32_t>> out(d.vertices.size());
    for (std::uint32_t a = 0 ; a < d.arcs.size() ; ++a)
        out[d.arcs[a].tail].push_back(a);

    LabeledDigraph result;
    result.ell = d.ell + 1;
    for (auto & a : d.arcs)
        result.vertices.push_back(a.label);

    for (std::uint32_t a = 0 ; a < d.arcs.size() ; ++a)
        for (auto b : out[d.arcs[a].head]) {
            auto first = d.arcs[a].label.units(), second = d.arcs[b].label.units();
            if (! std::equal(first.begin() + 2, first.end(), second.begin(), second.end() - 2))
                fail(ErrorCode::ConstructionFailed, "consecutive arc labels do not overlap");
            std::vector<std::uint32_t> units(first.begin(), first.end());
            units.insert(units.end(), second.end() - 2, second.end());
            if (result.arcs.size() >= limit)
                throw LimitExceeded(result.arcs.size() + 1, limit);
            result.arcs.push_back({ a, b, Arc(std::move(units)) });
        }
    return result;
}

auto iterated_line_digraph(const Multigraph & g, std::size_t ell, std::size_t limit) -> LabeledDigraph
{
    auto d = arc_digraph(g, 1, limit);
    for (std::size_t k = 2 ; k <= ell ; ++k)
        d = line_digraph(d, limit);
    return d;
}

auto digraph_natural_iso_check(const LabeledDigraph & arcs, const LabeledDigraph & iterated) -> bool
{
    if (arcs.ell != iterated.ell || arcs.vertices.size() != iterated.vertices.size() ||
            arcs.arcs.size() != iterated.arcs.size())
        return false;
    if (! std::is_sorted(arcs.vertices.begin(), arcs.vertices.end()))
        return false;

    std::vector<std::uint32_t> image(iterated.vertices.size());
    std::vector<bool> hit(arcs.vertices.size(), false);
    for (std::size_t v = 0 ; v < iterated.vertices.size() ; ++v) {
        auto i = index_of(arcs.vertices, iterated.vertices[v]);
        if (! i || hit[*i])
            return false;
        hit[*i] = true;
        image[v] = *i;
    }

    using Key = std::tuple<std::uint32_t, std::uint32_t, Arc>;
    std::vector<Key> expected, mapped;
    for (auto & a : arcs.arcs)
        expected.emplace_back(a.tail, a.head, a.label);
    for (auto & a : iterated.arcs)
        mapped.emplace_back(image[a.tail], image[a.head], a.label);
    std::sort(expected.begin(), expected.end());
    std::sort(mapped.begin(), mapped.end());
    return expected == mapped;
}

auto digraph_natural_iso_check(const Multigraph & g, std::size_t ell, std::size_t limit) -> bool
{
    return digraph_natural_iso_check(arc_digraph(g, ell, limit), iterated_line_digraph(g, ell, limit));
}

}
