#include "oracles.hpp"

#include <linkgraph/error.hpp>
#include <linkgraph/harness.hpp>

#include <doctest.h>

using namespace linkgraph;

namespace
{
    auto units_of(const Link & l) -> oracle::Units
    {
        return oracle::Units(l.units().begin(), l.units().end());
    }

    auto as_oracle(const LabeledGraph & h) -> oracle::LinkGraph
    {
        oracle::LinkGraph out;
        for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
            out.vertices.push_back(units_of(h.vertex(v)));
        for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e) {
            auto a = units_of(h.vertex(h.endpoints(e).first));
            auto b = units_of(h.vertex(h.endpoints(e).second));
            out.edges.insert({ std::min(a, b), std::max(a, b) });
        }
        return out;
    }

    auto code_of(const std::function<void ()> & f) -> std::optional<ErrorCode>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.code();
        }
        return std::nullopt;
    }
}

TEST_CASE("link graphs match the window oracle")
{
    for (auto & instance : default_corpus().instances) {
        for (std::size_t ell = 0 ; ell <= 3 ; ++ell) {
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto h = link_graph(instance.graph, ell);
            auto expected = oracle::link_graph(instance.graph, ell);
            auto got = as_oracle(h);
            CHECK(got.vertices == expected.vertices);
            CHECK(got.edges == expected.edges);
            for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
                CHECK(h.endpoints(e).first != h.endpoints(e).second);
        }
    }
}

TEST_CASE("small link graphs")
{
    auto k4 = complete(4);
    auto l0 = link_graph(k4, 0);
    CHECK(l0.vertex_count() == 4);
    CHECK(l0.edge_count() == 6);
    for (std::uint32_t e = 0 ; e < l0.edge_count() ; ++e) {
        auto [a, b] = l0.endpoints(e);
        auto ends = k4.endpoints(l0.label(e).units()[1]);
        CHECK(std::minmax(l0.vertex(a).units()[0], l0.vertex(b).units()[0]) == std::minmax(ends.first, ends.second));
    }

    auto d3 = link_graph(dipole(3), 1);
    CHECK(d3.vertex_count() == 3);
    CHECK(d3.edge_count() == 6);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> bundles;
    for (std::uint32_t e = 0 ; e < d3.edge_count() ; ++e)
        ++bundles[d3.endpoints(e)];
    CHECK(bundles.size() == 3);
    for (auto & [ends, count] : bundles)
        CHECK(count == 2);

    auto fig = figure_two_graph();
    auto l2 = link_graph(fig, 2);
    CHECK(l2.vertex_count() == oracle::links(fig, 2).size());
    CHECK(l2.vertex_count() == 6);
    CHECK(l2.edge_count() == oracle::links(fig, 3).size());
    CHECK(l2.find_vertex(parse_link(fig, "[v1 e0 v0 e1 v1]")).has_value());
}

TEST_CASE("partial link graphs")
{
    auto g = petersen();
    auto full = partial_link_graph(g, 2, enumerate_links(g, 2), enumerate_links(g, 3));
    CHECK(full == link_graph(g, 2));

    auto empty = partial_link_graph(g, 2, {}, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    auto fig = figure_two_graph();
    std::vector<Link> paths, steps;
    for (auto & l : enumerate_links(fig, 2))
        if (is_path(l))
            paths.push_back(l);
    for (auto & q : enumerate_links(fig, 3))
        if (is_path(q) || is_cycle(q))
            steps.push_back(q);
    CHECK(simplify(partial_link_graph(fig, 2, paths, steps)) == path_graph(fig, 2));

    CHECK(code_of([&] { partial_link_graph(g, 2, enumerate_links(g, 1), {}); }) == ErrorCode::NotALink);
    CHECK(code_of([&] { partial_link_graph(g, 2, {}, { parse_link(fig, "[u0 f0 v0]") }); }).has_value());
}

TEST_CASE("path graphs match the path oracle")
{
    for (auto & instance : default_corpus().instances) {
        for (std::size_t ell = 0 ; ell <= 3 ; ++ell) {
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto p = path_graph(instance.graph, ell);
            auto expected = oracle::path_graph(instance.graph, ell);
            auto got = as_oracle(p);
            CHECK(got.vertices == expected.vertices);
            CHECK(got.edges == expected.edges);
            auto g = girth(instance.graph);
            if (g == infinite || g > std::max<std::size_t>(ell, 2))
                CHECK(p == simplify(link_graph(instance.graph, ell)));
        }
    }

    CHECK(path_graph(figure_two_graph(), 2).vertex_count() == 4);
    auto k3 = path_graph(complete(3), 1);
    CHECK(k3 == link_graph(complete(3), 1));
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
}

TEST_CASE("arc digraphs")
{
    auto d3 = arc_digraph(dipole(3), 1);
    CHECK(d3.vertices.size() == 6);
    CHECK(d3.arcs.size() == oracle::arcs(dipole(3), 2).size());

    for (std::size_t n = 3 ; n <= 6 ; ++n)
        for (std::size_t ell = 1 ; ell <= 3 ; ++ell) {
            auto d = arc_digraph(cycle(n), ell);
            CHECK(d.vertices.size() == 2 * n);
            std::vector<int> in(d.vertices.size()), out(d.vertices.size());
            for (auto & a : d.arcs) {
                ++out[a.tail];
                ++in[a.head];
            }
            CHECK(std::all_of(in.begin(), in.end(), [] (int x) { return x == 1; }));
            CHECK(std::all_of(out.begin(), out.end(), [] (int x) { return x == 1; }));
            auto parts = components(d.underlying_simple());
            CHECK(parts.size() == 2);
            for (auto & part : parts)
                CHECK(part.size() == n);
        }

    for (auto & instance : default_corpus().instances)
        for (std::size_t ell = 1 ; ell <= 3 ; ++ell) {
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto d = arc_digraph(instance.graph, ell);
            CHECK(d.vertices.size() == oracle::arcs(instance.graph, ell).size());
            CHECK(d.arcs.size() == oracle::arcs(instance.graph, ell + 1).size());
            CHECK(digraph_natural_iso_check(d, iterated_line_digraph(instance.graph, ell)));
        }

    auto once = iterated_line_digraph(petersen(), 1);
    auto direct = arc_digraph(petersen(), 1);
    CHECK(once.vertices == direct.vertices);
    CHECK(once.arcs.size() == direct.arcs.size());
    CHECK(digraph_natural_iso_check(dipole(3), 2));
    CHECK(digraph_natural_iso_check(petersen(), 2));
    CHECK(digraph_natural_iso_check(cycle(3), 1));
}

TEST_CASE("a relabelled iterated digraph is rejected")
{
    auto g = complete(4);
    auto arcs = arc_digraph(g, 2);
    auto iterated = iterated_line_digraph(g, 2);
    REQUIRE(iterated.arcs.size() >= 2);
    std::swap(iterated.arcs[0].head, iterated.arcs[1].head);
    if (iterated.arcs[0].head != iterated.arcs[1].head)
        CHECK_FALSE(digraph_natural_iso_check(arcs, iterated));
}

TEST_CASE("natural partitions")
{
    auto fig = figure_two_graph();
    auto h = link_graph(fig, 2);
    auto p = natural_partition(h);
    CHECK(p.vertex_parts.size() == 2);
    CHECK(p.edge_parts.size() == 2);
    CHECK(verify_almost_standard(h, p).all());
    auto q = quotient(h, p);
    CHECK(q.vertex_count() == 2);
    CHECK(q.edge_count() == 2);
    CHECK(girth(q) == 2);
    CHECK(quotient_embedding_check(h, p, link_graph(fig, 0)));

    auto c4 = link_graph(cycle(4), 2);
    auto pc = natural_partition(c4);
    CHECK(pc.vertex_parts.size() == 4);
    for (auto & part : pc.vertex_parts)
        CHECK(part.size() == 1);

    auto s = complete_bipartite(1, 3);
    auto hs = link_graph(s, 2);
    auto ps = natural_partition(hs);
    auto centre = Link::of(Arc::at_vertex(s.vertex_index("a0")));
    auto at = std::find(ps.vertex_keys.begin(), ps.vertex_keys.end(), centre);
    REQUIRE(at != ps.vertex_keys.end());
    CHECK(ps.vertex_parts[static_cast<std::size_t>(at - ps.vertex_keys.begin())].size() == 3);

    CHECK(code_of([] { natural_partition(link_graph(complete(4), 1)); }) == ErrorCode::WindowTooShort);

    for (auto & instance : default_corpus().instances)
        for (std::size_t ell = 2 ; ell <= 4 ; ++ell) {
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto hh = link_graph(instance.graph, ell);
            auto pp = natural_partition(hh);
            CHECK(verify_almost_standard(hh, pp).all());
            CHECK(quotient_embedding_check(hh, pp, link_graph(instance.graph, ell - 2)));
            CHECK(pp.vertex_parts.size() <= oracle::links(instance.graph, ell - 2).size());
        }
}

TEST_CASE("corrupted partitions are rejected")
{
    auto h = link_graph(complete(4), 2);
    auto p = natural_partition(h);
    auto merged = p;
    merged.vertex_parts[0].insert(merged.vertex_parts[0].end(), merged.vertex_parts[1].begin(),
            merged.vertex_parts[1].end());
    merged.vertex_parts.erase(merged.vertex_parts.begin() + 1);
    merged.vertex_keys.clear();
    merged.edge_keys.clear();
    CHECK_FALSE(verify_almost_standard(h, merged).a);

    auto uncovered = p;
    uncovered.vertex_parts[0].pop_back();
    CHECK(code_of([&] { verify_almost_standard(h, uncovered); }) == ErrorCode::PartitionMismatch);

    auto triangle = link_graph(complete(3), 0);
    AlmostStandardPartition singletons;
    for (std::uint32_t v = 0 ; v < triangle.vertex_count() ; ++v)
        singletons.vertex_parts.push_back({ v });
    for (std::uint32_t e = 0 ; e < triangle.edge_count() ; ++e)
        singletons.edge_parts.push_back({ e });
    CHECK(verify_almost_standard(triangle, singletons).all());
}

TEST_CASE("connectivity by shunting")
{
    for (auto & instance : default_corpus().instances)
        for (std::size_t ell = 0 ; ell <= 4 ; ++ell) {
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto h = link_graph(instance.graph, ell);
            CHECK(link_graph_connected(instance.graph, ell) == is_connected(h));
            if (ell <= 1 && h.vertex_count() > 0)
                CHECK(link_graph_connected(instance.graph, ell) == is_connected(instance.graph));
        }
    CHECK(link_graph_connected(path(4), 2));
    CHECK_FALSE(link_graph_connected(disjoint_union(complete(2), complete(2)), 1));
}

TEST_CASE("dropping an edge breaks the counting identity")
{
    auto g = complete(4);
    auto h = drop_edge(link_graph(g, 1), 0);
    CHECK(h.edge_count() + 1 == link_graph(g, 2).vertex_count());
}

TEST_CASE("exports")
{
    auto fig = figure_two_graph();
    auto h = link_graph(fig, 2);
    auto j = to_json(h);
    CHECK(j["ell"] == 2);
    CHECK(j["vertices"].size() == 6);
    CHECK(j["edges"].size() == h.edge_count());
    CHECK(to_dot(h, nullptr).find("graph") != std::string::npos);
    auto p = natural_partition(h);
    CHECK(to_dot(h, &p).find("cluster") != std::string::npos);
    auto text = serialize_edge_list(h);
    auto back = parse_edge_list(text);
    CHECK(back.vertex_count() == h.vertex_count());
    CHECK(back.edge_count() == h.edge_count());
}
