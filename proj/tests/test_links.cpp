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

    auto star() -> Multigraph
    {
        return complete_bipartite(1, 3);
    }
}

TEST_CASE("arc and link counts")
{
    CHECK(enumerate_arcs(dipole(3), 1).size() == 6);
    CHECK(enumerate_arcs(complete(4), 2).size() == 24);
    CHECK(enumerate_arcs(cycle(3), 3).size() == 6);
    CHECK(enumerate_links(complete_bipartite(3, 3), 1).size() == 9);
    CHECK(enumerate_links(petersen(), 2).size() == 30);
    CHECK(enumerate_links(path(3), 3).size() == 1);
    CHECK(enumerate_links(complete(4), 0).size() == 4);
    CHECK(count_links(petersen(), 3) == 60);
}

TEST_CASE("enumeration matches the brute-force walk oracle")
{
    for (auto & instance : default_corpus().instances) {
        auto & g = instance.graph;
        for (std::size_t ell = 0 ; ell <= 3 ; ++ell) {
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto expected = oracle::links(g, ell);
            auto links = enumerate_links(g, ell);
            std::set<oracle::Units> got;
            for (auto & l : links)
                got.insert(units_of(l));
            CHECK(got.size() == links.size());
            CHECK(got == expected);
            CHECK(std::is_sorted(links.begin(), links.end()));

            auto arcs = enumerate_arcs(g, ell);
            CHECK(arcs.size() == oracle::arcs(g, ell).size());
            if (ell >= 1)
                CHECK(arcs.size() == 2 * links.size());
            for (auto & a : arcs) {
                CHECK(canonicalize(a) == canonicalize(a.reversed()));
                CHECK(a.valid_in(g));
            }
        }
    }
}

TEST_CASE("enumeration limit")
{
    CHECK(code_of([] { enumerate_links(complete(6), 4, 100); }) == ErrorCode::LimitExceeded);
    try {
        enumerate_links(complete(6), 4, 100);
    }
    catch (const LimitExceeded & e) {
        CHECK(e.limit() == 100);
        CHECK(e.count() > 100);
    }
}

TEST_CASE("paths, cycles and middle units")
{
    auto d2 = dipole(2);
    auto two_cycle = parse_link(d2, "[a e1 b e2 a]");
    CHECK(is_cycle(two_cycle));
    CHECK_FALSE(is_path(two_cycle));

    auto fig = figure_two_graph();
    auto around = parse_link(fig, "[v1 e0 v0 e1 v1]");
    CHECK(is_cycle(around));
    for (auto & l : enumerate_links(fig, 1)) {
        CHECK(is_path(l));
        CHECK_FALSE(is_cycle(l));
    }

    auto v = Link::of(Arc::at_vertex(fig.vertex_index("v1")));
    CHECK(middle_unit(v) == Unit{ false, fig.vertex_index("v1") });
    CHECK(middle_unit(parse_link(fig, "[u0 f0 v0 e0 v1]")) == Unit{ false, fig.vertex_index("v0") });
    CHECK(middle_unit(parse_link(fig, "[u0 f0 v0 e0 v1 f1 u1]")) == Unit{ true, fig.edge_index("e0") });

    for (std::size_t ell = 2 ; ell <= 4 ; ++ell)
        for (auto & l : enumerate_links(petersen(), ell)) {
            auto u = units_of(l);
            CHECK(is_path(l) == oracle::is_path(u));
            CHECK(is_cycle(l) == oracle::is_cycle(u));
        }
}

TEST_CASE("conjunction")
{
    auto fig = figure_two_graph();
    auto a = parse_arc(fig, "(u0 f0 v0)");
    auto b = parse_arc(fig, "(v0 e0 v1)");
    CHECK(format(fig, conjunction(a, b)) == "(u0 f0 v0 e0 v1)");
    CHECK(conjunction(Arc::at_vertex(fig.vertex_index("u0")), a) == a);
    CHECK(code_of([&] { conjunction(b, a); }) == ErrorCode::EndpointMismatch);
    CHECK(code_of([&] { conjunction(a, a.reversed()); }) == ErrorCode::BacktrackEdge);
}

TEST_CASE("shunt traces")
{
    auto fig = figure_two_graph();
    auto base = parse_arc(fig, "(u0 f0 v0 e0 v1 f1 u1)");
    auto trace = shunt_trace(base, 2);
    REQUIRE(trace.images.size() == 2);
    CHECK(format(fig, trace.images[0]) == "[u0 f0 v0 e0 v1]");
    CHECK(format(fig, trace.images[1]) == "[u1 f1 v1 e0 v0]");
    REQUIRE(trace.steps.size() == 1);
    CHECK(format(fig, trace.steps[0]) == "[u0 f0 v0 e0 v1 f1 u1]");

    auto whole = shunt_trace(base, 3);
    CHECK(whole.images.size() == 1);
    CHECK(whole.steps.empty());

    auto ends = shunt_trace(parse_arc(fig, "(u0 f0 v0)"), 0);
    REQUIRE(ends.images.size() == 2);
    CHECK(format(fig, ends.images[0]) == "[u0]");
    CHECK(format(fig, ends.images[1]) == "[v0]");
    CHECK(code_of([&] { shunt_trace(base, 4); }) == ErrorCode::WindowTooLong);
}

TEST_CASE("one step shunts")
{
    auto d3 = dipole(3);
    for (auto & l : enumerate_links(d3, 1))
        CHECK(one_step_shunts(d3, l).size() == 4);

    auto p3 = path(3);
    auto middle = enumerate_links(p3, 1)[1];
    CHECK(one_step_shunts(p3, middle).size() == 2);

    auto pg = petersen();
    for (auto & l : enumerate_links(pg, 2))
        CHECK(one_step_shunts(pg, l).size() == 4);

    for (auto & l : enumerate_links(complete(4), 0))
        CHECK(one_step_shunts(complete(4), l).size() == 3);
}

TEST_CASE("shunting reachability")
{
    auto fig = figure_two_graph();
    auto from = parse_link(fig, "[u0 f0 v0 e0 v1]");
    auto to = parse_link(fig, "[v1 e0 v0 e1 v1]");
    auto found = can_shunt(fig, from, to);
    CHECK(found.reachable);
    CHECK_FALSE(found.witness.empty());

    auto self = can_shunt(fig, from, from);
    CHECK(self.reachable);
    CHECK(self.witness.empty());

    auto two = disjoint_union(complete(2), complete(2));
    auto links = enumerate_links(two, 1);
    REQUIRE(links.size() == 2);
    CHECK_FALSE(can_shunt(two, links[0], links[1]).reachable);
    CHECK(code_of([&] { can_shunt(fig, from, parse_link(fig, "[u0 f0 v0]")); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("hub subgraph")
{
    for (auto g : { complete(4), petersen(), figure_two_graph(), wheel(5) })
        for (std::size_t ell : { 0u, 1u }) {
            auto hub = hub_subgraph(g, ell);
            CHECK(hub.vertex_count() == g.vertex_count());
            CHECK(hub.edge_count() == g.edge_count());
        }

    auto p3 = hub_subgraph(path(3), 3);
    CHECK(p3.vertex_count() == 2);
    CHECK(p3.edge_count() == 1);

    auto s = hub_subgraph(star(), 2);
    CHECK(s.vertex_ids() == std::vector<std::string>{ "a0" });
    CHECK(s.edge_count() == 0);

    for (auto & instance : default_corpus().instances) {
        auto & g = instance.graph;
        for (std::size_t ell = 0 ; ell <= 4 ; ++ell) {
            CAPTURE(instance.name);
            CAPTURE(ell);
            std::set<std::uint32_t> middles;
            for (auto & u : oracle::links(g, ell))
                middles.insert(u[ell]);
            auto units = hub_units(g, ell);
            std::set<std::uint32_t> got;
            auto & mask = ell % 2 ? units.edges : units.vertices;
            for (std::uint32_t i = 0 ; i < mask.size() ; ++i)
                if (mask[i])
                    got.insert(i);
            CHECK(got == middles);
            if (is_connected(g) && ! middles.empty())
                CHECK(is_connected(hub_subgraph(g, ell)));
        }
    }
}

TEST_CASE("link strings round trip")
{
    auto g = random_multigraph(8, 14, corpus_seeds[1]);
    for (auto & l : enumerate_links(g, 3)) {
        CHECK(parse_link(g, format(g, l)) == l);
        CHECK(parse_link(g, format(g, l.canonical().reversed())) == l);
    }
    CHECK(code_of([&] { parse_link(g, "[v0 nope v1]"); }).has_value());
}
