#include "oracles.hpp"

#include <linkgraph/error.hpp>
#include <linkgraph/harness.hpp>

#include <doctest.h>

using namespace linkgraph;

namespace
{
    auto simple_matrix(const SimpleGraph & s) -> oracle::Matrix
    {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (std::uint32_t v = 0 ; v < s.size() ; ++v)
            for (auto w : s.neighbours(v))
                edges.push_back({ v, w });
        return oracle::matrix(s.size(), edges);
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

    auto starts_with(const std::string & s, const std::string & prefix) -> bool
    {
        return s.rfind(prefix, 0) == 0;
    }

    auto path_graph_on(std::uint32_t n) -> SimpleGraph
    {
        SimpleGraph s(n);
        for (std::uint32_t v = 0 ; v + 1 < n ; ++v)
            s.add_edge(v, v + 1);
        s.finalise();
        return s;
    }

    auto cut(const Multigraph & g, std::initializer_list<const char *> ids) -> CutInstance
    {
        CutInstance c;
        for (auto id : ids)
            c.x.push_back(g.vertex_index(id));
        return c;
    }

    /// K4 with every vertex blown up into a path a-b-c, so each branch set holds a 2-link.
    auto blown_up_k4() -> Multigraph
    {
        std::vector<std::string> vertices;
        std::vector<EdgeSpec> edges;
        for (int i = 0 ; i < 4 ; ++i) {
            auto k = std::to_string(i);
            for (auto p : { "a", "b", "c" })
                vertices.push_back(p + k);
            edges.push_back({ "s" + k, "a" + k, "b" + k });
            edges.push_back({ "t" + k, "b" + k, "c" + k });
        }
        const char * sides[] = { "a", "c", "a", "c", "a", "c" };
        int n = 0;
        for (int i = 0 ; i < 4 ; ++i)
            for (int j = i + 1 ; j < 4 ; ++j, ++n)
                edges.push_back({ "x" + std::to_string(i) + std::to_string(j),
                    sides[n] + std::to_string(i), sides[5 - n] + std::to_string(j) });
        return Multigraph(vertices, edges);
    }
}

TEST_CASE("witness verification")
{
    auto p2 = path_graph_on(2);
    MinorWitness k2{ complete_target(2), { { 0 }, { 1 } }, { { { 0, 1 }, { 0, 1 } } } };
    CHECK(verify_minor(p2, k2).ok);

    auto overlap = k2;
    overlap.branch_sets = { { 0 }, { 0, 1 } };
    CHECK(starts_with(verify_minor(p2, overlap).reason, "DisjointnessViolated"));

    auto p4 = path_graph_on(4);
    MinorWitness split{ complete_target(2), { { 0, 2 }, { 3 } }, { { { 0, 1 }, { 2, 3 } } } };
    CHECK(starts_with(verify_minor(p4, split).reason, "BranchSetDisconnected"));

    MinorWitness missing{ complete_target(2), { { 0 }, { 1 } }, {} };
    CHECK(starts_with(verify_minor(p2, missing).reason, "MissingConnector"));

    MinorWitness through{ complete_target(3), { { 0 }, { 1 }, { 3 } },
        { { { 0, 1 }, { 0, 1 } }, { { 1, 2 }, { 1, 2, 3 } }, { { 0, 2 }, { 0, 1, 2, 3 } } } };
    CHECK(starts_with(verify_minor(p4, through).reason, "ConnectorMeetsBranchSet"));

    MinorWitness far{ complete_target(2), { { 0 }, { 7 } }, { { { 0, 1 }, { 0, 7 } } } };
    CHECK(starts_with(verify_minor(p2, far).reason, "IndexOutOfRange"));

    MinorWitness jump{ complete_target(2), { { 0 }, { 3 } }, { { { 0, 1 }, { 0, 3 } } } };
    CHECK(starts_with(verify_minor(p4, jump).reason, "ConnectorNotAPath"));

    MinorWitness count{ complete_target(3), { { 0 }, { 1 } }, {} };
    CHECK(starts_with(verify_minor(p2, count).reason, "BranchSetCount"));
}

TEST_CASE("exact Hadwiger number against contraction and deletion")
{
    CHECK(exact_hadwiger(complete(5)).eta == 5);
    CHECK(exact_hadwiger(petersen()).eta == 5);
    CHECK(oracle::hadwiger(oracle::multigraph_matrix(petersen())) == 5);
    CHECK(exact_hadwiger(cycle(7)).eta == 3);
    CHECK(exact_hadwiger(complete(1)).eta == 1);
    CHECK(code_of([] { exact_hadwiger(complete(13)); }) == ErrorCode::OracleTooLarge);
    CHECK(code_of([] { exact_hadwiger(complete(4), 30); }) == ErrorCode::InvalidParameter);

    for (auto & instance : default_corpus().instances) {
        CAPTURE(instance.name);
        auto r = exact_hadwiger(instance.graph);
        CHECK(verify_minor(underlying_simple(instance.graph), r.witness).ok);
        CHECK(r.witness.order() == r.eta);
        CHECK(r.eta == oracle::hadwiger(oracle::multigraph_matrix(instance.graph)));
        for (std::size_t ell = 1 ; ell <= 3 ; ++ell) {
            auto h = link_graph(instance.graph, ell);
            if (h.vertex_count() > 10)
                continue;
            CAPTURE(ell);
            auto s = h.underlying_simple();
            auto e = exact_hadwiger(s);
            CHECK(verify_minor(h, e.witness).ok);
            CHECK(e.eta == oracle::hadwiger(simple_matrix(s)));
        }
    }
}

TEST_CASE("complete minors from a cut")
{
    auto w5 = wheel(5);
    auto h1 = link_graph(w5, 1);
    auto k5 = kt_minor_from_cut(h1, cut(w5, { "h" }));
    CHECK(k5.order() == 5);
    CHECK(verify_minor(h1, k5).ok);

    auto c5 = cycle(5);
    auto hc = link_graph(c5, 1);
    auto k2 = kt_minor_from_cut(hc, { { 0 } });
    CHECK(k2.order() == 2);
    CHECK(verify_minor(hc, k2).ok);

    auto star = complete_bipartite(1, 3);
    CHECK(code_of([&] { kt_minor_from_cut(link_graph(star, 1), cut(star, { "a0" })); }) ==
            ErrorCode::PreconditionViolated);

    auto k4 = complete(4);
    CHECK(code_of([&] { kt_minor_from_cut(link_graph(k4, 1), { { 0, 1 } }); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([&] { kt_minor_from_cut(link_graph(k4, 0), { { 0 } }); }) == ErrorCode::PreconditionViolated);

    for (auto & instance : default_corpus().instances)
        for (std::size_t ell = 1 ; ell <= 3 ; ++ell) {
            auto & g = instance.graph;
            auto h = link_graph(g, ell);
            for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v) {
                CAPTURE(instance.name);
                CAPTURE(ell);
                CAPTURE(v);
                try {
                    auto w = kt_minor_from_cut(h, { { v } });
                    CHECK(verify_minor(h, w).ok);
                    CHECK(w.order() == g.degree(v));
                }
                catch (const Error & e) {
                    CHECK(e.code() == ErrorCode::PreconditionViolated);
                }
            }
        }
}

TEST_CASE("one more with a cycle")
{
    auto k5 = complete(5);
    auto h = link_graph(k5, 2);
    auto w = kt1_minor_with_cycle(h, { { 0 } });
    CHECK(w.order() == 5);
    CHECK(verify_minor(h, w).ok);

    auto p3 = path(3);
    CHECK(code_of([&] { kt1_minor_with_cycle(link_graph(p3, 1), { { 0 } }); }) == ErrorCode::NoCycleInY);

    auto pendant = parse_edge_list("x a\na b\nb c\nc a\n");
    auto hp = link_graph(pendant, 1);
    auto k2 = kt1_minor_with_cycle(hp, cut(pendant, { "x" }));
    CHECK(k2.order() == 2);
    CHECK(verify_minor(hp, k2).ok);

    for (auto & instance : default_corpus().instances)
        for (std::size_t ell = 1 ; ell <= 3 ; ++ell) {
            auto & g = instance.graph;
            auto hh = link_graph(g, ell);
            for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v) {
                CAPTURE(instance.name);
                CAPTURE(ell);
                CAPTURE(v);
                try {
                    auto ww = kt1_minor_with_cycle(hh, { { v } });
                    CHECK(verify_minor(hh, ww).ok);
                    CHECK(ww.order() == g.degree(v) + 1);
                }
                catch (const Error & e) {
                    CHECK((e.code() == ErrorCode::PreconditionViolated || e.code() == ErrorCode::NoCycleInY));
                }
            }
        }
}

TEST_CASE("lifting through the hub")
{
    auto k4 = complete(4);
    auto h0 = link_graph(k4, 0);
    auto id = lift_minor(h0, { { 0 }, { 1 }, { 2 }, { 3 } }, complete_target(4));
    CHECK(id.order() == 4);
    CHECK(verify_minor(h0, id).ok);

    auto g = blown_up_k4();
    REQUIRE(hub_subgraph(g, 2).vertex_count() == g.vertex_count());
    std::vector<std::vector<VertexIndex>> sets;
    for (int i = 0 ; i < 4 ; ++i) {
        auto k = std::to_string(i);
        sets.push_back({ g.vertex_index("a" + k), g.vertex_index("b" + k), g.vertex_index("c" + k) });
    }
    for (std::size_t ell : { 1u, 2u }) {
        auto h = link_graph(g, ell);
        auto w = lift_minor(h, sets, complete_target(4));
        CAPTURE(ell);
        CHECK(w.order() == 4);
        CHECK(verify_minor(h, w).ok);
    }

    auto h2 = link_graph(k4, 2);
    CHECK(code_of([&] { lift_minor(h2, { { 0 }, { 1 }, { 2 }, { 3 } }, complete_target(4)); }) ==
            ErrorCode::BranchSetLacksLink);
}

TEST_CASE("Zelinka minors")
{
    for (std::size_t d : { 2u, 3u, 4u, 5u, 6u }) {
        CAPTURE(d);
        auto w = zelinka_minor(d);
        CHECK(w.order() == d);
        CHECK(verify_minor(underlying_simple(complete_bipartite(d - 1, d - 1)), w).ok);
    }
    CHECK(code_of([] { zelinka_minor(1); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("transport between link graphs")
{
    auto g = wheel(5);
    auto h = link_graph(g, 1);
    auto w = kt_minor_from_cut(h, cut(g, { "h" }));
    auto copy = link_graph(g, 1);
    CHECK(verify_minor(copy, transport(h, copy, w)).ok);
}

TEST_CASE("contraction search")
{
    for (auto & instance : default_corpus().instances) {
        auto h = link_graph(instance.graph, 1);
        if (h.vertex_count() > 12)
            continue;
        CAPTURE(instance.name);
        auto s = h.underlying_simple();
        auto w = contraction_search(s, 7, 10);
        CHECK(verify_minor(s, w).ok);
        CHECK(w.order() <= exact_hadwiger(s).eta);
        auto again = contraction_search(s, 7, 10);
        CHECK(again.branch_sets == w.branch_sets);
    }
}

TEST_CASE("Hadwiger lower bounds")
{
    auto k4 = hadwiger_lower_bound(link_graph(complete(4), 1));
    CHECK(k4.bound >= 4);
    CHECK(verify_minor(link_graph(complete(4), 1), k4.witness).ok);
    CHECK(exact_hadwiger(link_graph(complete(4), 1).underlying_simple()).eta >= 4);

    auto d3 = hadwiger_lower_bound(link_graph(dipole(3), 1));
    CHECK(d3.bound >= 3);

    HadwigerOptions options;
    options.search_rounds = 40;
    options.seed = 0x6c696e6b;
    auto hp = link_graph(petersen(), 2);
    auto pb = hadwiger_lower_bound(hp, options);
    CHECK(pb.bound >= 6);
    CHECK(verify_minor(hp, pb.witness).ok);

    CHECK(code_of([] { hadwiger_lower_bound(link_graph(path(1), 1)); }) == ErrorCode::NoEdge);
    CHECK(code_of([] { hadwiger_lower_bound(link_graph(complete(4), 0)); }) == ErrorCode::PreconditionViolated);

    for (auto & instance : default_corpus().instances)
        for (std::size_t ell = 1 ; ell <= 3 ; ++ell) {
            auto & g = instance.graph;
            auto h = link_graph(g, ell);
            if (h.edge_count() == 0)
                continue;
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto b = hadwiger_lower_bound(h, options);
            CHECK(verify_minor(h, b.witness).ok);
            CHECK(b.witness.order() == b.bound);
            CHECK(b.bound >= b.degeneracy);
            CHECK(b.degeneracy == oracle::degeneracy(g));
            if (b.eta_g)
                CHECK(b.bound >= *b.eta_g);
            if (h.vertex_count() <= 10)
                CHECK(oracle::hadwiger(simple_matrix(h.underlying_simple())) >= b.bound);
        }
}

TEST_CASE("Hadwiger against chromatic number in the covered cases")
{
    auto k4 = hadwiger_cases(complete(4), 1);
    CHECK(k4.biconnected);
    CHECK_FALSE(k4.even);
    CHECK(k4.small_degree);
    CHECK_FALSE(hadwiger_cases(complete(4), 0).any());
    CHECK(hadwiger_cases(path(3), 2).even);
    CHECK_FALSE(hadwiger_cases(path(3), 3).biconnected);

    std::size_t checked = 0;
    for (auto & instance : default_corpus().instances)
        for (std::size_t ell = 1 ; ell <= 5 ; ++ell) {
            auto & g = instance.graph;
            if (! hadwiger_cases(g, ell).any())
                continue;
            auto h = link_graph(g, ell);
            if (h.vertex_count() > 10)
                continue;
            CAPTURE(instance.name);
            CAPTURE(ell);
            auto m = simple_matrix(h.underlying_simple());
            CHECK(oracle::hadwiger(m) >= oracle::chromatic(m));
            ++checked;
        }
    CHECK(checked > 20);
}

TEST_CASE("witness JSON")
{
    auto g = wheel(5);
    auto h = link_graph(g, 1);
    auto j = to_json(h, kt_minor_from_cut(h, cut(g, { "h" })));
    CHECK(j["target"] == "K_5");
    CHECK(j["branch_sets"].size() == 5);
    CHECK(j["connectors"].size() == 10);
    CHECK(j["connectors"].contains("0-1"));
}
