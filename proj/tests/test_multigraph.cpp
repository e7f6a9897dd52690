#include "oracles.hpp"

#include <linkgraph/error.hpp>
#include <linkgraph/harness.hpp>

#include <doctest.h>

using namespace linkgraph;

namespace
{
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

TEST_CASE("edge lists parse into multigraphs")
{
    auto d2 = parse_edge_list("a b\na b\n");
    CHECK(d2.vertex_count() == 2);
    CHECK(d2.edge_count() == 2);
    CHECK(d2.edge_id(0) == "e1");
    CHECK(d2.edge_id(1) == "e2");

    CHECK(code_of([] { parse_edge_list("a a\n"); }) == ErrorCode::LoopRejected);
    CHECK(code_of([] { parse_edge_list("a b c\n"); }) == ErrorCode::MalformedLine);

    auto fig = parse_edge_list("# figure\nu0 v0\nv0 v1\nv0 v1\nv1 u1\nv lonely\n");
    CHECK(fig.vertex_count() == 5);
    CHECK(fig.edge_count() == 4);
    CHECK(degree(fig, "v0") == 3);
    CHECK(degree(fig, "lonely") == 0);
    CHECK(code_of([&] { degree(fig, "nobody"); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("serialisation round trips")
{
    for (auto & instance : default_corpus().instances) {
        auto & g = instance.graph;
        auto back = parse_edge_list(serialize_edge_list(g));
        CHECK(back.vertex_ids() == g.vertex_ids());
        auto ends = [] (const Multigraph & x) {
            std::multiset<std::pair<std::string, std::string>> out;
            for (auto & e : x.edge_specs())
                out.insert(std::minmax(e.u, e.v));
            return out;
        };
        CHECK(ends(back) == ends(g));
    }
}

TEST_CASE("generators")
{
    auto d3 = dipole(3);
    CHECK(d3.vertex_count() == 2);
    CHECK(d3.edge_count() == 3);
    CHECK(complete(1).vertex_count() == 1);
    CHECK(complete(1).edge_count() == 0);
    CHECK(complete_bipartite(2, 3).vertex_count() == 5);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(cycle(2).edge_count() == 2);
    CHECK(path(1).vertex_count() == 2);
    CHECK(code_of([] { path(0); }) == ErrorCode::InvalidParameter);
    CHECK(petersen().edge_count() == 15);
    CHECK(wheel(5).edge_count() == 10);
    CHECK(code_of([] { dipole(0); }) == ErrorCode::InvalidParameter);
    CHECK(code_of([] { cycle(1); }) == ErrorCode::InvalidParameter);

    auto r = random_multigraph(7, 12, corpus_seeds[0]);
    CHECK(r.vertex_count() == 7);
    CHECK(r.edge_count() == 12);
    CHECK(serialize_edge_list(r) == serialize_edge_list(random_multigraph(7, 12, corpus_seeds[0])));
    for (EdgeIndex e = 0 ; e < r.edge_count() ; ++e)
        CHECK(r.endpoints(e).first != r.endpoints(e).second);
}

TEST_CASE("degrees and degeneracy against brute force")
{
    CHECK(degree(dipole(3), "a") == 3);
    CHECK(max_degree(complete(4)) == 3);
    CHECK(degeneracy(complete(4)) == 3);
    CHECK(degeneracy(dipole(3)) == 3);
    CHECK(degeneracy(petersen()) == 3);
    CHECK(degeneracy(path(3)) == 1);
    CHECK(degeneracy(Multigraph({ "x" }, {})) == 0);
    for (std::size_t n = 1 ; n <= 8 ; ++n)
        CHECK(degeneracy(complete(n)) == n - 1);

    for (auto & instance : default_corpus().instances) {
        auto & g = instance.graph;
        CAPTURE(instance.name);
        std::size_t sum = 0;
        for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
            sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
        CHECK(degeneracy(g) == oracle::degeneracy(g));
        CHECK(degeneracy(g) <= max_degree(g));

        auto core = degeneracy_core(g);
        auto sub = induced_subgraph(g, std::span<const VertexIndex>(core));
        CHECK(min_degree(sub) == degeneracy(g));
    }
}

TEST_CASE("girth, connectivity and diameter")
{
    CHECK(girth(dipole(2)) == 2);
    CHECK(girth(petersen()) == 5);
    CHECK(girth(path(4)) == infinite);
    CHECK(girth(complete(4)) == 3);

    auto c5 = cycle(5);
    CHECK(is_connected(c5));
    CHECK(is_biconnected(c5));
    CHECK(diameter(c5) == 2);
    CHECK(diameter(path(3)) == 3);
    CHECK_FALSE(is_biconnected(path(3)));

    auto fig = figure_two_graph();
    CHECK(is_connected(fig));
    CHECK_FALSE(is_biconnected(fig));
    CHECK(is_biconnected(dipole(2)));
    CHECK(is_biconnected(complete(2)));
    CHECK_FALSE(is_biconnected(complete(1)));

    auto two = disjoint_union(complete(2), complete(2));
    CHECK_FALSE(is_connected(two));
    CHECK(components(two).size() == 2);
    CHECK(diameter(two) == infinite);
    CHECK(has_cycle(dipole(2)));
    CHECK_FALSE(has_cycle(path(5)));
    CHECK(is_regular(petersen()) == 3);
    CHECK_FALSE(is_regular(path(3)).has_value());
}

TEST_CASE("subgraphs")
{
    auto k4 = complete(4);
    std::vector<VertexIndex> three{ 0, 1, 2 };
    auto k3 = induced_subgraph(k4, std::span<const VertexIndex>(three));
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    std::vector<std::string> none, one{ "v1" };
    auto single = edge_subgraph(k4, std::span<const std::string>(none), std::span<const std::string>(one));
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    std::vector<std::string> middle{ "v0", "v1" };
    auto pair = induced_subgraph(figure_two_graph(), std::span<const std::string>(middle));
    CHECK(pair.edge_count() == 2);
    CHECK(girth(pair) == 2);

    std::vector<std::string> bogus{ "zz" };
    CHECK(code_of([&] { induced_subgraph(k4, std::span<const std::string>(bogus)); }) == ErrorCode::UnknownVertex);

    auto peeled = peel_leaves(figure_two_graph());
    CHECK(peeled.vertex_count() == 2);
    CHECK(peeled.edge_count() == 2);
}
