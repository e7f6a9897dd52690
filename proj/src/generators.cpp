#include <linkgraph/multigraph.hpp>
#include <linkgraph/error.hpp>

#include <random>

namespace linkgraph {

namespace
{
    // Zero-padded so that lexicographic order matches numeric order.
    auto label(std::string_view prefix, std::size_t i, std::size_t count) -> std::string
    {
        auto digits = std::to_string(count > 0 ? count - 1 : 0).size();
        auto number = std::to_string(i);
        return std::string(prefix) + std::string(digits - std::min(digits, number.size()), '0') + number;
    }

    void require(bool condition, const std::string & what)
    {
        if (! condition)
            fail(ErrorCode::InvalidParameter, what);
    }
}

auto dipole(std::size_t t) -> Multigraph
{
    require(t >= 1, "dipole needs t >= 1");
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 1 ; i <= t ; ++i)
        edges.push_back({ label("e", i, t + 1), "a", "b" });
    return Multigraph({ "a", "b" }, std::move(edges));
}

auto complete(std::size_t n) -> Multigraph
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<std::string> vertices;
    for (std::size_t i = 0 ; i < n ; ++i)
        vertices.push_back(label("v", i, n));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0 ; i < n ; ++i)
        for (std::size_t j = i + 1 ; j < n ; ++j)
            edges.push_back({ label("e", i, n) + label("_", j, n), vertices[i], vertices[j] });
    return Multigraph(std::move(vertices), std::move(edges));
}

auto complete_bipartite(std::size_t n, std::size_t m) -> Multigraph
{
    require(n >= 1 && m >= 1, "complete bipartite graph needs n, m >= 1");
    std::vector<std::string> vertices;
    for (std::size_t i = 0 ; i < n ; ++i)
        vertices.push_back(label("a", i, n));
    for (std::size_t j = 0 ; j < m ; ++j)
        vertices.push_back(label("b", j, m));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0 ; i < n ; ++i)
        for (std::size_t j = 0 ; j < m ; ++j)
            edges.push_back({ label("a", i, n) + label("b", j, m), label("a", i, n), label("b", j, m) });
    return Multigraph(std::move(vertices), std::move(edges));
}

auto cycle(std::size_t n) -> Multigraph
{
    require(n >= 2, "cycle needs n >= 2");
    std::vector<std::string> vertices;
    for (std::size_t i = 0 ; i < n ; ++i)
        vertices.push_back(label("v", i, n));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0 ; i < n ; ++i)
        edges.push_back({ label("e", i, n), vertices[i], vertices[(i + 1) % n] });
    return Multigraph(std::move(vertices), std::move(edges));
}

auto path(std::size_t n) -> Multigraph
{
    require(n >= 1, "path needs n >= 1");
    std::vector<std::string> vertices;
    for (std::size_t i = 0 ; i <= n ; ++i)
        vertices.push_back(label("v", i, n + 1));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 1 ; i <= n ; ++i)
        edges.push_back({ label("e", i, n + 1), vertices[i - 1], vertices[i] });
    return Multigraph(std::move(vertices), std::move(edges));
}

auto petersen() -> Multigraph
{
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0 ; i < 5 ; ++i) {
        vertices.push_back("o" + std::to_string(i));
        vertices.push_back("i" + std::to_string(i));
    }
    for (std::size_t i = 0 ; i < 5 ; ++i) {
        auto k = std::to_string(i);
        edges.push_back({ "oo" + k, "o" + k, "o" + std::to_string((i + 1) % 5) });
        edges.push_back({ "oi" + k, "o" + k, "i" + k });
        edges.push_back({ "ii" + k, "i" + k, "i" + std::to_string((i + 2) % 5) });
    }
    return Multigraph(std::move(vertices), std::move(edges));
}

auto wheel(std::size_t n) -> Multigraph
{
    require(n >= 3, "wheel needs a rim of length >= 3");
    std::vector<std::string> vertices{ "h" };
    for (std::size_t i = 0 ; i < n ; ++i)
        vertices.push_back(label("r", i, n));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0 ; i < n ; ++i) {
        edges.push_back({ label("s", i, n), "h", label("r", i, n) });
        edges.push_back({ label("c", i, n), label("r", i, n), label("r", (i + 1) % n, n) });
    }
    return Multigraph(std::move(vertices), std::move(edges));
}

auto random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed) -> Multigraph
{
    require(n >= 2 || m == 0, "random multigraph with edges needs n >= 2");
    // mt19937_64 output is fixed by the standard; distributions are not, so
    // draws are reduced by hand to keep instances identical across toolchains.
    std::mt19937_64 rng(seed);
    std::vector<std::string> vertices;
    for (std::size_t i = 0 ; i < n ; ++i)
        vertices.push_back(label("v", i, n));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0 ; i < m ; ++i) {
        auto u = rng() % n;
        auto v = rng() % (n - 1);
        if (v >= u)
            ++v;
        edges.push_back({ label("e", i, m), vertices[u], vertices[v] });
    }
    return Multigraph(std::move(vertices), std::move(edges));
}

auto disjoint_union(const Multigraph & a, const Multigraph & b) -> Multigraph
{
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    for (auto & v : a.vertex_ids())
        vertices.push_back("a." + v);
    for (auto & v : b.vertex_ids())
        vertices.push_back("b." + v);
    for (auto & e : a.edge_specs())
        edges.push_back({ "a." + e.id, "a." + e.u, "a." + e.v });
    for (auto & e : b.edge_specs())
        edges.push_back({ "b." + e.id, "b." + e.u, "b." + e.v });
    return Multigraph(std::move(vertices), std::move(edges));
}

}
