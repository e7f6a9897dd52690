#include <linkgraph/multigraph.hpp>
#include <linkgraph/error.hpp>

#include <algorithm>
#include <numeric>
#include <queue>

namespace linkgraph {

namespace
{
    template <typename T_>
    auto lookup(const std::vector<std::string> & sorted, std::string_view id) -> std::optional<T_>
    {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), id,
                [] (const std::string & a, std::string_view b) { return std::string_view(a) < b; });
        if (it == sorted.end() || *it != id)
            return std::nullopt;
        return static_cast<T_>(it - sorted.begin());
    }
}

Multigraph::Multigraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges) :
    _vertex_ids(std::move(vertex_ids))
{
    std::sort(_vertex_ids.begin(), _vertex_ids.end());
    if (std::adjacent_find(_vertex_ids.begin(), _vertex_ids.end()) != _vertex_ids.end())
        fail(ErrorCode::InvalidParameter, "duplicate vertex id '" +
                *std::adjacent_find(_vertex_ids.begin(), _vertex_ids.end()) + "'");

    std::sort(edges.begin(), edges.end(), [] (const EdgeSpec & a, const EdgeSpec & b) { return a.id < b.id; });
    _edge_ids.reserve(edges.size());
    _ends.reserve(edges.size());
    _incidence.resize(_vertex_ids.size());

    for (auto & e : edges) {
        if (! _edge_ids.empty() && _edge_ids.back() == e.id)
            fail(ErrorCode::InvalidParameter, "duplicate edge id '" + e.id + "'");
        auto u = find_vertex(e.u), v = find_vertex(e.v);
        if (! u)
            fail(ErrorCode::UnknownVertex, "edge '" + e.id + "' names unknown vertex '" + e.u + "'");
        if (! v)
            fail(ErrorCode::UnknownVertex, "edge '" + e.id + "' names unknown vertex '" + e.v + "'");
        if (*u == *v)
            fail(ErrorCode::LoopRejected, "edge '" + e.id + "' is a loop at '" + e.u + "'");
        auto index = static_cast<EdgeIndex>(_edge_ids.size());
        _edge_ids.push_back(std::move(e.id));
        _ends.emplace_back(std::min(*u, *v), std::max(*u, *v));
        _incidence[*u].push_back(index);
        _incidence[*v].push_back(index);
    }
}

auto Multigraph::find_vertex(std::string_view id) const -> std::optional<VertexIndex>
{
    return lookup<VertexIndex>(_vertex_ids, id);
}

auto Multigraph::find_edge(std::string_view id) const -> std::optional<EdgeIndex>
{
    return lookup<EdgeIndex>(_edge_ids, id);
}

auto Multigraph::vertex_index(std::string_view id) const -> VertexIndex
{
    auto v = find_vertex(id);
    if (! v)
        fail(ErrorCode::UnknownVertex, "no vertex '" + std::string(id) + "'");
    return *v;
}

auto Multigraph::edge_index(std::string_view id) const -> EdgeIndex
{
    auto e = find_edge(id);
    if (! e)
        fail(ErrorCode::UnknownEdge, "no edge '" + std::string(id) + "'");
    return *e;
}

auto Multigraph::edge_specs() const -> std::vector<EdgeSpec>
{
    std::vector<EdgeSpec> result;
    result.reserve(edge_count());
    for (EdgeIndex e = 0 ; e < edge_count() ; ++e)
        result.push_back({ _edge_ids[e], _vertex_ids[_ends[e].first], _vertex_ids[_ends[e].second] });
    return result;
}

void SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v)
{
    if (u == v)
        return;
    _adj[u].push_back(v);
    _adj[v].push_back(u);
}

void SimpleGraph::finalise()
{
    for (auto & a : _adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
}

auto SimpleGraph::edge_count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto & a : _adj)
        total += a.size();
    return total / 2;
}

auto SimpleGraph::adjacent(std::uint32_t u, std::uint32_t v) const -> bool
{
    return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
}

auto underlying_simple(const Multigraph & g) -> SimpleGraph
{
    SimpleGraph s(g.vertex_count());
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        s.add_edge(g.endpoints(e).first, g.endpoints(e).second);
    s.finalise();
    return s;
}

// ---- metrics ----------------------------------------------------------------

auto degree(const Multigraph & g, std::string_view v) -> std::size_t
{
    return g.degree(g.vertex_index(v));
}

auto max_degree(const Multigraph & g) -> std::size_t
{
    std::size_t result = 0;
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
        result = std::max(result, g.degree(v));
    return result;
}

auto min_degree(const Multigraph & g) -> std::size_t
{
    if (g.null())
        return 0;
    std::size_t result = g.degree(0);
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
        result = std::min(result, g.degree(v));
    return result;
}

namespace
{
    struct Peeling {
        std::size_t degeneracy = 0;
        std::vector<VertexIndex> core;
    };

    // Minimum-degree peeling, counting parallel edges separately.
    auto peel(const Multigraph & g) -> Peeling
    {
        Peeling result;
        auto n = g.vertex_count();
        std::vector<std::size_t> deg(n);
        std::vector<bool> removed(n, false);
        for (VertexIndex v = 0 ; v < n ; ++v)
            deg[v] = g.degree(v);

        std::size_t best_round = 0;
        std::vector<VertexIndex> order;
        for (std::size_t round = 0 ; round < n ; ++round) {
            VertexIndex pick = 0;
            bool found = false;
            for (VertexIndex v = 0 ; v < n ; ++v)
                if (! removed[v] && (! found || deg[v] < deg[pick])) {
                    pick = v;
                    found = true;
                }
            if (round == 0 || deg[pick] > result.degeneracy) {
                best_round = round;
                result.degeneracy = deg[pick];
            }
            removed[pick] = true;
            order.push_back(pick);
            for (auto e : g.incident_edges(pick)) {
                auto w = g.other_end(e, pick);
                if (! removed[w])
                    --deg[w];
            }
        }

        result.core.assign(order.begin() + static_cast<std::ptrdiff_t>(best_round), order.end());
        std::sort(result.core.begin(), result.core.end());
        return result;
    }
}

auto degeneracy(const Multigraph & g) -> std::size_t
{
    return peel(g).degeneracy;
}

auto degeneracy_core(const Multigraph & g) -> std::vector<VertexIndex>
{
    return peel(g).core;
}

auto girth(const Multigraph & g) -> std::size_t
{
    for (EdgeIndex e = 0 ; e + 1 < g.edge_count() ; ++e)
        for (EdgeIndex f = e + 1 ; f < g.edge_count() ; ++f)
            if (g.endpoints(e) == g.endpoints(f))
                return 2;

    auto s = underlying_simple(g);
    std::size_t best = infinite;
    for (std::uint32_t root = 0 ; root < s.size() ; ++root) {
        std::vector<std::size_t> dist(s.size(), infinite);
        std::vector<std::uint32_t> parent(s.size(), root);
        std::queue<std::uint32_t> q;
        dist[root] = 0;
        q.push(root);
        while (! q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : s.neighbours(u)) {
                if (dist[w] == infinite) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                }
                else if (parent[u] != w)
                    best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    return best;
}

auto components(const SimpleGraph & g) -> std::vector<std::vector<std::uint32_t>>
{
    std::vector<std::vector<std::uint32_t>> result;
    std::vector<bool> seen(g.size(), false);
    for (std::uint32_t root = 0 ; root < g.size() ; ++root) {
        if (seen[root])
            continue;
        std::vector<std::uint32_t> comp{ root };
        seen[root] = true;
        for (std::size_t i = 0 ; i < comp.size() ; ++i)
            for (auto w : g.neighbours(comp[i]))
                if (! seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

auto is_connected(const SimpleGraph & g) -> bool
{
    return components(g).size() <= 1;
}

auto components(const Multigraph & g) -> std::vector<std::vector<VertexIndex>>
{
    return components(underlying_simple(g));
}

auto is_connected(const Multigraph & g) -> bool
{
    return components(g).size() <= 1;
}

auto is_biconnected(const Multigraph & g) -> bool
{
    if (g.vertex_count() < 2 || ! is_connected(g))
        return false;

    // Articulation points by iterative DFS lowpoints.
    auto s = underlying_simple(g);
    auto n = s.size();
    std::vector<std::size_t> disc(n, infinite), low(n, 0);
    std::vector<std::uint32_t> parent(n, static_cast<std::uint32_t>(-1));
    std::vector<std::size_t> next_child(n, 0);
    std::size_t timer = 0, root_children = 0;
    std::vector<std::uint32_t> stack{ 0 };
    disc[0] = low[0] = timer++;
    while (! stack.empty()) {
        auto u = stack.back();
        auto nbrs = s.neighbours(u);
        if (next_child[u] < nbrs.size()) {
            auto w = nbrs[next_child[u]++];
            if (disc[w] == infinite) {
                parent[w] = u;
                disc[w] = low[w] = timer++;
                if (u == 0)
                    ++root_children;
                stack.push_back(w);
            }
            else if (w != parent[u])
                low[u] = std::min(low[u], disc[w]);
        }
        else {
            stack.pop_back();
            if (parent[u] != static_cast<std::uint32_t>(-1)) {
                auto p = parent[u];
                low[p] = std::min(low[p], low[u]);
                if (p != 0 && low[u] >= disc[p])
                    return false;
            }
        }
    }
    return root_children <= 1;
}

auto diameter(const Multigraph & g) -> std::size_t
{
    if (g.null())
        return 0;
    if (! is_connected(g))
        return infinite;
    auto s = underlying_simple(g);
    std::size_t result = 0;
    for (std::uint32_t root = 0 ; root < s.size() ; ++root) {
        std::vector<std::size_t> dist(s.size(), infinite);
        std::queue<std::uint32_t> q;
        dist[root] = 0;
        q.push(root);
        while (! q.empty()) {
            auto u = q.front();
            q.pop();
            result = std::max(result, dist[u]);
            for (auto w : s.neighbours(u))
                if (dist[w] == infinite) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
    }
    return result;
}

auto has_cycle(const Multigraph & g) -> bool
{
    return g.edge_count() + components(g).size() > g.vertex_count();
}

auto is_regular(const Multigraph & g) -> std::optional<std::size_t>
{
    if (g.null())
        return 0;
    auto d = g.degree(0);
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
        if (g.degree(v) != d)
            return std::nullopt;
    return d;
}

// ---- subgraphs ----------------------------------------------------------------

auto induced_subgraph(const Multigraph & g, std::span<const VertexIndex> vertices) -> Multigraph
{
    std::vector<bool> keep(g.vertex_count(), false);
    std::vector<std::string> ids;
    for (auto v : vertices) {
        if (v >= g.vertex_count())
            fail(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
        if (! keep[v])
            ids.push_back(g.vertex_id(v));
        keep[v] = true;
    }
    std::vector<EdgeSpec> edges;
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
        auto [u, v] = g.endpoints(e);
        if (keep[u] && keep[v])
            edges.push_back({ g.edge_id(e), g.vertex_id(u), g.vertex_id(v) });
    }
    return Multigraph(std::move(ids), std::move(edges));
}

auto induced_subgraph(const Multigraph & g, std::span<const std::string> vertices) -> Multigraph
{
    std::vector<VertexIndex> indices;
    for (auto & v : vertices)
        indices.push_back(g.vertex_index(v));
    return induced_subgraph(g, std::span<const VertexIndex>(indices));
}

auto edge_subgraph(const Multigraph & g, std::span<const EdgeIndex> edges, std::span<const VertexIndex> vertices)
    -> Multigraph
{
    std::vector<bool> keep_vertex(g.vertex_count(), false), keep_edge(g.edge_count(), false);
    for (auto v : vertices) {
        if (v >= g.vertex_count())
            fail(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
        keep_vertex[v] = true;
    }
    for (auto e : edges) {
        if (e >= g.edge_count())
            fail(ErrorCode::UnknownEdge, "edge index " + std::to_string(e) + " out of range");
        keep_edge[e] = true;
        keep_vertex[g.endpoints(e).first] = keep_vertex[g.endpoints(e).second] = true;
    }
    std::vector<std::string> ids;
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
        if (keep_vertex[v])
            ids.push_back(g.vertex_id(v));
    std::vector<EdgeSpec> specs;
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        if (keep_edge[e])
            specs.push_back({ g.edge_id(e), g.vertex_id(g.endpoints(e).first), g.vertex_id(g.endpoints(e).second) });
    return Multigraph(std::move(ids), std::move(specs));
}

auto edge_subgraph(const Multigraph & g, std::span<const std::string> edges, std::span<const std::string> vertices)
    -> Multigraph
{
    std::vector<EdgeIndex> e_indices;
    std::vector<VertexIndex> v_indices;
    for (auto & e : edges)
        e_indices.push_back(g.edge_index(e));
    for (auto & v : vertices)
        v_indices.push_back(g.vertex_index(v));
    return edge_subgraph(g, std::span<const EdgeIndex>(e_indices), std::span<const VertexIndex>(v_indices));
}

auto remove_vertices(const Multigraph & g, std::span<const VertexIndex> vertices) -> Multigraph
{
    std::vector<bool> drop(g.vertex_count(), false);
    for (auto v : vertices)
        drop[v] = true;
    std::vector<VertexIndex> keep;
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
        if (! drop[v])
            keep.push_back(v);
    return induced_subgraph(g, std::span<const VertexIndex>(keep));
}

auto peel_leaves(const Multigraph & g) -> Multigraph
{
    auto current = g;
    while (true) {
        std::vector<VertexIndex> leaves;
        for (VertexIndex v = 0 ; v < current.vertex_count() ; ++v)
            if (current.degree(v) == 1)
                leaves.push_back(v);
        if (leaves.empty())
            return current;
        // one at a time, so an isolated edge ends as K_1 rather than vanishing
        current = remove_vertices(current, std::span<const VertexIndex>(leaves.data(), 1));
    }
}

}
