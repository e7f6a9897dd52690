#include <linkgraph/construction.hpp>
#include <linkgraph/error.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace linkgraph {

auto natural_partition(const LabeledGraph & h) -> AlmostStandardPartition
{
    if (h.ell() < 2)
        fail(ErrorCode::WindowTooShort, "natural partition needs ell >= 2, got " + std::to_string(h.ell()));

    std::map<Link, std::vector<std::uint32_t>> vertex_parts, edge_parts;
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
        vertex_parts[middle_segment(h.vertex(v), h.ell() - 2)].push_back(v);
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
        edge_parts[middle_segment(h.label(e), h.ell() - 1)].push_back(e);

    AlmostStandardPartition p;
    for (auto & [key, part] : vertex_parts) {
        p.vertex_keys.push_back(key);
        p.vertex_parts.push_back(part);
    }
    for (auto & [key, part] : edge_parts) {
        p.edge_keys.push_back(key);
        p.edge_parts.push_back(part);
    }
    return p;
}

namespace
{
    auto owner(std::size_t count, const std::vector<std::vector<std::uint32_t>> & parts, std::string_view what)
        -> std::vector<std::uint32_t>
    {
        constexpr auto none = static_cast<std::uint32_t>(-1);
        std::vector<std::uint32_t> result(count, none);
        for (std::uint32_t i = 0 ; i < parts.size() ; ++i)
            for (auto x : parts[i]) {
                if (x >= count)
                    fail(ErrorCode::PartitionMismatch, std::string(what) + " index " + std::to_string(x) + " out of range");
                if (result[x] != none)
                    fail(ErrorCode::PartitionMismatch, std::string(what) + " " + std::to_string(x) + " lies in two parts");
                result[x] = i;
            }
        for (std::size_t x = 0 ; x < count ; ++x)
            if (result[x] == none)
                fail(ErrorCode::PartitionMismatch, std::string(what) + " " + std::to_string(x) + " lies in no part");
        return result;
    }

    // Whether the edges form exactly a complete bipartite graph on the
    // vertices they touch: connected, two-colourable, one edge per cross pair.
    auto complete_bipartite(const LabeledGraph & h, const std::vector<std::uint32_t> & edges) -> bool
    {
        std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
        std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (auto e : edges) {
            auto [u, v] = h.endpoints(e);
            if (! pairs.insert({ u, v }).second)
                return false;
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        if (adj.empty())
            return false;

        std::map<std::uint32_t, int> side;
        std::vector<std::uint32_t> stack{ adj.begin()->first };
        side[stack.back()] = 0;
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto w : adj[u]) {
                auto it = side.find(w);
                if (it == side.end()) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                }
                else if (it->second == side[u])
                    return false;
            }
        }
        if (side.size() != adj.size())
            return false;

        std::size_t left = 0;
        for (auto & [v, s] : side)
            left += (s == 0);
        return pairs.size() == left * (side.size() - left);
    }
}

auto verify_almost_standard(const LabeledGraph & h, const AlmostStandardPartition & p) -> PartitionReport
{
    auto vertex_owner = owner(h.vertex_count(), p.vertex_parts, "vertex");
    auto edge_owner = owner(h.edge_count(), p.edge_parts, "edge");

    PartitionReport report;

    report.a = true;
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
        if (vertex_owner[h.endpoints(e).first] == vertex_owner[h.endpoints(e).second])
            report.a = false;

    report.b = true;
    for (auto & part : p.edge_parts) {
        std::set<std::uint32_t> touched;
        for (auto e : part) {
            touched.insert(vertex_owner[h.endpoints(e).first]);
            touched.insert(vertex_owner[h.endpoints(e).second]);
        }
        if (touched.size() != 2)
            report.b = false;
    }

    report.c = true;
    for (auto & part : p.edge_parts)
        if (! complete_bipartite(h, part))
            report.c = false;

    report.d = true;
    report.e = true;
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> witnessed;
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v) {
        std::set<std::uint32_t> parts;
        for (auto e : h.incident_edges(v))
            parts.insert(edge_owner[e]);
        if (parts.size() > 2)
            report.d = false;
        for (auto i = parts.begin() ; i != parts.end() ; ++i)
            for (auto j = std::next(i) ; j != parts.end() ; ++j)
                if (! witnessed.insert({ vertex_owner[v], *i, *j }).second)
                    report.e = false;
    }
    return report;
}

namespace
{
    auto part_pair(const LabeledGraph & h, const std::vector<std::uint32_t> & vertex_owner,
            const std::vector<std::uint32_t> & edges) -> std::pair<std::uint32_t, std::uint32_t>
    {
        std::set<std::uint32_t> touched;
        for (auto e : edges) {
            touched.insert(vertex_owner[h.endpoints(e).first]);
            touched.insert(vertex_owner[h.endpoints(e).second]);
        }
        if (touched.size() != 2)
            fail(ErrorCode::PartitionMismatch, "an edge part meets " + std::to_string(touched.size()) + " vertex parts");
        return { *touched.begin(), *touched.rbegin() };
    }
}

auto quotient(const LabeledGraph & h, const AlmostStandardPartition & p) -> Multigraph
{
    auto vertex_owner = owner(h.vertex_count(), p.vertex_parts, "vertex");
    owner(h.edge_count(), p.edge_parts, "edge");

    auto keyed = p.vertex_keys.size() == p.vertex_parts.size() && p.edge_keys.size() == p.edge_parts.size();
    std::vector<std::string> vertex_ids;
    for (std::size_t i = 0 ; i < p.vertex_parts.size() ; ++i)
        vertex_ids.push_back(keyed ? format(h.source(), p.vertex_keys[i]) : "V" + std::to_string(i));

    std::vector<EdgeSpec> edges;
    for (std::size_t j = 0 ; j < p.edge_parts.size() ; ++j) {
        auto [u, v] = part_pair(h, vertex_owner, p.edge_parts[j]);
        edges.push_back({ keyed ? format(h.source(), p.edge_keys[j]) : "E" + std::to_string(j), vertex_ids[u],
                vertex_ids[v] });
    }
    return Multigraph(std::move(vertex_ids), std::move(edges));
}

auto quotient_embedding_check(const LabeledGraph & h, const AlmostStandardPartition & p, const LabeledGraph & lower)
    -> bool
{
    if (h.ell() < 2 || lower.ell() + 2 != h.ell())
        return false;
    if (p.vertex_keys.size() != p.vertex_parts.size() || p.edge_keys.size() != p.edge_parts.size())
        return false;
    auto vertex_owner = owner(h.vertex_count(), p.vertex_parts, "vertex");
    owner(h.edge_count(), p.edge_parts, "edge");

    for (std::size_t i = 0 ; i < p.vertex_parts.size() ; ++i)
        for (auto v : p.vertex_parts[i])
            if (middle_segment(h.vertex(v), h.ell() - 2) != p.vertex_keys[i])
                return false;
    for (std::size_t j = 0 ; j < p.edge_parts.size() ; ++j)
        for (auto e : p.edge_parts[j])
            if (middle_segment(h.label(e), h.ell() - 1) != p.edge_keys[j])
                return false;

    std::vector<std::uint32_t> image;
    std::vector<bool> in_image(lower.vertex_count(), false);
    for (auto & key : p.vertex_keys) {
        auto v = lower.find_vertex(key);
        if (! v || in_image[*v])
            return false;
        in_image[*v] = true;
        image.push_back(*v);
    }

    std::set<std::size_t> edge_image;
    for (std::size_t j = 0 ; j < p.edge_parts.size() ; ++j) {
        auto e = lower.labels().find(p.edge_keys[j]);
        if (! e || ! edge_image.insert(*e).second)
            return false;
        auto [u, v] = part_pair(h, vertex_owner, p.edge_parts[j]);
        std::pair<std::uint32_t, std::uint32_t> expected{ std::min(image[u], image[v]), std::max(image[u], image[v]) };
        if (lower.endpoints(static_cast<std::uint32_t>(*e)) != expected)
            return false;
    }

    for (std::uint32_t e = 0 ; e < lower.edge_count() ; ++e) {
        auto [u, v] = lower.endpoints(e);
        if (in_image[u] && in_image[v] && ! edge_image.count(e))
            return false;
    }
    return true;
}

auto quotient_embedding_check(const Multigraph & g, std::size_t ell, std::size_t limit) -> bool
{
    if (ell < 2)
        fail(ErrorCode::WindowTooShort, "quotient embedding needs ell >= 2");
    auto h = link_graph(g, ell, limit);
    return quotient_embedding_check(h, natural_partition(h), link_graph(g, ell - 2, limit));
}

}
