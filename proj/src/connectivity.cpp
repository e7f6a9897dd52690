#include <linkgraph/construction.hpp>
#include <linkgraph/error.hpp>

#include <deque>
#include <map>

namespace linkgraph {

namespace
{
    // Breadth-first search over shunting moves, never materialising the link graph.
    auto shunt_closure(const Multigraph & g, const LinkSet & links, const std::vector<std::size_t> & sources)
        -> std::vector<bool>
    {
        std::vector<bool> seen(links.size(), false);
        std::deque<std::size_t> queue;
        for (auto s : sources)
            if (! seen[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
        while (! queue.empty()) {
            auto at = queue.front();
            queue.pop_front();
            for (auto & step : one_step_shunts(g, links.at(at))) {
                auto next = links.find(step.to);
                if (! next)
                    fail(ErrorCode::ConstructionFailed, "shunt left the link set");
                if (! seen[*next]) {
                    seen[*next] = true;
                    queue.push_back(*next);
                }
            }
        }
        return seen;
    }

    auto all(const std::vector<bool> & v) -> bool
    {
        return std::find(v.begin(), v.end(), false) == v.end();
    }

    auto within(const HubUnits & hub, std::span<const std::uint32_t> units) -> bool
    {
        for (std::size_t i = 0 ; i < units.size() ; ++i)
            if (! (i % 2 == 0 ? hub.vertices[units[i]] : hub.edges[units[i]]))
                return false;
        return true;
    }

    struct Criterion {
        bool hub_connected;
        bool hub_has_links;
        bool value;
    };

    auto evaluate(const Multigraph & g, std::size_t ell, std::size_t limit) -> Criterion
    {
        auto links = link_set(g, ell, limit);
        if (links.empty())
            return { true, false, true };

        auto hub = hub_units(g, ell, limit);
        Criterion result{ is_connected(hub_subgraph(g, ell, limit)), false, false };
        if (! result.hub_connected)
            return result;

        std::vector<std::size_t> hub_links;
        for (std::size_t i = 0 ; i < links.size() ; ++i)
            if (within(hub, links.units(i)))
                hub_links.push_back(i);
        result.hub_has_links = ! hub_links.empty();

        if (result.hub_has_links) {
            result.value = all(shunt_closure(g, links, hub_links));
            return result;
        }

        // Every link lives in the component of the connected hub, so the
        // middle-unit test for connected graphs applies there.
        std::map<Unit, std::vector<std::size_t>> by_middle;
        for (std::size_t i = 0 ; i < links.size() ; ++i)
            by_middle[middle_unit(links.at(i))].push_back(i);
        result.value = true;
        for (auto & [unit, group] : by_middle) {
            auto reach = shunt_closure(g, links, { group.front() });
            for (auto i : group)
                if (! reach[i])
                    result.value = false;
        }
        return result;
    }
}

auto link_graph_connected(const Multigraph & g, std::size_t ell, std::size_t limit) -> bool
{
    return evaluate(g, ell, limit).value;
}

auto connectivity_evidence(const Multigraph & g, std::size_t ell, std::size_t limit) -> ConnectivityEvidence
{
    auto c = evaluate(g, ell, limit);
    return { c.hub_connected, c.hub_has_links, c.value, is_connected(link_graph(g, ell, limit)) };
}

}
