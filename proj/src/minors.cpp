#include <linkgraph/minors.hpp>
#include <linkgraph/error.hpp>
#include <linkgraph/thresholds.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <set>

namespace linkgraph {

namespace
{
    constexpr auto none = static_cast<std::uint32_t>(-1);

    auto pair_name(std::uint32_t i, std::uint32_t j) -> std::string
    {
        return std::to_string(i) + "-" + std::to_string(j);
    }
}

auto complete_target(std::size_t t) -> SimpleGraph
{
    SimpleGraph k(t);
    for (std::uint32_t i = 0 ; i < t ; ++i)
        for (std::uint32_t j = i + 1 ; j < t ; ++j)
            k.add_edge(i, j);
    k.finalise();
    return k;
}

auto verify_minor(const SimpleGraph & host, const MinorWitness & w) -> MinorCheck
{
    auto n = host.size();
    if (w.branch_sets.size() != w.target.size())
        return { false, "BranchSetCount: " + std::to_string(w.branch_sets.size()) + " branch sets for a target on " +
                std::to_string(w.target.size()) + " vertices" };

    std::vector<std::uint32_t> owner(n, none);
    for (std::uint32_t i = 0 ; i < w.branch_sets.size() ; ++i) {
        if (w.branch_sets[i].empty())
            return { false, "EmptyBranchSet: " + std::to_string(i) };
        for (auto v : w.branch_sets[i]) {
            if (v >= n)
                return { false, "IndexOutOfRange: host vertex " + std::to_string(v) };
            if (owner[v] != none)
                return { false, "DisjointnessViolated: host vertex " + std::to_string(v) + " in branch sets " +
                        std::to_string(owner[v]) + " and " + std::to_string(i) };
            owner[v] = i;
        }
    }

    for (std::uint32_t i = 0 ; i < w.branch_sets.size() ; ++i) {
        auto & set = w.branch_sets[i];
        std::vector<std::uint32_t> stack{ set.front() };
        std::set<std::uint32_t> reached{ set.front() };
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto x : host.neighbours(u))
                if (owner[x] == i && reached.insert(x).second)
                    stack.push_back(x);
        }
        if (reached.size() != set.size())
            return { false, "BranchSetDisconnected: " + std::to_string(i) };
    }

    for (auto & [key, path] : w.connectors) {
        auto [i, j] = key;
        if (i >= j || j >= w.target.size() || ! w.target.adjacent(i, j))
            return { false, "UnexpectedConnector: " + pair_name(i, j) };
    }

    std::vector<bool> interior(n, false);
    for (std::uint32_t i = 0 ; i < w.target.size() ; ++i)
        for (auto j : w.target.neighbours(i)) {
            if (j <= i)
                continue;
            auto it = w.connectors.find({ i, j });
            if (it == w.connectors.end())
                return { false, "MissingConnector: " + pair_name(i, j) };
            auto & path = it->second;
            if (path.size() < 2)
                return { false, "ConnectorTooShort: " + pair_name(i, j) };
            for (auto v : path)
                if (v >= n)
                    return { false, "IndexOutOfRange: host vertex " + std::to_string(v) };
            if (owner[path.front()] != i || owner[path.back()] != j)
                return { false, "ConnectorEndpoints: " + pair_name(i, j) };
            for (std::size_t k = 0 ; k + 1 < path.size() ; ++k)
                if (! host.adjacent(path[k], path[k + 1]))
                    return { false, "ConnectorNotAPath: " + pair_name(i, j) };
            for (std::size_t k = 1 ; k + 1 < path.size() ; ++k) {
                if (owner[path[k]] != none)
                    return { false, "ConnectorMeetsBranchSet: " + pair_name(i, j) };
                if (interior[path[k]])
                    return { false, "ConnectorsOverlap: " + pair_name(i, j) };
                interior[path[k]] = true;
            }
        }
    return { true, "" };
}

auto verify_minor(const LabeledGraph & host, const MinorWitness & w) -> MinorCheck
{
    return verify_minor(host.underlying_simple(), w);
}

namespace
{
    // Each connected component is split into connected, pairwise adjacent
    // parts. Parts are chosen in order of their least vertex, so every new
    // part has to touch all earlier ones.
    class PartitionSearch {
    public:
        PartitionSearch(std::vector<std::uint32_t> neighbours, std::size_t upper)
            : _neighbours(std::move(neighbours)), _upper(upper)
        {
            auto k = _neighbours.size();
            _connected.assign(std::size_t(1) << k, false);
            for (std::uint32_t mask = 1 ; mask < _connected.size() ; ++mask) {
                auto seen = mask & -mask;
                for (std::uint32_t frontier = seen ; frontier ; ) {
                    std::uint32_t next = 0;
                    for (auto f = frontier ; f ; f &= f - 1)
                        next |= _neighbours[std::countr_zero(f)];
                    frontier = next & mask & ~seen;
                    seen |= frontier;
                }
                _connected[mask] = seen == mask;
            }
        }

        auto run() -> std::vector<std::uint32_t>
        {
            search(static_cast<std::uint32_t>(_connected.size() - 1));
            return _best;
        }

    private:
        void search(std::uint32_t remaining)
        {
            if (_best.size() == _upper)
                return;
            if (remaining == 0) {
                if (_parts.size() > _best.size())
                    _best = _parts;
                return;
            }
            if (_parts.size() + std::popcount(remaining) <= _best.size())
                return;
            auto low = remaining & -remaining;
            auto rest = remaining & ~low;
            for (std::uint32_t s = 0 ; ; s = (s - rest) & rest) {
                auto part = s | low;
                if (_connected[part] && touches_all(part)) {
                    _parts.push_back(part);
                    search(remaining & ~part);
                    _parts.pop_back();
                }
                if (s == rest)
                    break;
            }
        }

        auto touches_all(std::uint32_t part) const -> bool
        {
            std::uint32_t reach = 0;
            for (auto f = part ; f ; f &= f - 1)
                reach |= _neighbours[std::countr_zero(f)];
            return std::all_of(_parts.begin(), _parts.end(), [&] (auto p) { return (reach & p) != 0; });
        }

        std::vector<std::uint32_t> _neighbours;
        std::size_t _upper;
        std::vector<bool> _connected;
        std::vector<std::uint32_t> _parts;
        std::vector<std::uint32_t> _best;
    };

    auto direct_connectors(const SimpleGraph & host, MinorWitness & w) -> void
    {
        for (std::uint32_t i = 0 ; i < w.branch_sets.size() ; ++i)
            for (std::uint32_t j = i + 1 ; j < w.branch_sets.size() ; ++j) {
                std::vector<std::uint32_t> edge;
                for (auto a : w.branch_sets[i]) {
                    for (auto b : w.branch_sets[j])
                        if (host.adjacent(a, b)) {
                            edge = { a, b };
                            break;
                        }
                    if (! edge.empty())
                        break;
                }
                if (! edge.empty())
                    w.connectors[{ i, j }] = edge;
            }
    }
}

auto exact_hadwiger(const SimpleGraph & g, std::size_t cap) -> HadwigerResult
{
    if (cap > max_minor_oracle_cap)
        fail(ErrorCode::InvalidParameter, "minor oracle cap " + std::to_string(cap) + " exceeds " +
                std::to_string(max_minor_oracle_cap));
    if (g.size() > cap)
        fail(ErrorCode::OracleTooLarge, "Hadwiger oracle limited to " + std::to_string(cap) + " vertices, graph has " +
                std::to_string(g.size()));

    std::vector<std::vector<std::uint32_t>> best;
    for (auto & component : components(g)) {
        std::vector<std::uint32_t> local(g.size(), none);
        for (std::uint32_t i = 0 ; i < component.size() ; ++i)
            local[component[i]] = i;
        std::vector<std::uint32_t> neighbours(component.size(), 0);
        std::size_t edges = 0;
        for (std::uint32_t i = 0 ; i < component.size() ; ++i)
            for (auto x : g.neighbours(component[i])) {
                neighbours[i] |= std::uint32_t(1) << local[x];
                ++edges;
            }
        edges /= 2;
        std::size_t upper = 1;
        while (upper < component.size() && (upper + 1) * upper / 2 <= edges)
            ++upper;
        if (upper <= best.size())
            continue;

        auto parts = PartitionSearch(std::move(neighbours), upper).run();
        if (parts.size() <= best.size())
            continue;
        best.clear();
        for (auto part : parts) {
            std::vector<std::uint32_t> set;
            for (auto f = part ; f ; f &= f - 1)
                set.push_back(component[std::countr_zero(f)]);
            std::sort(set.begin(), set.end());
            best.push_back(std::move(set));
        }
    }

    HadwigerResult result;
    result.eta = best.size();
    result.witness.target = complete_target(best.size());
    result.witness.branch_sets = std::move(best);
    direct_connectors(g, result.witness);
    return result;
}

auto exact_hadwiger(const Multigraph & g, std::size_t cap) -> HadwigerResult
{
    return exact_hadwiger(underlying_simple(g), cap);
}

namespace
{
    using Mask = std::vector<bool>;

    // Breadth-first shortest arc from the nearest source to `to` inside
    // `allowed`, scanning incident edges in index order.
    auto shortest_arc(const Multigraph & g, const std::vector<VertexIndex> & sources, VertexIndex to,
            const Mask & allowed, const Mask & banned = {}) -> std::optional<Arc>
    {
        std::vector<std::uint32_t> parent(g.vertex_count(), none);
        std::vector<bool> seen(g.vertex_count(), false);
        std::deque<VertexIndex> queue;
        for (auto s : sources)
            if (allowed[s] && ! seen[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
        while (! queue.empty() && ! seen[to]) {
            auto u = queue.front();
            queue.pop_front();
            for (auto e : g.incident_edges(u)) {
                if (! banned.empty() && banned[e])
                    continue;
                auto w = g.other_end(e, u);
                if (! allowed[w] || seen[w])
                    continue;
                seen[w] = true;
                parent[w] = e;
                queue.push_back(w);
            }
        }
        if (! seen[to])
            return std::nullopt;
        std::vector<std::uint32_t> units{ to };
        for (auto v = to ; parent[v] != none ; ) {
            auto e = parent[v];
            v = g.other_end(e, v);
            units.push_back(e);
            units.push_back(v);
        }
        std::reverse(units.begin(), units.end());
        return Arc(std::move(units));
    }

    // A shortest closed arc of length at least `min_length` (2 or 3) inside
    // `allowed`, starting and ending at the same vertex.
    auto shortest_cycle(const Multigraph & g, const Mask & allowed, std::size_t min_length) -> std::optional<Arc>
    {
        std::optional<Arc> best;
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
            auto [u, v] = g.endpoints(e);
            if (! allowed[u] || ! allowed[v])
                continue;
            Mask banned(g.edge_count(), false);
            banned[e] = true;
            if (min_length > 2)
                for (auto f : g.incident_edges(u))
                    if (g.other_end(f, u) == v)
                        banned[f] = true;
            auto back = shortest_arc(g, { v }, u, allowed, banned);
            if (! back)
                continue;
            auto closed = conjunction(Arc({ u, e, v }), *back);
            if (! best || closed.length() < best->length())
                best = closed;
        }
        return best;
    }

    // The arc of the given length that runs forward around a closed arc and
    // ends at vertex position `end`.
    auto around(const Arc & cycle, std::size_t end, std::size_t length) -> Arc
    {
        auto k = cycle.length();
        auto start = (end + k * (length + 1) - length) % k;
        std::vector<std::uint32_t> units{ cycle.vertex(start) };
        for (std::size_t s = 0 ; s < length ; ++s) {
            auto pos = (start + s) % k;
            units.push_back(cycle.edge(pos + 1));
            units.push_back(cycle.vertex(pos + 1));
        }
        return Arc(std::move(units));
    }

    auto closed_arc(std::initializer_list<Arc> pieces) -> Arc
    {
        auto it = pieces.begin();
        auto result = *it;
        for (++it ; it != pieces.end() ; ++it)
            result = conjunction(result, *it);
        if (result.tail() != result.head() || result.length() < 2 || result.tail_edge() == result.head_edge())
            fail(ErrorCode::ConstructionFailed, "pieces do not close up into a cycle");
        return result;
    }

    class WitnessBuilder {
    public:
        WitnessBuilder(const LabeledGraph & h, std::size_t t) : _h(h), _sets(t) {}

        auto index(const Link & l) const -> std::uint32_t
        {
            auto v = _h.find_vertex(l);
            if (! v)
                fail(ErrorCode::ConstructionFailed, "constructed link " + format(_h.source(), l) +
                        " is not a vertex of the link graph");
            return *v;
        }

        void add(std::size_t i, const Link & l) { _sets[i].insert(index(l)); }

        void add_images(std::size_t i, const Arc & base)
        {
            for (auto & image : shunt_trace(base, _h.ell()).images)
                add(i, image);
        }

        void connect(std::uint32_t i, std::uint32_t j, std::vector<std::uint32_t> path)
        {
            if (i > j) {
                std::swap(i, j);
                std::reverse(path.begin(), path.end());
            }
            _connectors[{ i, j }] = std::move(path);
        }

        void connect_images(std::uint32_t i, std::uint32_t j, const Arc & base)
        {
            std::vector<std::uint32_t> path;
            for (auto & image : shunt_trace(base, _h.ell()).images)
                path.push_back(index(image));
            connect(i, j, std::move(path));
        }

        auto finish(SimpleGraph target) -> MinorWitness
        {
            MinorWitness w;
            w.target = std::move(target);
            for (auto & s : _sets)
                w.branch_sets.emplace_back(s.begin(), s.end());
            w.connectors = std::move(_connectors);
            auto check = verify_minor(_h, w);
            if (! check.ok)
                fail(ErrorCode::ConstructionFailed, "constructed minor failed verification: " + check.reason);
            return w;
        }

    private:
        const LabeledGraph & _h;
        std::vector<std::set<std::uint32_t>> _sets;
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> _connectors;
    };

    struct CutSetup {
        Mask in_x;
        Mask in_y;
        std::vector<VertexIndex> x;
        /// Arcs (y_i, e_i, x_i) in edge index order.
        std::vector<Arc> cut;
        /// Shortest arcs between the x_i inside X, P[j][i] the reverse of P[i][j].
        std::vector<std::vector<Arc>> p;
    };

    auto reach_within(const Multigraph & g, VertexIndex from, const Mask & allowed) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> dist(g.vertex_count(), infinite);
        std::deque<VertexIndex> queue{ from };
        dist[from] = 0;
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto e : g.incident_edges(u)) {
                auto w = g.other_end(e, u);
                if (allowed[w] && dist[w] == infinite) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    auto cut_setup(const LabeledGraph & h, const CutInstance & instance) -> CutSetup
    {
        auto & g = h.source();
        auto ell = h.ell();
        if (ell < 1)
            fail(ErrorCode::PreconditionViolated, "cut constructions need ell >= 1");

        CutSetup s;
        s.in_x.assign(g.vertex_count(), false);
        for (auto v : instance.x) {
            if (v >= g.vertex_count())
                fail(ErrorCode::PreconditionViolated, "vertex index " + std::to_string(v) + " out of range");
            s.in_x[v] = true;
        }
        for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
            if (s.in_x[v])
                s.x.push_back(v);
        if (s.x.empty())
            fail(ErrorCode::PreconditionViolated, "X is empty");
        s.in_y.assign(g.vertex_count(), false);
        std::vector<VertexIndex> y;
        for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
            if (! s.in_x[v]) {
                s.in_y[v] = true;
                y.push_back(v);
            }

        for (auto v : s.x)
            for (auto d : reach_within(g, v, s.in_x))
                if (d != infinite && d >= ell)
                    fail(ErrorCode::PreconditionViolated, "diam(X) is at least ell = " + std::to_string(ell));
        auto from_first = reach_within(g, s.x.front(), s.in_x);
        for (auto v : s.x)
            if (from_first[v] == infinite)
                fail(ErrorCode::PreconditionViolated, "X is not connected");
        if (y.empty())
            fail(ErrorCode::PreconditionViolated, "Y = G - X is empty");
        auto from_y = reach_within(g, y.front(), s.in_y);
        for (auto v : y)
            if (from_y[v] == infinite)
                fail(ErrorCode::PreconditionViolated, "Y = G - X is not connected");

        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
            auto [u, v] = g.endpoints(e);
            if (s.in_x[u] != s.in_x[v])
                s.cut.push_back(s.in_x[u] ? Arc({ v, e, u }) : Arc({ u, e, v }));
        }

        auto t = s.cut.size();
        s.p.assign(t, std::vector<Arc>(t));
        for (std::size_t i = 0 ; i < t ; ++i)
            for (std::size_t j = i ; j < t ; ++j) {
                s.p[i][j] = *shortest_arc(g, { s.cut[i].head() }, s.cut[j].head(), s.in_x);
                s.p[j][i] = s.p[i][j].reversed();
            }
        return s;
    }

    // Branch sets X_i and connectors R_ij shared by both cut constructions.
    void add_cut_branch_sets(WitnessBuilder & b, const CutSetup & s, const std::vector<Arc> & l, std::size_t ell)
    {
        auto t = s.cut.size();
        for (std::size_t i = 0 ; i < t ; ++i)
            for (std::size_t j = 0 ; j < t ; ++j)
                b.add_images(i, conjunction(l[i], s.p[i][j]));
        for (std::uint32_t i = 0 ; i < t ; ++i)
            for (std::uint32_t j = i + 1 ; j < t ; ++j) {
                auto lij = s.p[i][j].length();
                auto r = conjunction(conjunction(l[i].segment(lij, ell), s.p[i][j]), l[j].segment(ell, lij));
                b.connect_images(i, j, r);
            }
    }
}

auto kt_minor_from_cut(const LabeledGraph & h, const CutInstance & instance) -> MinorWitness
{
    auto & g = h.source();
    auto ell = h.ell();
    auto s = cut_setup(h, instance);
    auto t = s.cut.size();
    if (t < 2)
        fail(ErrorCode::PreconditionViolated, "|E(X, Y)| = " + std::to_string(t) + ", need at least 2");

    std::vector<Arc> l;
    std::vector<Arc> cycles;
    for (std::size_t i = 0 ; i < t ; ++i) {
        auto k = (i + 1) % t;
        auto q = *shortest_arc(g, { s.cut[k].tail() }, s.cut[i].tail(), s.in_y);
        cycles.push_back(closed_arc({ s.p[i][k], s.cut[k].reversed(), q, s.cut[i] }));
        l.push_back(around(cycles.back(), cycles.back().length(), ell));
    }

    if (t == 2) {
        WitnessBuilder b(h, 2);
        auto step = shunt_trace(around(cycles[0], cycles[0].length(), ell + 1), ell).images;
        b.add(0, step[0]);
        b.add(1, step[1]);
        b.connect(0, 1, { b.index(step[0]), b.index(step[1]) });
        return b.finish(complete_target(2));
    }

    WitnessBuilder b(h, t);
    add_cut_branch_sets(b, s, l, ell);
    return b.finish(complete_target(t));
}

auto kt1_minor_with_cycle(const LabeledGraph & h, const CutInstance & instance) -> MinorWitness
{
    auto & g = h.source();
    auto ell = h.ell();
    auto s = cut_setup(h, instance);
    auto t = s.cut.size();

    auto o = shortest_cycle(g, s.in_y, 2);
    if (! o)
        fail(ErrorCode::NoCycleInY, "Y = G - X is a forest");
    auto k = o->length();
    std::vector<std::size_t> position(g.vertex_count(), infinite);
    std::vector<VertexIndex> on_cycle;
    for (std::size_t p = 0 ; p < k ; ++p) {
        position[o->vertex(p)] = p;
        on_cycle.push_back(o->vertex(p));
    }
    std::sort(on_cycle.begin(), on_cycle.end());

    WitnessBuilder b(h, t + 1);
    auto z = static_cast<std::uint32_t>(t);
    for (std::size_t p = 0 ; p < k ; ++p)
        b.add(z, Link::of(around(*o, p, ell)));

    std::vector<Arc> l;
    for (std::uint32_t i = 0 ; i < t ; ++i) {
        auto p = *shortest_arc(g, on_cycle, s.cut[i].tail(), s.in_y);
        auto qp = conjunction(around(*o, position[p.tail()], ell), p);
        auto full = conjunction(qp, s.cut[i]);
        auto si = p.length();
        l.push_back(full.segment(si + 1, ell + si + 1));
        b.add_images(z, qp);
        b.connect(i, z, { b.index(Link::of(l.back())), b.index(Link::of(full.segment(si, si + ell))) });
    }
    add_cut_branch_sets(b, s, l, ell);
    return b.finish(complete_target(t + 1));
}

namespace
{
    struct BranchUnits {
        std::vector<std::uint32_t> vertex_owner;
        /// Owner of hub edges with both ends in one branch set.
        std::vector<std::uint32_t> edge_owner;
    };

    auto branch_units(const Multigraph & g, const HubUnits & hub, const std::vector<std::vector<VertexIndex>> & sets)
        -> BranchUnits
    {
        BranchUnits units{ std::vector<std::uint32_t>(g.vertex_count(), none),
                std::vector<std::uint32_t>(g.edge_count(), none) };
        for (std::uint32_t i = 0 ; i < sets.size() ; ++i) {
            if (sets[i].empty())
                fail(ErrorCode::PreconditionViolated, "branch set " + std::to_string(i) + " is empty");
            for (auto v : sets[i]) {
                if (v >= g.vertex_count() || ! hub.vertices[v])
                    fail(ErrorCode::PreconditionViolated, "branch set " + std::to_string(i) +
                            " has a vertex outside the hub");
                if (units.vertex_owner[v] != none)
                    fail(ErrorCode::PreconditionViolated, "branch sets overlap at " + g.vertex_id(v));
                units.vertex_owner[v] = i;
            }
        }
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
            auto [u, v] = g.endpoints(e);
            if (hub.edges[e] && units.vertex_owner[u] != none && units.vertex_owner[u] == units.vertex_owner[v])
                units.edge_owner[e] = units.vertex_owner[u];
        }
        return units;
    }

    // Owner of every unit of the link, or none when the units straddle sets.
    auto link_owner(const BranchUnits & units, const Link & l) -> std::uint32_t
    {
        auto u = l.units();
        auto owner = units.vertex_owner[u[0]];
        for (std::size_t k = 0 ; k < u.size() ; ++k) {
            auto o = k % 2 ? units.edge_owner[u[k]] : units.vertex_owner[u[k]];
            if (o != owner)
                return none;
        }
        return owner;
    }

    auto middle_owner(const BranchUnits & units, const Link & l) -> std::uint32_t
    {
        auto c = middle_unit(l);
        return c.is_edge ? units.edge_owner[c.index] : units.vertex_owner[c.index];
    }
}

auto lift_minor(const LabeledGraph & h, const std::vector<std::vector<VertexIndex>> & branch_sets,
        const SimpleGraph & target) -> MinorWitness
{
    auto & g = h.source();
    auto ell = h.ell();
    if (branch_sets.size() != target.size())
        fail(ErrorCode::PreconditionViolated, "one branch set per target vertex expected");
    auto hub = hub_units(g, ell);
    auto units = branch_units(g, hub, branch_sets);
    auto k = branch_sets.size();

    for (std::uint32_t i = 0 ; i < k ; ++i) {
        std::vector<VertexIndex> stack{ branch_sets[i].front() };
        std::set<VertexIndex> reached{ stack.back() };
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto e : g.incident_edges(u))
                if (units.edge_owner[e] == i && reached.insert(g.other_end(e, u)).second)
                    stack.push_back(g.other_end(e, u));
        }
        if (reached.size() != std::set<VertexIndex>(branch_sets[i].begin(), branch_sets[i].end()).size())
            fail(ErrorCode::PreconditionViolated, "branch set " + std::to_string(i) + " is not connected in the hub");
    }

    std::vector<std::uint32_t> middle(h.vertex_count());
    std::vector<std::uint32_t> owner(h.vertex_count(), none);
    std::vector<std::vector<std::uint32_t>> seeds(k);
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v) {
        auto link = h.vertex(v);
        middle[v] = middle_owner(units, link);
        auto o = link_owner(units, link);
        if (o != none)
            seeds[o].push_back(v);
    }
    for (std::uint32_t i = 0 ; i < k ; ++i) {
        if (seeds[i].empty())
            fail(ErrorCode::BranchSetLacksLink, "branch set " + std::to_string(i) + " contains no " +
                    std::to_string(ell) + "-link");
        std::vector<std::uint32_t> stack = seeds[i];
        for (auto v : stack)
            owner[v] = i;
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto e : h.incident_edges(u)) {
                auto [a, b] = h.endpoints(e);
                auto w = a == u ? b : a;
                if (middle[w] == i && owner[w] == none) {
                    owner[w] = i;
                    stack.push_back(w);
                }
            }
        }
    }

    auto hs = h.underlying_simple();
    MinorWitness w;
    w.target = target;
    w.branch_sets.resize(k);
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
        if (owner[v] != none)
            w.branch_sets[owner[v]].push_back(v);

    for (std::uint32_t i = 0 ; i < k ; ++i)
        for (auto j : target.neighbours(i)) {
            if (j <= i)
                continue;
            std::optional<EdgeIndex> joining;
            for (EdgeIndex e = 0 ; e < g.edge_count() && ! joining ; ++e) {
                auto [a, b] = g.endpoints(e);
                auto oa = units.vertex_owner[a], ob = units.vertex_owner[b];
                if (hub.edges[e] && ((oa == i && ob == j) || (oa == j && ob == i)))
                    joining = e;
            }
            if (! joining)
                fail(ErrorCode::PreconditionViolated, "no hub edge joins branch sets " + pair_name(i, j));

            std::vector<std::uint32_t> path;
            if (ell % 2 == 0) {
                for (auto a : w.branch_sets[i]) {
                    for (auto b : hs.neighbours(a))
                        if (owner[b] == j) {
                            path = { a, b };
                            break;
                        }
                    if (! path.empty())
                        break;
                }
            }
            else {
                for (std::uint32_t v = 0 ; v < h.vertex_count() && path.empty() ; ++v) {
                    auto c = middle_unit(h.vertex(v));
                    if (! c.is_edge || c.index != *joining)
                        continue;
                    std::optional<std::uint32_t> a, b;
                    for (auto x : hs.neighbours(v)) {
                        if (owner[x] == i && ! a)
                            a = x;
                        if (owner[x] == j && ! b)
                            b = x;
                    }
                    if (a && b)
                        path = { *a, v, *b };
                }
            }
            if (path.empty())
                fail(ErrorCode::ConstructionFailed, "no connector between lifted branch sets " + pair_name(i, j));
            w.connectors[{ i, j }] = std::move(path);
        }

    auto check = verify_minor(hs, w);
    if (! check.ok)
        fail(ErrorCode::ConstructionFailed, "lifted minor failed verification: " + check.reason);
    return w;
}

auto zelinka_minor(std::size_t d) -> MinorWitness
{
    if (d < 2)
        fail(ErrorCode::InvalidParameter, "Zelinka minor needs d >= 2");
    auto a = [&] (std::size_t i) { return static_cast<std::uint32_t>(i - 1); };
    auto b = [&] (std::size_t i) { return static_cast<std::uint32_t>(d - 1 + i - 1); };

    MinorWitness w;
    w.target = complete_target(d);
    w.branch_sets.push_back({ a(1) });
    w.branch_sets.push_back({ b(1) });
    for (std::size_t i = 2 ; i < d ; ++i)
        w.branch_sets.push_back({ a(i), b(i) });
    w.connectors[{ 0, 1 }] = { a(1), b(1) };
    for (std::uint32_t m = 2 ; m < d ; ++m) {
        w.connectors[{ 0, m }] = { a(1), b(m) };
        w.connectors[{ 1, m }] = { b(1), a(m) };
        for (std::uint32_t n = m + 1 ; n < d ; ++n)
            w.connectors[{ m, n }] = { a(m), b(n) };
    }
    return w;
}

auto transport(const LabeledGraph & from, const LabeledGraph & to, const MinorWitness & w) -> MinorWitness
{
    if (from.ell() != to.ell())
        fail(ErrorCode::LengthMismatch, "link graphs of different lengths");
    auto & a = from.source();
    auto & b = to.source();
    auto map = [&] (std::uint32_t v) -> std::uint32_t {
        auto link = from.vertex(v);
        auto units = link.units();
        std::vector<std::uint32_t> moved;
        for (std::size_t k = 0 ; k < units.size() ; ++k) {
            auto found = k % 2 ? b.find_edge(a.edge_id(units[k])) : b.find_vertex(a.vertex_id(units[k]));
            if (! found)
                fail(ErrorCode::UnknownVertex, "no counterpart for " + format_units(a, units));
            moved.push_back(*found);
        }
        auto image = to.find_vertex(Link::of(Arc(std::move(moved))));
        if (! image)
            fail(ErrorCode::UnknownVertex, "no counterpart for " + format_units(a, units));
        return *image;
    };

    MinorWitness out;
    out.target = w.target;
    for (auto & set : w.branch_sets) {
        std::vector<std::uint32_t> moved;
        for (auto v : set)
            moved.push_back(map(v));
        std::sort(moved.begin(), moved.end());
        out.branch_sets.push_back(std::move(moved));
    }
    for (auto & [key, path] : w.connectors) {
        std::vector<std::uint32_t> moved;
        for (auto v : path)
            moved.push_back(map(v));
        out.connectors[key] = std::move(moved);
    }
    return out;
}

namespace
{
    void grow_clique(const std::vector<std::set<std::uint32_t>> & adj, std::vector<std::uint32_t> & current,
            std::vector<std::uint32_t> candidates, std::vector<std::uint32_t> & best)
    {
        if (candidates.empty()) {
            if (current.size() > best.size())
                best = current;
            return;
        }
        if (current.size() + candidates.size() <= best.size())
            return;
        while (! candidates.empty()) {
            if (current.size() + candidates.size() <= best.size())
                return;
            auto v = candidates.back();
            candidates.pop_back();
            std::vector<std::uint32_t> next;
            for (auto u : candidates)
                if (adj[v].count(u))
                    next.push_back(u);
            current.push_back(v);
            grow_clique(adj, current, std::move(next), best);
            current.pop_back();
        }
    }
}

auto contraction_search(const SimpleGraph & host, std::uint64_t seed, std::size_t rounds) -> MinorWitness
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint32_t>> best_sets;

    for (std::size_t round = 0 ; round < rounds ; ++round) {
        auto n = host.size();
        std::vector<std::vector<std::uint32_t>> members(n);
        std::vector<std::set<std::uint32_t>> adj(n);
        std::vector<bool> alive(n, true);
        for (std::uint32_t v = 0 ; v < n ; ++v) {
            members[v] = { v };
            adj[v].insert(host.neighbours(v).begin(), host.neighbours(v).end());
        }
        auto remaining = n;

        while (remaining > best_sets.size()) {
            std::vector<std::uint32_t> live;
            for (std::uint32_t v = 0 ; v < n ; ++v)
                if (alive[v])
                    live.push_back(v);
            std::vector<std::uint32_t> current, clique;
            clique.reserve(best_sets.size());
            grow_clique(adj, current, live, clique);
            if (clique.size() > best_sets.size()) {
                best_sets.clear();
                for (auto v : clique)
                    best_sets.push_back(members[v]);
            }

            std::size_t low = infinite;
            for (auto v : live)
                low = std::min(low, adj[v].size());
            std::vector<std::uint32_t> pick;
            for (auto v : live)
                if (adj[v].size() == low)
                    pick.push_back(v);
            auto u = pick[rng() % pick.size()];

            if (low == 0 || rng() % 5 == 0) {
                for (auto x : adj[u])
                    adj[x].erase(u);
                adj[u].clear();
                alive[u] = false;
                --remaining;
                continue;
            }

            std::size_t fewest = infinite;
            std::vector<std::uint32_t> partners;
            for (auto x : adj[u]) {
                std::size_t common = 0;
                for (auto y : adj[x])
                    common += adj[u].count(y);
                if (common < fewest) {
                    fewest = common;
                    partners.clear();
                }
                if (common == fewest)
                    partners.push_back(x);
            }
            auto v = partners[rng() % partners.size()];
            for (auto x : adj[v]) {
                adj[x].erase(v);
                if (x != u) {
                    adj[x].insert(u);
                    adj[u].insert(x);
                }
            }
            adj[u].erase(v);
            adj[v].clear();
            alive[v] = false;
            members[u].insert(members[u].end(), members[v].begin(), members[v].end());
            --remaining;
        }
    }

    MinorWitness w;
    w.target = complete_target(best_sets.size());
    for (auto & s : best_sets) {
        std::sort(s.begin(), s.end());
        w.branch_sets.push_back(s);
    }
    direct_connectors(host, w);
    return w;
}

namespace
{
    auto same_graph(const Multigraph & a, const Multigraph & b) -> bool
    {
        return a.vertex_ids() == b.vertex_ids() && a.edge_ids() == b.edge_ids();
    }

    auto mask_of(const Multigraph & g, const std::vector<VertexIndex> & vertices) -> Mask
    {
        Mask m(g.vertex_count(), false);
        for (auto v : vertices)
            m[v] = true;
        return m;
    }

    // Zelinka's minor placed on the complete bipartite piece of the link graph
    // over one (l-1)-arc of a densest core.
    auto degeneracy_route(const LabeledGraph & h) -> MinorWitness
    {
        auto & g = h.source();
        auto ell = h.ell();
        auto d = degeneracy(g);
        if (d < 2)
            fail(ErrorCode::PreconditionViolated, "degeneracy below 2");
        auto core = mask_of(g, degeneracy_core(g));
        auto core_edges = [&] (VertexIndex v) {
            std::vector<EdgeIndex> out;
            for (auto e : g.incident_edges(v))
                if (core[g.other_end(e, v)])
                    out.push_back(e);
            return out;
        };
        auto link = [&] (const Arc & a) { return Link::of(a); };

        std::string last_error = "no core vertex";
        for (VertexIndex start = 0 ; start < g.vertex_count() ; ++start) {
            if (! core[start])
                continue;
            try {
                std::vector<Link> side_a, side_b;
                if (ell == 1) {
                    WitnessBuilder b(h, d);
                    auto edges = core_edges(start);
                    std::vector<std::uint32_t> clique;
                    for (std::uint32_t i = 0 ; i < d ; ++i) {
                        auto l = link(Arc({ g.other_end(edges[i], start), edges[i], start }));
                        b.add(i, l);
                        clique.push_back(b.index(l));
                    }
                    for (std::uint32_t i = 0 ; i < d ; ++i)
                        for (std::uint32_t j = i + 1 ; j < d ; ++j)
                            b.connect(i, j, { clique[i], clique[j] });
                    return b.finish(complete_target(d));
                }

                auto p = Arc::at_vertex(start);
                while (p.length() < ell - 1) {
                    auto edges = core_edges(p.head());
                    auto next = std::find_if(edges.begin(), edges.end(),
                            [&] (EdgeIndex e) { return p.length() == 0 || e != p.head_edge(); });
                    p = p.extended(g, *next);
                }
                for (auto e : core_edges(p.tail()))
                    if (p.length() == 0 || e != p.tail_edge())
                        side_a.push_back(link(conjunction(Arc({ g.other_end(e, p.tail()), e, p.tail() }), p)));
                for (auto f : core_edges(p.head()))
                    if (p.length() == 0 || f != p.head_edge())
                        side_b.push_back(link(p.extended(g, f)));
                if (side_a.size() < d - 1 || side_b.size() < d - 1)
                    fail(ErrorCode::ConstructionFailed, "too few extensions of the middle arc");

                auto z = zelinka_minor(d);
                WitnessBuilder b(h, d);
                auto image = [&] (std::uint32_t x) {
                    return b.index(x < d - 1 ? side_a[x] : side_b[x - (d - 1)]);
                };
                for (std::uint32_t i = 0 ; i < d ; ++i)
                    for (auto x : z.branch_sets[i])
                        b.add(i, x < d - 1 ? side_a[x] : side_b[x - (d - 1)]);
                for (auto & [key, path] : z.connectors) {
                    std::vector<std::uint32_t> moved;
                    for (auto x : path)
                        moved.push_back(image(x));
                    b.connect(key.first, key.second, std::move(moved));
                }
                return b.finish(complete_target(d));
            }
            catch (const Error & e) {
                last_error = e.what();
            }
        }
        fail(ErrorCode::ConstructionFailed, last_error);
    }

    auto cycle_route(const LabeledGraph & h) -> MinorWitness
    {
        auto & g = h.source();
        auto o = shortest_cycle(g, Mask(g.vertex_count(), true), 3);
        if (! o)
            fail(ErrorCode::PreconditionViolated, "no cycle of length at least 3");
        auto k = o->length();
        WitnessBuilder b(h, 3);
        std::vector<std::uint32_t> ring;
        for (std::size_t p = 0 ; p < k ; ++p)
            ring.push_back(b.index(Link::of(around(*o, p, h.ell()))));
        b.add(0, h.vertex(ring[0]));
        b.add(1, h.vertex(ring[1]));
        for (std::size_t p = 2 ; p < k ; ++p)
            b.add(2, h.vertex(ring[p]));
        b.connect(0, 1, { ring[0], ring[1] });
        b.connect(1, 2, { ring[1], ring[2] });
        b.connect(0, 2, { ring[0], ring[k - 1] });
        return b.finish(complete_target(3));
    }

    auto ball(const Multigraph & g, VertexIndex centre, std::size_t radius) -> std::vector<VertexIndex>
    {
        auto dist = reach_within(g, centre, Mask(g.vertex_count(), true));
        std::vector<VertexIndex> out;
        for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
            if (dist[v] <= radius)
                out.push_back(v);
        return out;
    }

    // Connected pieces of G that carry edges, before and after peeling leaves.
    auto route_bases(const Multigraph & g) -> std::vector<Multigraph>
    {
        std::vector<Multigraph> bases;
        for (auto & component : components(g)) {
            auto sub = induced_subgraph(g, std::span<const VertexIndex>(component));
            if (sub.edge_count() == 0)
                continue;
            auto peeled = peel_leaves(sub);
            bases.push_back(sub);
            if (peeled.edge_count() > 0 && ! same_graph(peeled, sub))
                bases.push_back(std::move(peeled));
        }
        return bases;
    }

    class BoundSearch {
    public:
        BoundSearch(const LabeledGraph & h, const HadwigerOptions & options)
            : _h(h), _options(options), _host(h.underlying_simple())
        {}

        void attempt(const std::string & route, const std::function<MinorWitness ()> & build)
        {
            try {
                consider(route, build(), "");
            }
            catch (const Error & e) {
                _bound.routes.push_back({ route, 0, e.what() });
            }
        }

        void consider(const std::string & route, MinorWitness w, std::string note)
        {
            auto check = verify_minor(_host, w);
            if (! check.ok) {
                _bound.routes.push_back({ route, 0, "rejected: " + check.reason });
                return;
            }
            _bound.routes.push_back({ route, w.order(), std::move(note) });
            if (w.order() > _bound.bound) {
                _bound.bound = w.order();
                _bound.route = route;
                _bound.witness = std::move(w);
            }
        }

        void cut_route()
        {
            auto ell = _h.ell();
            for (auto & base : route_bases(_h.source())) {
                std::optional<LabeledGraph> hb;
                try {
                    hb = link_graph(base, ell, _options.limit);
                }
                catch (const Error & e) {
                    _bound.routes.push_back({ "cut", 0, e.what() });
                    continue;
                }
                std::set<std::vector<VertexIndex>> candidates;
                for (VertexIndex v = 0 ; v < base.vertex_count() && candidates.size() < _options.max_candidates ; ++v)
                    candidates.insert({ v });
                for (std::size_t r = 1 ; 2 * r < ell ; ++r)
                    for (VertexIndex v = 0 ; v < base.vertex_count() && candidates.size() < _options.max_candidates ;
                            ++v)
                        candidates.insert(ball(base, v, r));

                std::size_t best = 0;
                std::optional<MinorWitness> found;
                std::string last_error;
                for (auto & x : candidates) {
                    for (auto with_cycle : { true, false }) {
                        try {
                            auto w = with_cycle ? kt1_minor_with_cycle(*hb, { x }) : kt_minor_from_cut(*hb, { x });
                            if (w.order() > best) {
                                best = w.order();
                                found = std::move(w);
                            }
                            break;
                        }
                        catch (const Error & e) {
                            last_error = e.what();
                        }
                    }
                }
                if (found)
                    consider("cut", transport(*hb, _h, *found), "");
                else
                    _bound.routes.push_back({ "cut", 0, last_error });
            }
        }

        void hub_route()
        {
            auto ell = _h.ell();
            for (auto & base : route_bases(_h.source())) {
                if (base.vertex_count() > _options.oracle_cap) {
                    _bound.routes.push_back({ "hub", 0, "peeled component above the minor oracle cap" });
                    continue;
                }
                auto peeled = peel_leaves(base);
                if (! same_graph(peeled, base))
                    continue;
                try {
                    if (! same_graph(hub_subgraph(base, ell, _options.limit), base)) {
                        _bound.routes.push_back({ "hub", 0, "G(l) differs from the peeled graph" });
                        continue;
                    }
                    auto eta = exact_hadwiger(base, _options.oracle_cap);
                    auto hb = link_graph(base, ell, _options.limit);
                    std::vector<std::vector<VertexIndex>> sets = eta.witness.branch_sets;
                    try {
                        consider("hub", transport(hb, _h, lift_minor(hb, sets, eta.witness.target)), "");
                    }
                    catch (const Error & e) {
                        if (e.code() != ErrorCode::BranchSetLacksLink)
                            throw;
                        auto hub = hub_units(base, ell, _options.limit);
                        auto units = branch_units(base, hub, sets);
                        for (std::uint32_t i = 0 ; i < sets.size() ; ++i) {
                            bool has_link = false;
                            for (std::uint32_t v = 0 ; v < hb.vertex_count() && ! has_link ; ++v)
                                has_link = link_owner(units, hb.vertex(v)) == i;
                            if (! has_link) {
                                consider("hub", transport(hb, _h, kt1_minor_with_cycle(hb, { sets[i] })),
                                        "branch set without an l-link; cut with a cycle");
                                break;
                            }
                        }
                    }
                }
                catch (const Error & e) {
                    _bound.routes.push_back({ "hub", 0, e.what() });
                }
            }
        }

        auto run() -> HadwigerBound
        {
            auto & g = _h.source();
            _bound.degeneracy = degeneracy(g);
            if (g.vertex_count() <= _options.oracle_cap)
                _bound.eta_g = exact_hadwiger(g, _options.oracle_cap).eta;

            attempt("edge", [&] {
                auto [a, b] = _h.endpoints(0);
                MinorWitness w;
                w.target = complete_target(2);
                w.branch_sets = { { a }, { b } };
                w.connectors[{ 0, 1 }] = { a, b };
                return w;
            });
            attempt("degeneracy", [&] { return degeneracy_route(_h); });
            attempt("cycle", [&] { return cycle_route(_h); });
            cut_route();
            hub_route();
            if (_options.search_rounds > 0)
                attempt("search", [&] { return contraction_search(_host, _options.seed, _options.search_rounds); });

            auto target = std::max(_bound.degeneracy, _bound.eta_g.value_or(0));
            if (_bound.bound < target)
                _bound.routes.push_back({ "diagnostic", _bound.bound,
                        "best witness below max{eta(G), degeneracy(G)} = " + std::to_string(target) });
            return std::move(_bound);
        }

    private:
        const LabeledGraph & _h;
        const HadwigerOptions & _options;
        SimpleGraph _host;
        HadwigerBound _bound;
    };
}

auto hadwiger_lower_bound(const LabeledGraph & h, const HadwigerOptions & options) -> HadwigerBound
{
    if (h.ell() < 1)
        fail(ErrorCode::PreconditionViolated, "Hadwiger lower bound needs ell >= 1");
    if (h.edge_count() == 0)
        fail(ErrorCode::NoEdge, "the link graph has no edge");
    return BoundSearch(h, options).run();
}

auto hadwiger_cases(const Multigraph & g, std::size_t ell) -> HadwigerCases
{
    HadwigerCases cases;
    if (ell < 1)
        return cases;
    auto delta = max_degree(g);
    auto dege = degeneracy(g);
    cases.biconnected = is_biconnected(g);
    cases.even = ell % 2 == 0;
    cases.degeneracy = dege >= 3 && hadwiger_degeneracy_regime(ell, delta, dege);
    cases.degree = delta >= 3 && hadwiger_degree_regime(ell, delta);
    cases.small_degree = delta <= 5;
    return cases;
}

auto to_json(const LabeledGraph & h, const MinorWitness & w) -> nlohmann::json
{
    auto complete = w.target.edge_count() == w.order() * (w.order() - (w.order() > 0)) / 2;
    nlohmann::json sets = nlohmann::json::array();
    for (auto & set : w.branch_sets) {
        nlohmann::json names = nlohmann::json::array();
        for (auto v : set)
            names.push_back(format(h.source(), h.vertex(v)));
        sets.push_back(names);
    }
    nlohmann::json connectors = nlohmann::json::object();
    for (auto & [key, path] : w.connectors) {
        nlohmann::json names = nlohmann::json::array();
        for (auto v : path)
            names.push_back(format(h.source(), h.vertex(v)));
        connectors[pair_name(key.first, key.second)] = names;
    }
    nlohmann::json out{ { "target", complete ? "K_" + std::to_string(w.order()) : "M" }, { "branch_sets", sets },
        { "connectors", connectors } };
    if (! complete) {
        nlohmann::json edges = nlohmann::json::array();
        for (std::uint32_t i = 0 ; i < w.order() ; ++i)
            for (auto j : w.target.neighbours(i))
                if (i < j)
                    edges.push_back({ i, j });
        out["target_edges"] = edges;
    }
    return out;
}

}
