#include <linkgraph/links.hpp>
#include <linkgraph/error.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace linkgraph {

// ---- Arc ---------------------------------------------------------------------

auto Arc::make(const Multigraph & g, std::vector<std::uint32_t> units) -> Arc
{
    Arc a(std::move(units));
    if (! a.valid_in(g))
        fail(ErrorCode::NotALink, "unit sequence is not an arc of the graph");
    return a;
}

auto Arc::valid_in(const Multigraph & g) const -> bool
{
    if (_units.size() % 2 == 0)
        return false;
    for (std::size_t i = 0 ; i <= length() ; ++i)
        if (vertex(i) >= g.vertex_count())
            return false;
    for (std::size_t i = 1 ; i <= length() ; ++i) {
        if (edge(i) >= g.edge_count())
            return false;
        auto [u, v] = g.endpoints(edge(i));
        auto a = vertex(i - 1), b = vertex(i);
        if (! ((u == a && v == b) || (u == b && v == a)))
            return false;
        if (i > 1 && edge(i) == edge(i - 1))
            return false;
    }
    return true;
}

auto Arc::reversed() const -> Arc
{
    return Arc(std::vector<std::uint32_t>(_units.rbegin(), _units.rend()));
}

auto Arc::segment(std::size_t i, std::size_t j) const -> Arc
{
    if (i > j)
        return segment(j, i).reversed();
    if (j > length())
        fail(ErrorCode::WindowTooLong, "segment end " + std::to_string(j) + " beyond length " + std::to_string(length()));
    return Arc(std::vector<std::uint32_t>(_units.begin() + static_cast<std::ptrdiff_t>(2 * i),
                _units.begin() + static_cast<std::ptrdiff_t>(2 * j + 1)));
}

auto Arc::extended(const Multigraph & g, EdgeIndex e) const -> Arc
{
    if (! g.incident(e, head()))
        fail(ErrorCode::EndpointMismatch, "edge does not meet the head vertex");
    if (length() > 0 && e == head_edge())
        fail(ErrorCode::BacktrackEdge, "edge repeats the head edge");
    auto units = _units;
    units.push_back(e);
    units.push_back(g.other_end(e, head()));
    return Arc(std::move(units));
}

// ---- Link --------------------------------------------------------------------

auto is_canonical(std::span<const std::uint32_t> units) -> bool
{
    for (std::size_t i = 0, j = units.size() - 1 ; i < j ; ++i, --j) {
        if (units[i] < units[j])
            return true;
        if (units[i] > units[j])
            return false;
    }
    return true;
}

auto Link::of(const Arc & a) -> Link
{
    return is_canonical(a.units()) ? Link(a) : Link(a.reversed());
}

auto Link::of_units(std::span<const std::uint32_t> units) -> Link
{
    return of(Arc(std::vector<std::uint32_t>(units.begin(), units.end())));
}

auto canonicalize(const Arc & a) -> Link
{
    return Link::of(a);
}

// ---- LinkSet -----------------------------------------------------------------

void LinkSet::push_back(std::span<const std::uint32_t> canonical_units)
{
    _data.insert(_data.end(), canonical_units.begin(), canonical_units.end());
}

void LinkSet::sort_unique()
{
    auto n = size(), s = stride();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0 ; i < n ; ++i)
        order[i] = i;
    auto less = [&] (std::size_t a, std::size_t b) {
        return std::lexicographical_compare(_data.begin() + a * s, _data.begin() + (a + 1) * s,
                _data.begin() + b * s, _data.begin() + (b + 1) * s);
    };
    std::sort(order.begin(), order.end(), less);
    std::vector<std::uint32_t> sorted;
    sorted.reserve(_data.size());
    for (std::size_t k = 0 ; k < n ; ++k) {
        if (k > 0 && ! less(order[k - 1], order[k]))
            continue;
        sorted.insert(sorted.end(), _data.begin() + order[k] * s, _data.begin() + (order[k] + 1) * s);
    }
    _data = std::move(sorted);
}

auto LinkSet::find(std::span<const std::uint32_t> canonical_units) const -> std::optional<std::size_t>
{
    if (canonical_units.size() != stride())
        return std::nullopt;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        auto mid = (lo + hi) / 2;
        auto u = units(mid);
        auto c = std::lexicographical_compare_three_way(u.begin(), u.end(), canonical_units.begin(), canonical_units.end());
        if (c == 0)
            return mid;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

auto LinkSet::find_either(std::span<const std::uint32_t> units) const -> std::optional<std::size_t>
{
    if (is_canonical(units))
        return find(units);
    std::vector<std::uint32_t> reversed(units.rbegin(), units.rend());
    return find(reversed);
}

// ---- enumeration ---------------------------------------------------------------

void for_each_arc(const Multigraph & g, std::size_t ell,
        const std::function<void (std::span<const std::uint32_t>)> & visit)
{
    std::vector<std::uint32_t> buffer;
    buffer.reserve(2 * ell + 1);

    auto extend = [&] (auto & self, std::size_t depth) -> void {
        if (depth == ell) {
            visit(buffer);
            return;
        }
        auto head = buffer.back();
        for (auto e : g.incident_edges(head)) {
            if (depth > 0 && e == buffer[buffer.size() - 2])
                continue;
            buffer.push_back(e);
            buffer.push_back(g.other_end(e, head));
            self(self, depth + 1);
            buffer.pop_back();
            buffer.pop_back();
        }
    };

    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v) {
        buffer.assign(1, v);
        extend(extend, 0);
    }
}

auto enumerate_arcs(const Multigraph & g, std::size_t ell, std::size_t limit) -> std::vector<Arc>
{
    std::vector<Arc> result;
    for_each_arc(g, ell, [&] (std::span<const std::uint32_t> units) {
        if (result.size() >= limit)
            throw LimitExceeded(result.size() + 1, limit);
        result.emplace_back(std::vector<std::uint32_t>(units.begin(), units.end()));
    });
    return result;
}

auto link_set(const Multigraph & g, std::size_t ell, std::size_t limit) -> LinkSet
{
    // Arcs arrive in lexicographic order and canonical ones are kept, so the set is born sorted.
    LinkSet result(ell);
    for_each_arc(g, ell, [&] (std::span<const std::uint32_t> units) {
        if (! is_canonical(units))
            return;
        if (result.size() >= limit)
            throw LimitExceeded(result.size() + 1, limit);
        result.push_back(units);
    });
    return result;
}

auto enumerate_links(const Multigraph & g, std::size_t ell, std::size_t limit) -> std::vector<Link>
{
    auto set = link_set(g, ell, limit);
    std::vector<Link> result;
    result.reserve(set.size());
    for (std::size_t i = 0 ; i < set.size() ; ++i)
        result.push_back(set.at(i));
    return result;
}

auto count_links(const Multigraph & g, std::size_t ell, std::size_t limit) -> std::size_t
{
    std::size_t count = 0;
    for_each_arc(g, ell, [&] (std::span<const std::uint32_t> units) {
        if (! is_canonical(units))
            return;
        if (++count > limit)
            throw LimitExceeded(count, limit);
    });
    return count;
}

// ---- structure of single links ---------------------------------------------------

auto is_path(const Link & l) -> bool
{
    std::vector<std::uint32_t> seen;
    for (std::size_t i = 0 ; i <= l.length() ; ++i)
        seen.push_back(l.canonical().vertex(i));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

auto is_cycle(const Link & l) -> bool
{
    auto n = l.length();
    if (n < 2)
        return false;
    auto & a = l.canonical();
    return a.vertex(0) == a.vertex(n) && is_path(Link::of(a.segment(0, n - 1)));
}

auto middle_unit(const Link & l) -> Unit
{
    auto n = l.length();
    if (n % 2 == 0)
        return { false, l.canonical().vertex(n / 2) };
    return { true, l.canonical().edge((n + 1) / 2) };
}

auto middle_segment(const Link & l, std::size_t length) -> Link
{
    auto n = l.length();
    if (length > n || (n - length) % 2 != 0)
        fail(ErrorCode::InvalidParameter, "no middle segment of length " + std::to_string(length));
    auto s = (n - length) / 2;
    return Link::of(l.canonical().segment(s, s + length));
}

auto conjunction(const Arc & a, const Arc & b) -> Arc
{
    if (a.head() != b.tail())
        fail(ErrorCode::EndpointMismatch, "head vertex of the first arc is not the tail of the second");
    if (a.length() > 0 && b.length() > 0 && a.head_edge() == b.tail_edge())
        fail(ErrorCode::BacktrackEdge, "head edge of the first arc equals the tail edge of the second");
    std::vector<std::uint32_t> units(a.units().begin(), a.units().end());
    units.insert(units.end(), b.units().begin() + 1, b.units().end());
    return Arc(std::move(units));
}

auto shunt_trace(const Arc & base, std::size_t ell) -> ShuntTrace
{
    if (ell > base.length())
        fail(ErrorCode::WindowTooLong, "window " + std::to_string(ell) + " longer than base arc");
    ShuntTrace trace;
    trace.base = base;
    trace.window = ell;
    auto s = base.length() - ell;
    for (std::size_t i = 0 ; i <= s ; ++i)
        trace.images.push_back(Link::of(base.segment(i, i + ell)));
    for (std::size_t i = 1 ; i <= s ; ++i)
        trace.steps.push_back(Link::of(base.segment(i - 1, i + ell)));
    return trace;
}

auto windows(const Link & q) -> std::pair<Link, Link>
{
    if (q.length() == 0)
        fail(ErrorCode::WindowTooShort, "a 0-link has no shorter windows");
    auto n = q.length();
    return { Link::of(q.canonical().segment(0, n - 1)), Link::of(q.canonical().segment(1, n)) };
}

// ---- shunting -------------------------------------------------------------------

auto one_step_shunts(const Multigraph & g, const Link & l) -> std::vector<Shunt>
{
    std::vector<Shunt> result;
    auto grow = [&] (const Arc & a) {
        for (auto e : g.incident_edges(a.head())) {
            if (a.length() > 0 && e == a.head_edge())
                continue;
            auto q = a.extended(g, e);
            result.push_back({ Link::of(q), Link::of(q.segment(1, q.length())) });
        }
    };
    grow(l.canonical());
    if (l.length() > 0)
        grow(l.canonical().reversed());
    std::sort(result.begin(), result.end());
    return result;
}

namespace
{
    auto bfs_shunt(const Multigraph & g, const Link & from, const Link & to,
            const std::function<bool (const Link &)> * allowed) -> ShuntSearch
    {
        if (from.length() != to.length())
            fail(ErrorCode::LengthMismatch, "links of different lengths");
        ShuntSearch result;
        if (allowed && (! (*allowed)(from) || ! (*allowed)(to)))
            return result;
        if (from == to) {
            result.reachable = true;
            return result;
        }

        std::map<Link, std::pair<Link, Link>> parent;
        std::deque<Link> queue{ from };
        parent.emplace(from, std::make_pair(from, Link{}));
        while (! queue.empty()) {
            auto current = queue.front();
            queue.pop_front();
            for (auto & s : one_step_shunts(g, current)) {
                if (parent.count(s.to) || (allowed && ! (*allowed)(s.to)))
                    continue;
                parent.emplace(s.to, std::make_pair(current, s.via));
                if (s.to == to) {
                    result.reachable = true;
                    for (auto at = to ; at != from ; at = parent.at(at).first)
                        result.witness.push_back(parent.at(at).second);
                    std::reverse(result.witness.begin(), result.witness.end());
                    return result;
                }
                queue.push_back(s.to);
            }
        }
        return result;
    }
}

auto can_shunt(const Multigraph & g, const Link & from, const Link & to) -> ShuntSearch
{
    return bfs_shunt(g, from, to, nullptr);
}

auto can_shunt_restricted(const Multigraph & g, const Link & from, const Link & to,
        const std::function<bool (const Link &)> & allowed) -> ShuntSearch
{
    return bfs_shunt(g, from, to, &allowed);
}

// ---- hub ------------------------------------------------------------------------

auto hub_units(const Multigraph & g, std::size_t ell, std::size_t limit) -> HubUnits
{
    HubUnits hub{ std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.edge_count(), false) };
    std::size_t count = 0;
    for_each_arc(g, ell, [&] (std::span<const std::uint32_t> units) {
        if (! is_canonical(units))
            return;
        if (++count > limit)
            throw LimitExceeded(count, limit);
        auto middle = units[ell];
        if (ell % 2 == 0)
            hub.vertices[middle] = true;
        else
            hub.edges[middle] = true;
    });

    if (ell % 2 == 0) {
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
            hub.edges[e] = hub.vertices[g.endpoints(e).first] && hub.vertices[g.endpoints(e).second];
    }
    else {
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
            if (hub.edges[e])
                hub.vertices[g.endpoints(e).first] = hub.vertices[g.endpoints(e).second] = true;
    }
    return hub;
}

auto hub_subgraph(const Multigraph & g, std::size_t ell, std::size_t limit) -> Multigraph
{
    auto hub = hub_units(g, ell, limit);
    std::vector<VertexIndex> vertices;
    std::vector<EdgeIndex> edges;
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v)
        if (hub.vertices[v])
            vertices.push_back(v);
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        if (hub.edges[e])
            edges.push_back(e);
    return edge_subgraph(g, std::span<const EdgeIndex>(edges), std::span<const VertexIndex>(vertices));
}

// ---- text -----------------------------------------------------------------------

auto format_units(const Multigraph & g, std::span<const std::uint32_t> units) -> std::string
{
    std::string out;
    for (std::size_t i = 0 ; i < units.size() ; ++i) {
        if (i > 0)
            out += ' ';
        out += (i % 2 == 0) ? g.vertex_id(units[i]) : g.edge_id(units[i]);
    }
    return out;
}

auto format(const Multigraph & g, const Arc & a) -> std::string
{
    return "(" + format_units(g, a.units()) + ")";
}

auto format(const Multigraph & g, const Link & l) -> std::string
{
    return "[" + format_units(g, l.units()) + "]";
}

auto parse_arc(const Multigraph & g, std::string_view text) -> Arc
{
    std::string body(text);
    auto first = body.find_first_not_of(" \t");
    auto last = body.find_last_not_of(" \t");
    if (first == std::string::npos)
        fail(ErrorCode::NotALink, "empty link text");
    body = body.substr(first, last - first + 1);
    if (body.size() >= 2 && ((body.front() == '[' && body.back() == ']') || (body.front() == '(' && body.back() == ')')))
        body = body.substr(1, body.size() - 2);

    std::istringstream in(body);
    std::vector<std::uint32_t> units;
    for (std::string token ; in >> token ; ) {
        auto found = (units.size() % 2 == 0) ? g.find_vertex(token) : g.find_edge(token);
        if (! found)
            fail(ErrorCode::NotALink, "unknown unit '" + token + "'");
        units.push_back(*found);
    }
    return Arc::make(g, std::move(units));
}

auto parse_link(const Multigraph & g, std::string_view text) -> Link
{
    return Link::of(parse_arc(g, text));
}

}
