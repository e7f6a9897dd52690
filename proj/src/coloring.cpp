#include <linkgraph/coloring.hpp>
#include <linkgraph/error.hpp>
#include <linkgraph/thresholds.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace linkgraph {

auto Coloring::used() const -> std::size_t
{
    std::set<std::uint32_t> distinct(colour.begin(), colour.end());
    return distinct.size();
}

namespace
{
    void check_total(std::size_t n, const std::vector<std::uint32_t> & colour, std::size_t t)
    {
        if (colour.size() != n)
            fail(ErrorCode::PartialColoring, "colouring covers " + std::to_string(colour.size()) + " of " +
                    std::to_string(n) + " elements");
        for (auto c : colour)
            if (c < 1 || c > t)
                fail(ErrorCode::PartialColoring, "colour " + std::to_string(c) + " outside 1.." + std::to_string(t));
    }
}

auto is_proper(const SimpleGraph & h, const Coloring & c) -> bool
{
    check_total(h.size(), c.colour, c.t);
    for (std::uint32_t v = 0 ; v < h.size() ; ++v)
        for (auto w : h.neighbours(v))
            if (c.colour[v] == c.colour[w])
                return false;
    return true;
}

auto is_proper(const LabeledGraph & h, const Coloring & c) -> bool
{
    return is_proper(h.underlying_simple(), c);
}

auto is_proper(const Multigraph & g, const EdgeColoring & c) -> bool
{
    check_total(g.edge_count(), c.colour, c.t);
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v) {
        std::set<std::uint32_t> seen;
        for (auto e : g.incident_edges(v))
            if (! seen.insert(c.colour[e]).second)
                return false;
    }
    return true;
}

auto foreign_colours(const SimpleGraph & h, const Coloring & c) -> std::size_t
{
    std::size_t worst = 0;
    for (std::uint32_t v = 0 ; v < h.size() ; ++v) {
        std::set<std::uint32_t> seen;
        for (auto w : h.neighbours(v))
            seen.insert(c.colour[w]);
        worst = std::max(worst, seen.size());
    }
    return worst;
}

auto compact(const Coloring & c) -> Coloring
{
    std::set<std::uint32_t> distinct(c.colour.begin(), c.colour.end());
    std::map<std::uint32_t, std::uint32_t> rename;
    for (auto x : distinct)
        rename.emplace(x, static_cast<std::uint32_t>(rename.size() + 1));
    Coloring result{ {}, distinct.size() };
    for (auto x : c.colour)
        result.colour.push_back(rename.at(x));
    return result;
}

// ---- exact oracle -------------------------------------------------------------------

namespace
{
    class Dsatur {
    public:
        Dsatur(const SimpleGraph & h, std::size_t k) :
            _h(h), _k(k), _colour(h.size(), 0), _count(h.size(), std::vector<std::uint32_t>(k + 1, 0)),
            _saturation(h.size(), 0)
        {
        }

        /// Backtracking search for a k-colouring.
        auto solve() -> bool { return search(0, 0); }

        /// One pass without backtracking, opening new colours as needed.
        auto greedy() -> std::vector<std::uint32_t>
        {
            for (std::size_t done = 0 ; done < _h.size() ; ++done) {
                auto v = pick();
                std::uint32_t c = 1;
                while (c <= _k && _count[v][c] > 0)
                    ++c;
                assign(v, c);
            }
            return _colour;
        }

        auto colouring() const -> const std::vector<std::uint32_t> & { return _colour; }

    private:
        auto pick() const -> std::uint32_t
        {
            std::uint32_t best = 0;
            bool found = false;
            for (std::uint32_t v = 0 ; v < _h.size() ; ++v) {
                if (_colour[v] != 0)
                    continue;
                if (! found || _saturation[v] > _saturation[best] ||
                        (_saturation[v] == _saturation[best] && _h.degree(v) > _h.degree(best))) {
                    best = v;
                    found = true;
                }
            }
            return best;
        }

        void assign(std::uint32_t v, std::uint32_t c)
        {
            _colour[v] = c;
            for (auto w : _h.neighbours(v))
                if (_count[w][c]++ == 0)
                    ++_saturation[w];
        }

        void unassign(std::uint32_t v)
        {
            auto c = _colour[v];
            _colour[v] = 0;
            for (auto w : _h.neighbours(v))
                if (--_count[w][c] == 0)
                    --_saturation[w];
        }

        auto search(std::size_t done, std::uint32_t used) -> bool
        {
            if (done == _h.size())
                return true;
            auto v = pick();
            auto top = std::min<std::uint32_t>(static_cast<std::uint32_t>(_k), used + 1);
            for (std::uint32_t c = 1 ; c <= top ; ++c) {
                if (_count[v][c] > 0)
                    continue;
                assign(v, c);
                if (search(done + 1, std::max(used, c)))
                    return true;
                unassign(v);
            }
            return false;
        }

        const SimpleGraph & _h;
        std::size_t _k;
        std::vector<std::uint32_t> _colour;
        std::vector<std::vector<std::uint32_t>> _count;
        std::vector<std::uint32_t> _saturation;
    };

    void grow_clique(const SimpleGraph & h, std::size_t size, std::vector<std::uint32_t> candidates, std::size_t & best)
    {
        best = std::max(best, size);
        while (! candidates.empty()) {
            if (size + candidates.size() <= best)
                return;
            auto v = candidates.back();
            candidates.pop_back();
            std::vector<std::uint32_t> next;
            for (auto w : candidates)
                if (h.adjacent(v, w))
                    next.push_back(w);
            grow_clique(h, size + 1, std::move(next), best);
        }
    }
}

auto clique_number(const SimpleGraph & h) -> std::size_t
{
    std::vector<std::uint32_t> all(h.size());
    for (std::uint32_t v = 0 ; v < h.size() ; ++v)
        all[v] = v;
    std::size_t best = 0;
    grow_clique(h, 0, std::move(all), best);
    return best;
}

auto greedy_coloring(const SimpleGraph & h) -> Coloring
{
    std::size_t max_degree = 0;
    for (std::uint32_t v = 0 ; v < h.size() ; ++v)
        max_degree = std::max(max_degree, h.degree(v));
    Dsatur d(h, max_degree + 1);
    return compact(Coloring{ d.greedy(), max_degree + 1 });
}

auto exact_chromatic(const SimpleGraph & h, std::size_t cap) -> ChromaticResult
{
    if (h.size() > cap)
        fail(ErrorCode::OracleTooLarge, "colouring oracle limited to " + std::to_string(cap) + " vertices, got " +
                std::to_string(h.size()));
    if (h.size() == 0)
        return { 0, Coloring{} };

    auto best = greedy_coloring(h);
    auto lower = clique_number(h);
    while (best.t > lower) {
        Dsatur d(h, best.t - 1);
        if (! d.solve())
            break;
        best = compact(Coloring{ d.colouring(), best.t - 1 });
    }
    return { best.t, best };
}

auto exact_chromatic(const LabeledGraph & h, std::size_t cap) -> ChromaticResult
{
    return exact_chromatic(h.underlying_simple(), cap);
}

auto exact_chromatic(const Multigraph & g, std::size_t cap) -> ChromaticResult
{
    return exact_chromatic(underlying_simple(g), cap);
}

auto edge_conflict_graph(const Multigraph & g) -> SimpleGraph
{
    SimpleGraph s(g.edge_count());
    for (VertexIndex v = 0 ; v < g.vertex_count() ; ++v) {
        auto edges = g.incident_edges(v);
        for (std::size_t i = 0 ; i < edges.size() ; ++i)
            for (std::size_t j = i + 1 ; j < edges.size() ; ++j)
                s.add_edge(edges[i], edges[j]);
    }
    s.finalise();
    return s;
}

auto exact_edge_chromatic(const Multigraph & g, std::size_t cap) -> EdgeChromaticResult
{
    auto result = exact_chromatic(edge_conflict_graph(g), cap);
    return { result.chi, EdgeColoring{ result.coloring.colour, result.coloring.t } };
}

// ---- recolouring ------------------------------------------------------------------------

auto recolouring_bound(std::size_t t, std::size_t r) -> std::size_t
{
    return t == 0 ? 0 : t * r / (r + 1) + 1;
}

auto reduce_coloring(const SimpleGraph & h, const Coloring & c, std::size_t r) -> Coloring
{
    if (! is_proper(h, c))
        fail(ErrorCode::PreconditionViolated, "input colouring is not proper");
    if (auto seen = foreign_colours(h, c) ; seen > r)
        fail(ErrorCode::PreconditionViolated, "a vertex sees " + std::to_string(seen) + " colours, more than r = " +
                std::to_string(r));

    auto result = c;
    auto t = c.t;
    if (t > r + 1) {
        std::vector<bool> blocked(t + 2);
        for (std::size_t j = 1 ; j <= t ; ++j) {
            auto cls = static_cast<std::uint32_t>(t - j + 1);
            for (std::uint32_t u = 0 ; u < h.size() ; ++u) {
                if (c.colour[u] != cls)
                    continue;
                std::fill(blocked.begin(), blocked.end(), false);
                for (auto w : h.neighbours(u))
                    blocked[result.colour[w]] = true;
                std::uint32_t s = 1;
                while (blocked[s])
                    ++s;
                if (s < cls)
                    result.colour[u] = s;
            }
        }
    }

    std::uint32_t top = 0;
    for (auto x : result.colour)
        top = std::max(top, x);
    result.t = top;
    if (top > recolouring_bound(t, r) || ! is_proper(h, result))
        fail(ErrorCode::ConstructionFailed, "recolouring broke its guarantee");
    return result;
}

auto lift_coloring(const LabeledGraph & h, const LabeledGraph & lower, const Coloring & c) -> Coloring
{
    if (h.ell() < 2 || lower.ell() + 2 != h.ell())
        fail(ErrorCode::InvalidParameter, "lifting goes from ell - 2 to ell with ell >= 2");
    if (! is_proper(lower, c))
        fail(ErrorCode::PreconditionViolated, "colouring of the lower link graph is not proper");

    Coloring lifted{ std::vector<std::uint32_t>(h.vertex_count()), c.t };
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v) {
        auto image = lower.find_vertex(middle_segment(h.vertex(v), h.ell() - 2));
        if (! image)
            fail(ErrorCode::ConstructionFailed, "middle segment missing from the lower link graph");
        lifted.colour[v] = c.colour[*image];
    }
    return reduce_coloring(h.underlying_simple(), lifted, 2);
}

auto lift_coloring(const Multigraph & g, std::size_t ell, const Coloring & c, std::size_t limit) -> Coloring
{
    if (ell < 2)
        fail(ErrorCode::InvalidParameter, "lifting needs ell >= 2");
    return lift_coloring(link_graph(g, ell, limit), link_graph(g, ell - 2, limit), c);
}

namespace
{
    struct Level {
        Coloring coloring;
        bool exact;
        std::vector<std::size_t> chain;
    };

    class Recursion {
    public:
        Recursion(const Multigraph & g, std::size_t cap, std::size_t limit) : _g(g), _cap(cap), _limit(limit) {}

        auto graph(std::size_t ell) -> const LabeledGraph &
        {
            auto it = _graphs.find(ell);
            if (it == _graphs.end())
                it = _graphs.emplace(ell, link_graph(_g, ell, _limit)).first;
            return it->second;
        }

        auto level(std::size_t ell) -> Level
        {
            if (ell == 0)
                return base_vertices();
            if (ell == 1)
                return base_edges();

            auto below = level(ell - 2);
            auto & h = graph(ell);
            auto & lower = graph(ell - 2);
            auto best = compact(lift_coloring(h, lower, below.coloring));
            if (lower.vertex_count() <= _cap) {
                auto optimal = exact_chromatic(lower, _cap);
                auto alternative = compact(lift_coloring(h, lower, optimal.coloring));
                if (alternative.t < best.t)
                    best = alternative;
            }
            below.chain.insert(below.chain.begin(), best.t);
            return { best, below.exact, below.chain };
        }

    private:
        auto base_vertices() -> Level
        {
            auto s = underlying_simple(_g);
            auto c = s.size() <= _cap ? exact_chromatic(s, _cap).coloring : greedy_coloring(s);
            return { c, s.size() <= _cap, { c.t } };
        }

        auto base_edges() -> Level
        {
            auto conflicts = edge_conflict_graph(_g);
            auto exact = conflicts.size() <= _cap;
            auto by_edge = exact ? exact_chromatic(conflicts, _cap).coloring : greedy_coloring(conflicts);
            auto & h = graph(1);
            Coloring c{ std::vector<std::uint32_t>(h.vertex_count()), by_edge.t };
            for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
                c.colour[v] = by_edge.colour[h.vertices().units(v)[1]];
            return { c, exact, { c.t } };
        }

        const Multigraph & _g;
        std::size_t _cap;
        std::size_t _limit;
        std::map<std::size_t, LabeledGraph> _graphs;
    };
}

auto recursive_chromatic_bound(const Multigraph & g, std::size_t ell, std::size_t cap, std::size_t limit)
    -> RecursiveColoring
{
    Recursion recursion(g, cap, limit);
    auto level = recursion.level(ell);
    if (! is_proper(recursion.graph(ell), level.coloring))
        fail(ErrorCode::ConstructionFailed, "recursive colouring is not proper");
    return { level.coloring, level.coloring.used(), level.exact, level.chain };
}

// ---- bounds -------------------------------------------------------------------------------

auto Theorem1Bounds::best() const -> std::optional<std::int64_t>
{
    std::optional<std::int64_t> result;
    for (auto & b : { even, odd, degree, two_below })
        if (b && (! result || *b < *result))
            result = b;
    return result;
}

auto theorem1_bounds(const Multigraph & g, std::size_t ell, std::size_t cap, std::size_t limit) -> Theorem1Bounds
{
    Theorem1Bounds b;
    b.ell = ell;
    b.max_degree = max_degree(g);

    auto simple = underlying_simple(g);
    b.chi_exact = simple.size() <= cap;
    b.chi = b.chi_exact ? exact_chromatic(simple, cap).chi : greedy_coloring(simple).t;

    auto conflicts = edge_conflict_graph(g);
    b.chi_prime_exact = conflicts.size() <= cap;
    b.chi_prime = b.chi_prime_exact ? exact_chromatic(conflicts, cap).chi : greedy_coloring(conflicts).t;

    auto chi = static_cast<std::int64_t>(b.chi), chi_prime = static_cast<std::int64_t>(b.chi_prime);
    if (ell % 2 == 0)
        b.even = std::min(chi, floor_two_thirds_power(chi - 3, ell / 2) + 3);
    else
        b.odd = std::min(chi_prime, floor_two_thirds_power(chi_prime - 3, (ell - 1) / 2) + 3);
    if (ell != 1)
        b.degree = static_cast<std::int64_t>(b.max_degree) + 1;
    if (ell >= 2 && count_links(g, ell - 2, limit) <= cap)
        b.two_below = static_cast<std::int64_t>(exact_chromatic(link_graph(g, ell - 2, limit), cap).chi);
    return b;
}

auto to_json(const LabeledGraph & h, const Coloring & c) -> nlohmann::json
{
    auto out = nlohmann::json::object();
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
        out[format(h.source(), h.vertex(v))] = c.colour.at(v);
    return out;
}

// ---- random instances ---------------------------------------------------------------------

auto random_recolouring_instance(std::uint64_t seed) -> RecolouringInstance
{
    std::mt19937_64 rng(seed);
    auto draw = [&] (std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };

    RecolouringInstance instance;
    std::vector<std::uint32_t> colour;
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;

    if (seed % 2 == 1) {
        instance.r = 2;
        auto t = draw(4, 12);
        std::vector<std::uint32_t> order(t);
        for (std::size_t i = 0 ; i < t ; ++i)
            order[i] = static_cast<std::uint32_t>(i + 1);
        for (std::size_t i = t - 1 ; i > 0 ; --i)
            std::swap(order[i], order[draw(0, i)]);

        std::vector<std::vector<std::uint32_t>> classes(t);
        for (std::size_t i = 0 ; i < t ; ++i)
            for (auto k = draw(1, 4) ; k > 0 ; --k) {
                classes[i].push_back(static_cast<std::uint32_t>(colour.size()));
                colour.push_back(order[i]);
            }
        for (std::size_t i = 0 ; i + 1 < t ; ++i)
            for (auto u : classes[i])
                for (auto w : classes[i + 1])
                    if (rng() % 2 == 0)
                        edges.insert({ u, w });
        instance.coloring.t = t;
    }
    else {
        instance.r = draw(1, 4);
        auto t = draw(instance.r + 2, instance.r + 10);
        auto n = draw(t, 3 * t);
        for (std::size_t v = 0 ; v < n ; ++v)
            colour.push_back(static_cast<std::uint32_t>(v < t ? v + 1 : draw(1, t)));

        std::vector<std::set<std::uint32_t>> sees(n);
        auto fits = [&] (std::size_t v, std::uint32_t c) { return sees[v].count(c) || sees[v].size() < instance.r; };
        for (auto tries = 4 * n ; tries > 0 ; --tries) {
            auto u = static_cast<std::uint32_t>(draw(0, n - 1)), w = static_cast<std::uint32_t>(draw(0, n - 1));
            if (colour[u] == colour[w] || ! fits(u, colour[w]) || ! fits(w, colour[u]))
                continue;
            edges.insert({ std::min(u, w), std::max(u, w) });
            sees[u].insert(colour[w]);
            sees[w].insert(colour[u]);
        }
        instance.coloring.t = t;
    }

    instance.graph = SimpleGraph(colour.size());
    for (auto & [u, w] : edges)
        instance.graph.add_edge(u, w);
    instance.graph.finalise();
    instance.coloring.colour = std::move(colour);
    return instance;
}

}
