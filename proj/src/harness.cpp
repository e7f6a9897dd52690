#include <linkgraph/harness.hpp>
#include <linkgraph/error.hpp>
#include <linkgraph/thresholds.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace linkgraph {

auto figure_two_graph() -> Multigraph
{
    return Multigraph({ "u0", "u1", "v0", "v1" },
            { { "f0", "u0", "v0" }, { "e0", "v0", "v1" }, { "e1", "v0", "v1" }, { "f1", "v1", "u1" } });
}

auto default_corpus() -> CorpusSpec
{
    CorpusSpec c;
    auto add = [&] (std::string name, Multigraph g) {
        auto & instance = c.instances.emplace_back();
        instance.name = std::move(name);
        instance.graph = std::move(g);
        return &c.instances.back();
    };
    for (std::size_t t = 2 ; t <= 5 ; ++t)
        add("dipole(" + std::to_string(t) + ")", dipole(t));
    for (std::size_t n = 3 ; n <= 6 ; ++n)
        add("complete(" + std::to_string(n) + ")", complete(n));
    for (std::size_t n = 2 ; n <= 3 ; ++n)
        for (std::size_t m = 2 ; m <= 4 ; ++m)
            add("complete_bipartite(" + std::to_string(n) + "," + std::to_string(m) + ")", complete_bipartite(n, m))
                ->bipartite = std::pair{ n, m };
    for (std::size_t n = 3 ; n <= 8 ; ++n)
        add("cycle(" + std::to_string(n) + ")", cycle(n));
    for (std::size_t n = 3 ; n <= 8 ; ++n)
        add("path(" + std::to_string(n) + ")", path(n));
    add("petersen", petersen());
    add("wheel(5)", wheel(5));
    add("wheel(6)", wheel(6));
    add("figure_two", figure_two_graph());
    add("random(7,12)", random_multigraph(7, 12, corpus_seeds[0]))->seed = corpus_seeds[0];
    add("random(8,14)", random_multigraph(8, 14, corpus_seeds[1]))->seed = corpus_seeds[1];
    return c;
}

// ---- checks -------------------------------------------------------------------------------

namespace
{
    auto power(std::uint64_t base, std::size_t exponent) -> std::uint64_t
    {
        std::uint64_t out = 1;
        while (exponent--)
            out *= base;
        return out;
    }

    auto failed(CheckResult & r, const std::string & why) -> void
    {
        r.ok = false;
        if (! r.detail.empty())
            r.detail += "; ";
        r.detail += why;
    }
}

auto check_counting(const Multigraph & g, const LabeledGraph & h, const LabeledGraph & next) -> CheckResult
{
    CheckResult r;
    auto ell = h.ell();
    if (next.ell() != ell + 1)
        fail(ErrorCode::LengthMismatch, "counting check needs consecutive lengths");
    r.values["edges"] = h.edge_count();
    r.values["next_vertices"] = next.vertex_count();
    if (h.edge_count() != next.vertex_count())
        failed(r, "|E| differs from the next order");

    auto regular = is_regular(g);
    if (regular && *regular >= 2) {
        auto rr = *regular;
        auto expected = g.edge_count() * power(rr - 1, ell);
        r.values["r"] = rr;
        r.values["expected_next_vertices"] = expected;
        if (next.vertex_count() != expected)
            failed(r, "order differs from m(r-1)^l");
        if (ell >= 1) {
            r.values["expected_degree"] = 2 * (rr - 1);
            for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
                if (h.degree(v) != 2 * (rr - 1)) {
                    failed(r, "vertex " + format(g, h.vertex(v)) + " has degree " + std::to_string(h.degree(v)));
                    break;
                }
        }
    }
    return r;
}

auto check_bipartite_counts(std::size_t n, std::size_t m, const LabeledGraph & h) -> CheckResult
{
    CheckResult r;
    auto ell = h.ell();
    if (ell < 1 || n < 2 || m < 2)
        fail(ErrorCode::InvalidParameter, "bipartite counts need l >= 1 and n, m >= 2");
    r.values["vertices"] = h.vertex_count();
    r.values["edges"] = h.edge_count();
    auto product = (n - 1) * (m - 1);
    if (ell % 2 == 1) {
        auto order = n * m * power(product, (ell - 1) / 2);
        r.values["expected_vertices"] = order;
        r.values["expected_degree"] = n + m - 2;
        if (h.vertex_count() != order)
            failed(r, "order differs from the odd-l formula");
        for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
            if (h.degree(v) != n + m - 2) {
                failed(r, "not (n+m-2)-regular");
                break;
            }
    }
    else {
        auto order = n * m * (n + m - 2) * power(product, ell / 2 - 1) / 2;
        r.values["expected_vertices"] = order;
        r.values["expected_average_degree"] = nlohmann::json::array({ 4 * product, n + m - 2 });
        if (h.vertex_count() != order)
            failed(r, "order differs from the even-l formula");
        if (2 * h.edge_count() * (n + m - 2) != 4 * product * h.vertex_count())
            failed(r, "average degree differs from 4(n-1)(m-1)/(n+m-2)");
    }
    return r;
}

auto check_loopless(const LabeledGraph & h) -> CheckResult
{
    CheckResult r;
    std::size_t loops = 0, mislabelled = 0;
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e) {
        auto [u, v] = h.endpoints(e);
        if (u == v) {
            ++loops;
            continue;
        }
        if (h.ell() + 1 != h.label(e).length()) {
            ++mislabelled;
            continue;
        }
        auto [a, b] = windows(h.label(e));
        auto lu = h.vertex(u), lv = h.vertex(v);
        if (! ((a == lu && b == lv) || (a == lv && b == lu)))
            ++mislabelled;
    }
    r.values["loops"] = loops;
    r.values["mislabelled"] = mislabelled;
    if (loops)
        failed(r, std::to_string(loops) + " loops");
    if (mislabelled)
        failed(r, std::to_string(mislabelled) + " edges whose ends are not the windows of their label");
    return r;
}

auto check_multiplicity(const LabeledGraph & h) -> CheckResult
{
    CheckResult r;
    auto & g = h.source();
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> bundles;
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
        bundles[h.endpoints(e)].push_back(e);

    std::size_t max_multiplicity = 0, doubled = 0, off_pattern = 0;
    for (auto & [ends, edges] : bundles) {
        max_multiplicity = std::max(max_multiplicity, edges.size());
        if (edges.size() != 2)
            continue;
        ++doubled;
        std::set<VertexIndex> vertices;
        std::set<EdgeIndex> used;
        for (auto l : { h.vertex(ends.first), h.vertex(ends.second), h.label(edges[0]), h.label(edges[1]) }) {
            auto u = l.units();
            for (std::size_t k = 0 ; k < u.size() ; ++k) {
                if (k % 2)
                    used.insert(u[k]);
                else
                    vertices.insert(u[k]);
            }
        }
        auto two_cycle = vertices.size() == 2 && used.size() == 2 &&
            std::all_of(used.begin(), used.end(), [&] (EdgeIndex e) {
                return vertices.count(g.endpoints(e).first) && vertices.count(g.endpoints(e).second);
            });
        if (! two_cycle)
            ++off_pattern;
    }

    std::size_t two_cycles = 0;
    std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> parallel;
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        ++parallel[g.endpoints(e)];
    for (auto & [ends, count] : parallel)
        two_cycles += count * (count - 1) / 2;

    r.values["max_multiplicity"] = max_multiplicity;
    r.values["doubled_pairs"] = doubled;
    r.values["two_cycles"] = two_cycles;
    if (max_multiplicity > 2)
        failed(r, "multiplicity " + std::to_string(max_multiplicity));
    if (off_pattern)
        failed(r, std::to_string(off_pattern) + " doubled pairs not carried by a 2-cycle");
    if (h.ell() >= 1 && doubled != two_cycles)
        failed(r, "doubled pairs do not match the 2-cycles of G");
    return r;
}

auto check_connectivity(const LabeledGraph & h, std::size_t limit) -> CheckResult
{
    CheckResult r;
    auto & g = h.source();
    auto evidence = connectivity_evidence(g, h.ell(), limit);
    auto direct = is_connected(h);
    r.values["criterion"] = evidence.criterion;
    r.values["direct"] = direct;
    r.values["hub_connected"] = evidence.hub_connected;
    r.values["hub_has_links"] = evidence.hub_has_links;
    if (evidence.criterion != direct)
        failed(r, "shunting criterion disagrees with direct search");
    return r;
}

auto check_hub_shunting(const Multigraph & g, std::size_t ell, std::size_t limit, std::size_t max_links)
    -> CheckResult
{
    CheckResult r;
    auto units = hub_units(g, ell, limit);
    auto hub = hub_subgraph(g, ell, limit);
    auto middle_inside = [&] (const Link & l) {
        auto c = middle_unit(l);
        return c.is_edge ? static_cast<bool>(units.edges[c.index]) : static_cast<bool>(units.vertices[c.index]);
    };
    std::vector<Link> own;
    for (auto & l : enumerate_links(hub, ell, limit))
        own.push_back(parse_link(g, format(hub, l)));
    r.values["hub_links"] = own.size();
    if (own.size() > max_links)
        own.resize(max_links);
    std::size_t unreachable = 0;
    for (std::size_t i = 1 ; i < own.size() ; ++i)
        if (! can_shunt_restricted(g, own[0], own[i], middle_inside).reachable)
            ++unreachable;
    r.values["checked"] = own.size();
    r.values["unreachable"] = unreachable;
    if (unreachable)
        failed(r, std::to_string(unreachable) + " hub links not reachable within the hub");
    return r;
}

auto check_partition(const LabeledGraph & h, const AlmostStandardPartition & p, const LabeledGraph & lower)
    -> CheckResult
{
    CheckResult r;
    PartitionReport report;
    try {
        report = verify_almost_standard(h, p);
    }
    catch (const Error & e) {
        failed(r, e.what());
        return r;
    }
    r.values["a"] = report.a;
    r.values["b"] = report.b;
    r.values["c"] = report.c;
    r.values["d"] = report.d;
    r.values["e"] = report.e;
    auto embedded = quotient_embedding_check(h, p, lower);
    r.values["embedding"] = embedded;
    r.values["vertex_parts"] = p.vertex_parts.size();
    r.values["edge_parts"] = p.edge_parts.size();
    if (! report.all())
        failed(r, "partition conditions fail");
    if (! embedded)
        failed(r, "quotient does not embed two levels down");
    return r;
}

auto check_recolouring(const RecolouringInstance & instance, const Coloring & reduced) -> CheckResult
{
    CheckResult r;
    auto bound = recolouring_bound(instance.coloring.t, instance.r);
    std::uint32_t top = 0;
    for (auto c : reduced.colour)
        top = std::max(top, c);
    r.values["t"] = instance.coloring.t;
    r.values["r"] = instance.r;
    r.values["bound"] = bound;
    r.values["max_colour"] = top;
    if (! is_proper(instance.graph, reduced))
        failed(r, "reduced colouring is improper");
    if (top > bound)
        failed(r, "uses colour " + std::to_string(top) + " above the bound " + std::to_string(bound));
    if (top > instance.coloring.t)
        failed(r, "more colours than the input");
    return r;
}

auto check_colouring(const LabeledGraph & h, const Coloring & c, std::int64_t bound) -> CheckResult
{
    CheckResult r;
    auto used = static_cast<std::int64_t>(c.used());
    r.values["colours"] = used;
    r.values["bound"] = bound;
    if (! is_proper(h, c))
        failed(r, "colouring is improper");
    if (used > bound)
        failed(r, "uses " + std::to_string(used) + " colours, bound " + std::to_string(bound));
    return r;
}

auto check_minor(const LabeledGraph & h, const MinorWitness & w, std::size_t required) -> CheckResult
{
    CheckResult r;
    auto check = verify_minor(h, w);
    r.values["order"] = w.order();
    r.values["required"] = required;
    r.values["verified"] = check.ok;
    if (! check.ok)
        failed(r, "witness rejected: " + check.reason);
    if (w.order() < required)
        failed(r, "witness of order " + std::to_string(w.order()) + " below " + std::to_string(required));
    return r;
}

auto check_path_graph(const LabeledGraph & p, const LabeledGraph & h, bool expect_equal) -> CheckResult
{
    CheckResult r;
    auto s = simplify(h);
    r.values["path_vertices"] = p.vertex_count();
    r.values["path_edges"] = p.edge_count();
    r.values["link_vertices"] = s.vertex_count();
    r.values["link_edges"] = s.edge_count();
    r.values["expect_equal"] = expect_equal;
    if (expect_equal) {
        if (! (p == s))
            failed(r, "path graph differs from the simplified link graph");
        return r;
    }

    std::vector<std::uint32_t> image;
    std::vector<std::uint32_t> preimage(s.vertex_count(), static_cast<std::uint32_t>(-1));
    for (std::uint32_t v = 0 ; v < p.vertex_count() ; ++v) {
        auto w = s.find_vertex(p.vertex(v));
        if (! w) {
            failed(r, "path vertex " + format(p.source(), p.vertex(v)) + " is not a link");
            return r;
        }
        image.push_back(*w);
        preimage[*w] = v;
    }
    auto ps = p.underlying_simple();
    auto ss = s.underlying_simple();
    for (std::uint32_t e = 0 ; e < p.edge_count() ; ++e)
        if (! ss.adjacent(image[p.endpoints(e).first], image[p.endpoints(e).second]))
            failed(r, "path edge missing from the link graph");
    for (std::uint32_t e = 0 ; e < s.edge_count() ; ++e) {
        auto [a, b] = s.endpoints(e);
        if (preimage[a] != static_cast<std::uint32_t>(-1) && preimage[b] != static_cast<std::uint32_t>(-1) &&
                ! ps.adjacent(preimage[a], preimage[b]))
            failed(r, "path graph is not induced");
    }
    return r;
}

auto check_digraph_iso(const LabeledDigraph & arcs, const LabeledDigraph & iterated) -> CheckResult
{
    CheckResult r;
    r.values["vertices"] = arcs.vertices.size();
    r.values["arcs"] = arcs.arcs.size();
    r.values["iterated_vertices"] = iterated.vertices.size();
    r.values["iterated_arcs"] = iterated.arcs.size();
    if (! digraph_natural_iso_check(arcs, iterated))
        failed(r, "natural map is not an isomorphism");
    return r;
}

// ---- suite --------------------------------------------------------------------------------

auto Report::failures() const -> std::size_t
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
            [] (const ClaimRecord & c) { return c.status == "fail"; }));
}

auto known_claims() -> const std::vector<std::string> &
{
    static const std::vector<std::string> claims{ "Cor1.2", "Cor3.8", "DigraphIso", "Lemma3.5", "Lemma3.7",
        "Lemma4.1", "Lemma4.2", "Lemma4.3", "Obs3.1", "Obs3.2", "Obs3.3", "Obs3.4", "PathGraph", "Thm1.1", "Thm1.2",
        "Thm1.3", "Thm1.4", "Thm1.rec", "Thm2", "Thm3.1", "Thm3.2", "Thm3.3", "Thm3.4", "Thm3.5" };
    return claims;
}

namespace
{
    struct Skipped {
        std::string reason;
    };

    class InstanceCache {
    public:
        InstanceCache(const CorpusInstance & instance, const CorpusSpec & corpus)
            : _instance(instance), _corpus(corpus)
        {}

        auto graph() const -> const Multigraph & { return _instance.graph; }

        auto links(std::size_t ell) -> const LabeledGraph &
        {
            auto it = _links.find(ell);
            if (it == _links.end()) {
                std::optional<LabeledGraph> h;
                try {
                    h = link_graph(_instance.graph, ell, _corpus.limit);
                }
                catch (const LimitExceeded &) {
                }
                it = _links.emplace(ell, std::move(h)).first;
            }
            if (! it->second)
                throw Skipped{ "more than " + std::to_string(_corpus.limit) + " links of length " + std::to_string(ell) };
            return *it->second;
        }

        auto chromatic(std::size_t ell) -> const ChromaticResult &
        {
            auto & h = links(ell);
            if (h.vertex_count() > _corpus.colour_cap)
                throw Skipped{ "link graph above the colour oracle cap" };
            auto it = _chi.find(ell);
            if (it == _chi.end())
                it = _chi.emplace(ell, exact_chromatic(h, _corpus.colour_cap)).first;
            return it->second;
        }

        auto hadwiger(std::size_t ell) -> const HadwigerResult &
        {
            auto & h = links(ell);
            if (h.vertex_count() > _corpus.minor_cap)
                throw Skipped{ "link graph above the minor oracle cap" };
            auto it = _eta.find(ell);
            if (it == _eta.end())
                it = _eta.emplace(ell, exact_hadwiger(h.underlying_simple(), _corpus.minor_cap)).first;
            return it->second;
        }

        auto bounds(std::size_t ell) -> const Theorem1Bounds &
        {
            auto it = _bounds.find(ell);
            if (it == _bounds.end())
                it = _bounds.emplace(ell, theorem1_bounds(_instance.graph, ell, _corpus.colour_cap, _corpus.limit))
                    .first;
            return it->second;
        }

        auto recursive(std::size_t ell) -> const RecursiveColoring &
        {
            links(ell);
            auto it = _recursive.find(ell);
            if (it == _recursive.end())
                it = _recursive.emplace(ell, recursive_chromatic_bound(_instance.graph, ell, _corpus.colour_cap,
                        _corpus.limit)).first;
            return it->second;
        }

    private:
        const CorpusInstance & _instance;
        const CorpusSpec & _corpus;
        std::map<std::size_t, std::optional<LabeledGraph>> _links;
        std::map<std::size_t, ChromaticResult> _chi;
        std::map<std::size_t, HadwigerResult> _eta;
        std::map<std::size_t, Theorem1Bounds> _bounds;
        std::map<std::size_t, RecursiveColoring> _recursive;
    };

    class Suite {
    public:
        Suite(const CorpusSpec & corpus, const std::vector<std::string> & claims) : _corpus(corpus)
        {
            for (auto & c : claims) {
                if (std::find(known_claims().begin(), known_claims().end(), c) == known_claims().end())
                    fail(ErrorCode::InvalidParameter, "unknown claim '" + c + "'");
                _selected.insert(c);
            }
            _report.seed = corpus.seed;
        }

        auto run() -> Report
        {
            for (auto & instance : _corpus.instances) {
                InstanceCache cache(instance, _corpus);
                for (auto ell = instance.ell_min ; ell <= instance.ell_max ; ++ell)
                    run_instance(instance, cache, ell);
                run_instance_once(instance, cache);
            }
            run_recolouring();
            std::stable_sort(_report.records.begin(), _report.records.end(), [] (auto & a, auto & b) {
                return std::tie(a.claim, a.instance, a.ell) < std::tie(b.claim, b.instance, b.ell);
            });
            return std::move(_report);
        }

    private:
        auto wants(const std::string & claim) const -> bool { return _selected.empty() || _selected.count(claim); }

        void attempt(const std::string & claim, const CorpusInstance & instance, std::optional<std::size_t> ell,
                const std::function<CheckResult ()> & check)
        {
            if (! wants(claim))
                return;
            ClaimRecord record;
            record.claim = claim;
            record.instance = instance.name;
            record.ell = ell;
            if (instance.seed)
                record.values["seed"] = *instance.seed;
            auto start = std::chrono::steady_clock::now();
            try {
                auto result = check();
                record.status = result.ok ? "pass" : "fail";
                for (auto & [key, value] : result.values.items())
                    record.values[key] = value;
                record.detail = result.detail;
            }
            catch (const Skipped & s) {
                record.status = "skip";
                record.detail = s.reason;
            }
            catch (const LimitExceeded & e) {
                record.status = "skip";
                record.detail = e.what();
            }
            catch (const Error & e) {
                if (e.code() == ErrorCode::OracleTooLarge) {
                    record.status = "skip";
                }
                else {
                    record.status = "fail";
                }
                record.detail = e.what();
            }
            record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (record.status == "fail")
                record.reproduce = serialize_edge_list(instance.graph);
            _report.records.push_back(std::move(record));
        }

        void run_instance(const CorpusInstance & instance, InstanceCache & cache, std::size_t ell)
        {
            auto & g = instance.graph;
            attempt("Obs3.1", instance, ell, [&] { return check_counting(g, cache.links(ell), cache.links(ell + 1)); });
            if (instance.bipartite && ell >= 1)
                attempt("Obs3.2", instance, ell, [&] {
                    return check_bipartite_counts(instance.bipartite->first, instance.bipartite->second,
                            cache.links(ell));
                });
            attempt("Obs3.3", instance, ell, [&] { return check_loopless(cache.links(ell)); });
            if (ell >= 1)
                attempt("Obs3.4", instance, ell, [&] { return check_multiplicity(cache.links(ell)); });
            if (is_connected(g))
                attempt("Lemma3.5", instance, ell, [&] {
                    CheckResult r;
                    auto hub = hub_subgraph(g, ell, _corpus.limit);
                    r.values["hub_vertices"] = hub.vertex_count();
                    r.values["hub_edges"] = hub.edge_count();
                    if (hub.vertex_count() > 0 && ! is_connected(hub))
                        failed(r, "hub of a connected graph is disconnected");
                    return r;
                });
            attempt("Cor3.8", instance, ell, [&] { return check_connectivity(cache.links(ell), _corpus.limit); });
            if (is_connected(g))
                attempt("Lemma3.7", instance, ell, [&] {
                    cache.links(ell);
                    return check_hub_shunting(g, ell, _corpus.limit);
                });
            if (ell >= 2) {
                attempt("Lemma4.1", instance, ell, [&] {
                    auto & h = cache.links(ell);
                    return check_partition(h, natural_partition(h), cache.links(ell - 2));
                });
                attempt("Lemma4.3", instance, ell, [&] {
                    auto & lower = cache.chromatic(ell - 2);
                    auto & h = cache.links(ell);
                    auto lifted = lift_coloring(h, cache.links(ell - 2), lower.coloring);
                    auto r = check_colouring(h, lifted, static_cast<std::int64_t>(2 * lower.chi / 3 + 1));
                    r.values["chi_two_below"] = lower.chi;
                    return r;
                });
            }
            theorem_one(instance, cache, ell);
            if (ell >= 1 && ell <= 3)
                attempt("Thm2", instance, ell, [&] { return theorem_two(cache, ell); });
            theorem_three(instance, cache, ell);
            attempt("PathGraph", instance, ell, [&] {
                auto & h = cache.links(ell);
                auto girth_g = girth(g);
                auto equal = girth_g == infinite || girth_g > std::max<std::size_t>(ell, 2);
                auto r = check_path_graph(path_graph(g, ell, _corpus.limit), h, equal);
                r.values["girth"] = girth_g == infinite ? nlohmann::json("infinite") : nlohmann::json(girth_g);
                return r;
            });
            if (ell >= 1 && ell <= 3)
                attempt("DigraphIso", instance, ell, [&] {
                    cache.links(ell);
                    return check_digraph_iso(arc_digraph(g, ell, _corpus.limit),
                            iterated_line_digraph(g, ell, _corpus.limit));
                });
        }

        void run_instance_once(const CorpusInstance &, InstanceCache &) {}

        void theorem_one(const CorpusInstance & instance, InstanceCache & cache, std::size_t ell)
        {
            auto bound_claim = [&] (const std::string & claim, auto member) {
                attempt(claim, instance, ell, [&] {
                    auto & b = cache.bounds(ell);
                    if (! (b.*member))
                        throw Skipped{ "bound not applicable at this l" };
                    auto & chi = cache.chromatic(ell);
                    CheckResult r;
                    r.values["chi"] = chi.chi;
                    r.values["bound"] = *(b.*member);
                    r.values["bound_inputs_exact"] = b.chi_exact && b.chi_prime_exact;
                    if (static_cast<std::int64_t>(chi.chi) > *(b.*member))
                        failed(r, "chromatic number above the bound");
                    if (claim == "Thm1.2" && ell == 1) {
                        r.values["chi_prime"] = b.chi_prime;
                        if (b.chi_prime_exact && chi.chi != b.chi_prime)
                            failed(r, "chromatic number of the 1-link graph differs from the edge chromatic number");
                    }
                    return r;
                });
            };
            bound_claim("Thm1.1", &Theorem1Bounds::even);
            bound_claim("Thm1.2", &Theorem1Bounds::odd);
            bound_claim("Thm1.3", &Theorem1Bounds::degree);
            bound_claim("Thm1.4", &Theorem1Bounds::two_below);

            attempt("Thm1.rec", instance, ell, [&] {
                auto & rc = cache.recursive(ell);
                auto & b = cache.bounds(ell);
                auto r = check_colouring(cache.links(ell), rc.coloring, *b.best());
                r.values["exact_base"] = rc.exact_base;
                r.values["chain"] = rc.chain;
                return r;
            });

            attempt("Cor1.2", instance, ell, [&] {
                auto & b = cache.bounds(ell);
                if (! b.chi_exact || ! b.chi_prime_exact)
                    throw Skipped{ "chromatic inputs not exact" };
                auto regime = three_colourable_regime(ell, b.chi, b.chi_prime);
                auto degree_regime = degree_three_colourable_regime(ell, b.max_degree);
                if (! regime && ! degree_regime)
                    throw Skipped{ "outside both thresholds" };
                auto & h = cache.links(ell);
                auto r = check_colouring(h, cache.recursive(ell).coloring, 3);
                r.values["chi_regime"] = regime;
                r.values["degree_regime"] = degree_regime;
                if (h.vertex_count() <= _corpus.colour_cap) {
                    auto chi = cache.chromatic(ell).chi;
                    r.values["chi"] = chi;
                    if (chi > 3)
                        failed(r, "chromatic number above 3");
                }
                return r;
            });
        }

        auto theorem_two(InstanceCache & cache, std::size_t ell) -> CheckResult
        {
            auto & h = cache.links(ell);
            if (h.edge_count() == 0)
                throw Skipped{ "link graph has no edge" };
            auto & g = cache.graph();
            HadwigerOptions options;
            options.oracle_cap = _corpus.minor_cap;
            options.limit = _corpus.limit;
            options.search_rounds = _corpus.search_rounds;
            options.seed = _corpus.seed;
            auto bound = hadwiger_lower_bound(h, options);
            auto required = std::max(bound.degeneracy, bound.eta_g.value_or(0));

            auto witness = bound.witness;
            std::string route = bound.route;
            std::optional<std::size_t> exact;
            if (h.vertex_count() <= _corpus.minor_cap) {
                auto & eta = cache.hadwiger(ell);
                exact = eta.eta;
                if (eta.eta > witness.order()) {
                    witness = eta.witness;
                    route = "oracle";
                }
            }
            auto r = check_minor(h, witness, required);
            r.values["route"] = route;
            r.values["construction_bound"] = bound.bound;
            r.values["degeneracy"] = bound.degeneracy;
            r.values["eta_g"] = bound.eta_g ? nlohmann::json(*bound.eta_g) : nlohmann::json("above cap");
            r.values["eta_exact"] = exact ? nlohmann::json(*exact) : nlohmann::json("above cap");
            if (! bound.eta_g)
                r.values["note"] = "eta(G) above the oracle cap; degeneracy only";
            (void) g;
            return r;
        }

        void theorem_three(const CorpusInstance & instance, InstanceCache & cache, std::size_t ell)
        {
            auto cases = hadwiger_cases(instance.graph, ell);
            std::pair<const char *, bool> tagged[] = { { "Thm3.1", cases.biconnected }, { "Thm3.2", cases.even },
                { "Thm3.3", cases.degeneracy }, { "Thm3.4", cases.degree }, { "Thm3.5", cases.small_degree } };
            for (auto [claim, applies] : tagged) {
                if (! applies)
                    continue;
                attempt(claim, instance, ell, [&] {
                    auto & eta = cache.hadwiger(ell);
                    auto & chi = cache.chromatic(ell);
                    CheckResult r;
                    r.values["eta"] = eta.eta;
                    r.values["chi"] = chi.chi;
                    auto check = verify_minor(cache.links(ell), eta.witness);
                    if (! check.ok)
                        failed(r, "oracle witness rejected: " + check.reason);
                    if (eta.eta < chi.chi)
                        failed(r, "Hadwiger number below the chromatic number");
                    return r;
                });
            }
        }

        void run_recolouring()
        {
            CorpusInstance random;
            random.name = "random_instances";
            attempt("Lemma4.2", random, std::nullopt, [&] {
                CheckResult r;
                std::vector<std::uint64_t> bad;
                for (std::uint64_t seed = 1 ; seed <= _corpus.recolouring_instances ; ++seed) {
                    auto instance = random_recolouring_instance(seed);
                    auto check = check_recolouring(instance, reduce_coloring(instance.graph, instance.coloring,
                            instance.r));
                    if (! check.ok)
                        bad.push_back(seed);
                }
                r.values["instances"] = _corpus.recolouring_instances;
                r.values["failing_seeds"] = bad;
                if (! bad.empty())
                    failed(r, std::to_string(bad.size()) + " instances violate the bound");
                return r;
            });

            CorpusInstance identity;
            identity.name = "identity_case";
            attempt("Lemma4.2", identity, std::nullopt, [&] {
                SimpleGraph c5(5);
                for (std::uint32_t v = 0 ; v < 5 ; ++v)
                    c5.add_edge(v, (v + 1) % 5);
                c5.finalise();
                Coloring c{ { 1, 2, 1, 2, 3 }, 3 };
                auto out = reduce_coloring(c5, c, 2);
                auto r = check_recolouring({ c5, c, 2 }, out);
                r.values["unchanged"] = out.colour == c.colour;
                if (out.colour != c.colour)
                    failed(r, "t <= r + 1 must leave the colouring unchanged");
                return r;
            });
        }

        const CorpusSpec & _corpus;
        std::set<std::string> _selected;
        Report _report;
    };
}

auto verify_suite(const CorpusSpec & corpus, const std::vector<std::string> & claims) -> Report
{
    return Suite(corpus, claims).run();
}

auto to_json(const Report & r, bool timing) -> nlohmann::json
{
    std::map<std::string, std::array<std::size_t, 3>> summary;
    nlohmann::json records = nlohmann::json::array();
    for (auto & c : r.records) {
        auto & s = summary[c.claim];
        ++s[c.status == "pass" ? 0 : c.status == "fail" ? 1 : 2];
        nlohmann::json j{ { "claim", c.claim }, { "instance", c.instance }, { "status", c.status },
            { "values", c.values } };
        j["ell"] = c.ell ? nlohmann::json(*c.ell) : nlohmann::json(nullptr);
        if (! c.detail.empty())
            j["detail"] = c.detail;
        if (! c.reproduce.empty())
            j["reproduce"] = c.reproduce;
        if (timing)
            j["seconds"] = c.seconds;
        records.push_back(std::move(j));
    }
    nlohmann::json counts = nlohmann::json::object();
    for (auto & [claim, s] : summary)
        counts[claim] = { { "pass", s[0] }, { "fail", s[1] }, { "skip", s[2] } };

    return {
        { "report_version", 1 },
        { "seed", r.seed },
        { "claims", known_claims() },
        { "covered_elsewhere", {
            { "Cor3.6", "Cor3.8 fallback when the hub carries no link" },
            { "Cor4.4", "Thm3.3 and Thm3.4 case thresholds" },
            { "Lemma5.1", "Thm2 cut route" },
            { "Lemma5.2", "Thm2 cut and hub routes" },
            { "Cor5.3", "Thm2 hub route" },
            { "Obs2.path", "PathGraph" },
            { "Cor2.hadwiger_path", "PathGraph with Thm2" },
            { "Cor3.hadwiger_path", "PathGraph with Thm3" },
        } },
        { "out_of_scope", { "cited external theorems, used only as checked inequalities",
            "asymptotic and infinite-family statements" } },
        { "passed", r.passed() },
        { "summary", counts },
        { "records", records },
    };
}

}
