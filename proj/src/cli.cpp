#include <linkgraph/cli.hpp>
#include <linkgraph/error.hpp>
#include <linkgraph/harness.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace linkgraph {

namespace
{
    struct Usage {
        std::string message;
    };

    struct EllRange {
        std::size_t first = 1;
        std::size_t last = 1;
    };

    auto parse_number(std::string_view s) -> std::size_t
    {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
            throw Usage{ "expected a non-negative integer, got '" + std::string(s) + "'" };
        return value;
    }

    auto parse_ell(const std::string & text) -> EllRange
    {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            auto v = parse_number(text);
            return { v, v };
        }
        EllRange r{ parse_number(std::string_view(text).substr(0, dots)),
            parse_number(std::string_view(text).substr(dots + 2)) };
        if (r.first > r.last)
            throw Usage{ "empty range '" + text + "'" };
        return r;
    }

    auto single_ell(const std::string & text) -> std::size_t
    {
        auto r = parse_ell(text);
        if (r.first != r.last)
            throw Usage{ "this command takes a single value of --ell" };
        return r.first;
    }

    auto split_claims(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            if (comma == std::string::npos)
                comma = text.size();
            if (comma > start)
                out.push_back(text.substr(start, comma - start));
            start = comma + 1;
        }
        return out;
    }

    auto generate(const std::vector<std::string> & spec, std::uint64_t seed) -> Multigraph
    {
        if (spec.empty())
            throw Usage{ "gen needs a generator name" };
        auto & name = spec[0];
        auto arg = [&] (std::size_t i) {
            if (i >= spec.size())
                throw Usage{ "generator '" + name + "' needs " + std::to_string(i) + " parameter(s)" };
            return parse_number(spec[i]);
        };
        if (name == "dipole")
            return dipole(arg(1));
        if (name == "complete")
            return complete(arg(1));
        if (name == "complete_bipartite")
            return complete_bipartite(arg(1), arg(2));
        if (name == "cycle")
            return cycle(arg(1));
        if (name == "path")
            return path(arg(1));
        if (name == "petersen")
            return petersen();
        if (name == "wheel")
            return wheel(arg(1));
        if (name == "figure_two")
            return figure_two_graph();
        if (name == "random")
            return random_multigraph(arg(1), arg(2), seed);
        throw Usage{ "unknown generator '" + name + "'" };
    }

    auto corpus_file_name(const std::string & name) -> std::string
    {
        std::string out;
        for (auto c : name)
            out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
        while (! out.empty() && out.back() == '_')
            out.pop_back();
        return out + ".txt";
    }

    auto stats(const Multigraph & g, std::size_t ell, std::size_t limit) -> nlohmann::json
    {
        auto h = link_graph(g, ell, limit);
        std::size_t max_multiplicity = 0;
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> bundles;
        for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
            max_multiplicity = std::max(max_multiplicity, ++bundles[h.endpoints(e)]);
        std::size_t min_deg = h.vertex_count() ? static_cast<std::size_t>(-1) : 0, max_deg = 0;
        for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v) {
            min_deg = std::min(min_deg, h.degree(v));
            max_deg = std::max(max_deg, h.degree(v));
        }
        auto hub = hub_subgraph(g, ell, limit);
        auto evidence = connectivity_evidence(g, ell, limit);
        nlohmann::json j{ { "ell", ell }, { "vertices", h.vertex_count() }, { "edges", h.edge_count() },
            { "min_degree", min_deg }, { "max_degree", max_deg }, { "max_multiplicity", max_multiplicity },
            { "connected", is_connected(h) }, { "shunting_criterion", evidence.criterion },
            { "hub_vertices", hub.vertex_count() }, { "hub_edges", hub.edge_count() } };
        j["regular"] = min_deg == max_deg ? nlohmann::json(min_deg) : nlohmann::json(nullptr);
        return j;
    }

    struct Options {
        std::string ell = "1";
        std::size_t limit = default_link_limit;
        std::size_t oracle_cap = 0;
        std::string format = "json";
        std::string out;
        std::string claims;
        std::string input;
        std::string what = "link";
        std::string method = "exact";
        std::size_t search_rounds = 40;
        std::uint64_t seed = 0x6c696e6b;
        bool no_timing = false;
        std::vector<std::string> generator;
    };

    auto emit(const Options & o, std::ostream & out, const std::string & text) -> void
    {
        if (o.out.empty()) {
            out << text;
            if (! text.empty() && text.back() != '\n')
                out << '\n';
            return;
        }
        std::ofstream file(o.out);
        if (! file)
            fail(ErrorCode::InvalidParameter, "cannot write '" + o.out + "'");
        file << text;
        if (! text.empty() && text.back() != '\n')
            file << '\n';
    }

    auto need_json(const Options & o) -> void
    {
        if (o.format != "json")
            throw Usage{ "this output is only available as json" };
    }

    auto run_build(const Options & o, std::ostream & out) -> int
    {
        auto g = read_edge_list(o.input);
        auto ell = single_ell(o.ell);
        if (o.what == "arc") {
            need_json(o);
            emit(o, out, to_json(arc_digraph(g, ell, o.limit), g).dump(1));
            return exit_ok;
        }
        auto h = o.what == "path" ? path_graph(g, ell, o.limit) : link_graph(g, ell, o.limit);
        if (o.format == "dot")
            emit(o, out, to_dot(h));
        else if (o.format == "edgelist")
            emit(o, out, serialize_edge_list(h));
        else
            emit(o, out, to_json(h).dump(1));
        return exit_ok;
    }

    auto run_stats(const Options & o, std::ostream & out) -> int
    {
        need_json(o);
        auto g = read_edge_list(o.input);
        auto range = parse_ell(o.ell);
        nlohmann::json levels = nlohmann::json::array();
        for (auto ell = range.first ; ell <= range.last ; ++ell)
            levels.push_back(stats(g, ell, o.limit));
        nlohmann::json j{ { "vertices", g.vertex_count() }, { "edges", g.edge_count() },
            { "max_degree", max_degree(g) }, { "degeneracy", degeneracy(g) }, { "connected", is_connected(g) },
            { "links", levels } };
        auto girth_g = girth(g);
        j["girth"] = girth_g == infinite ? nlohmann::json("infinite") : nlohmann::json(girth_g);
        emit(o, out, j.dump(1));
        return exit_ok;
    }

    auto run_color(const Options & o, std::ostream & out) -> int
    {
        need_json(o);
        auto g = read_edge_list(o.input);
        auto ell = single_ell(o.ell);
        auto cap = o.oracle_cap ? o.oracle_cap : default_colour_oracle_cap;
        auto h = link_graph(g, ell, o.limit);
        Coloring c;
        nlohmann::json extra = nlohmann::json::object();
        if (o.method == "exact") {
            c = exact_chromatic(h, cap).coloring;
        }
        else if (o.method == "recursive") {
            auto r = recursive_chromatic_bound(g, ell, cap, o.limit);
            c = r.coloring;
            extra["exact_base"] = r.exact_base;
            extra["chain"] = r.chain;
            auto bounds = theorem1_bounds(g, ell, cap, o.limit);
            if (auto best = bounds.best())
                extra["bound"] = *best;
        }
        else if (o.method == "greedy") {
            c = greedy_coloring(h.underlying_simple());
        }
        else {
            throw Usage{ "unknown method '" + o.method + "'" };
        }
        nlohmann::json j{ { "ell", ell }, { "method", o.method }, { "colours", c.used() },
            { "proper", is_proper(h, c) }, { "coloring", to_json(h, c) } };
        j.update(extra);
        emit(o, out, j.dump(1));
        return exit_ok;
    }

    auto run_minor(const Options & o, std::ostream & out) -> int
    {
        need_json(o);
        auto g = read_edge_list(o.input);
        auto ell = single_ell(o.ell);
        auto h = link_graph(g, ell, o.limit);
        HadwigerOptions options;
        options.oracle_cap = o.oracle_cap ? o.oracle_cap : default_minor_oracle_cap;
        options.limit = o.limit;
        options.search_rounds = o.search_rounds;
        options.seed = o.seed;
        auto b = hadwiger_lower_bound(h, options);
        nlohmann::json routes = nlohmann::json::array();
        for (auto & r : b.routes) {
            nlohmann::json route{ { "route", r.route }, { "order", r.order } };
            if (! r.note.empty())
                route["note"] = r.note;
            routes.push_back(std::move(route));
        }
        nlohmann::json j{ { "ell", ell }, { "bound", b.bound }, { "route", b.route },
            { "degeneracy", b.degeneracy }, { "verified", verify_minor(h, b.witness).ok }, { "routes", routes },
            { "witness", to_json(h, b.witness) } };
        j["eta_g"] = b.eta_g ? nlohmann::json(*b.eta_g) : nlohmann::json(nullptr);
        emit(o, out, j.dump(1));
        return exit_ok;
    }

    auto run_verify(const Options & o, std::ostream & out) -> int
    {
        need_json(o);
        CorpusSpec corpus;
        if (o.input.empty()) {
            corpus = default_corpus();
        }
        else {
            CorpusInstance instance;
            instance.name = std::filesystem::path(o.input).filename().string();
            instance.graph = read_edge_list(o.input);
            corpus.instances.push_back(std::move(instance));
        }
        if (o.ell != "default") {
            auto range = parse_ell(o.ell);
            for (auto & instance : corpus.instances) {
                instance.ell_min = range.first;
                instance.ell_max = range.last;
            }
        }
        corpus.limit = std::min(corpus.limit, o.limit);
        if (o.oracle_cap)
            corpus.minor_cap = o.oracle_cap;
        corpus.search_rounds = o.search_rounds;
        corpus.seed = o.seed;
        auto report = verify_suite(corpus, split_claims(o.claims));
        emit(o, out, to_json(report, ! o.no_timing).dump(1));
        return report.passed() ? exit_ok : exit_failed;
    }

    auto run_gen(const Options & o, std::ostream & out) -> int
    {
        if (o.format != "edgelist" && o.format != "json" && o.format != "dot")
            throw Usage{ "unknown format '" + o.format + "'" };
        if (! o.generator.empty() && o.generator[0] == "corpus") {
            if (o.out.empty())
                throw Usage{ "gen corpus needs --out DIR" };
            std::filesystem::create_directories(o.out);
            nlohmann::json index = nlohmann::json::array();
            for (auto & instance : default_corpus().instances) {
                auto file = corpus_file_name(instance.name);
                std::ofstream(std::filesystem::path(o.out) / file) << serialize_edge_list(instance.graph);
                index.push_back({ { "name", instance.name }, { "file", file } });
            }
            out << index.dump(1) << '\n';
            return exit_ok;
        }
        auto g = generate(o.generator, o.seed);
        if (o.format == "dot")
            emit(o, out, to_dot(g));
        else if (o.format == "json")
            emit(o, out, nlohmann::json{ { "vertices", g.vertex_ids() }, { "edges", [&] {
                nlohmann::json edges = nlohmann::json::array();
                for (auto & e : g.edge_specs())
                    edges.push_back({ e.id, e.u, e.v });
                return edges;
            }() } }.dump(1));
        else
            emit(o, out, serialize_edge_list(g));
        return exit_ok;
    }

    auto diagnostic(std::ostream & err, const Error & e) -> void
    {
        nlohmann::json j{ { "error", std::string(to_string(e.code())) }, { "message", e.what() } };
        if (auto limit = dynamic_cast<const LimitExceeded *>(&e)) {
            j["count"] = limit->count();
            j["limit"] = limit->limit();
        }
        err << j.dump() << '\n';
    }
}

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Link graphs of multigraphs: construction, colouring, minors and claim checks", "linkgraph" };
    app.require_subcommand(1);
    Options o;

    auto common = [&] (CLI::App * sub, bool file, bool file_required = true) {
        sub->add_option("--ell", o.ell, "Link length, or a range a..b where accepted");
        sub->add_option("--limit", o.limit, "Maximum number of links enumerated per length");
        sub->add_option("--oracle-cap", o.oracle_cap, "Vertex cap for the exact oracles");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({ "json", "dot", "edgelist" }));
        sub->add_option("--out", o.out, "Write output to this path");
        if (file) {
            auto opt = sub->add_option("input", o.input, "Edge list file");
            if (file_required)
                opt->required();
        }
    };

    auto build = app.add_subcommand("build", "Emit the l-link graph, l-path graph or l-arc digraph");
    common(build, true);
    build->add_option("--what", o.what, "Construction")->check(CLI::IsMember({ "link", "path", "arc" }));
    auto stats_cmd = app.add_subcommand("stats", "Counts, regularity and connectivity per l");
    common(stats_cmd, true);
    auto color = app.add_subcommand("color", "Colour the l-link graph");
    common(color, true);
    color->add_option("--method", o.method, "exact, recursive or greedy")
        ->check(CLI::IsMember({ "exact", "recursive", "greedy" }));
    auto minor = app.add_subcommand("minor", "Verified complete-minor lower bound for the l-link graph");
    common(minor, true);
    minor->add_option("--search-rounds", o.search_rounds, "Rounds of random contraction search");
    minor->add_option("--seed", o.seed, "Seed of the contraction search");
    auto verify = app.add_subcommand("verify", "Run the claim suites on a file or on the default corpus");
    common(verify, true, false);
    verify->add_option("--claims", o.claims, "Comma separated claim ids");
    verify->add_option("--search-rounds", o.search_rounds, "Rounds of random contraction search");
    verify->add_option("--seed", o.seed, "Seed recorded in the report");
    verify->add_flag("--no-timing", o.no_timing, "Omit runtimes from the report");
    auto gen = app.add_subcommand("gen", "Print a generated instance, or write the corpus with 'gen corpus --out DIR'");
    common(gen, false);
    gen->add_option("generator", o.generator, "Generator name and parameters")->required();
    gen->add_option("--seed", o.seed, "Seed for 'random'");
    o.format = "json";

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << nlohmann::json{ { "error", "Usage" }, { "message", e.what() } }.dump() << '\n';
        return exit_usage;
    }

    if (verify->parsed() && verify->count("--ell") == 0)
        o.ell = "default";
    if (gen->parsed() && gen->count("--format") == 0)
        o.format = "edgelist";

    try {
        if (build->parsed())
            return run_build(o, out);
        if (stats_cmd->parsed())
            return run_stats(o, out);
        if (color->parsed())
            return run_color(o, out);
        if (minor->parsed())
            return run_minor(o, out);
        if (verify->parsed())
            return run_verify(o, out);
        return run_gen(o, out);
    }
    catch (const Usage & u) {
        err << nlohmann::json{ { "error", "Usage" }, { "message", u.message } }.dump() << '\n';
        return exit_usage;
    }
    catch (const Error & e) {
        diagnostic(err, e);
        switch (e.code()) {
        case ErrorCode::LimitExceeded:
        case ErrorCode::OracleTooLarge:
            return exit_limit;
        case ErrorCode::MalformedLine:
        case ErrorCode::InvalidParameter:
        case ErrorCode::LoopRejected:
        case ErrorCode::UnknownVertex:
            return exit_usage;
        default:
            return exit_failed;
        }
    }
}

}
