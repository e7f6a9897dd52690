#include <linkgraph/multigraph.hpp>
#include <linkgraph/error.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace linkgraph {

auto parse_edge_list(std::string_view text) -> Multigraph
{
    std::set<std::string> vertices;
    std::vector<EdgeSpec> edges;
    std::size_t line_number = 0;

    std::istringstream in{ std::string(text) };
    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;

        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w ; tokens >> w ; )
            words.push_back(w);

        if (words.size() == 2 && words[0] == "v") {
            vertices.insert(words[1]);
            continue;
        }
        if (words.size() != 2)
            fail(ErrorCode::MalformedLine, "line " + std::to_string(line_number) + ": expected two tokens, got '" +
                    line + "'");
        if (words[0] == words[1])
            fail(ErrorCode::LoopRejected, "line " + std::to_string(line_number) + ": loop at '" + words[0] + "'");

        vertices.insert(words[0]);
        vertices.insert(words[1]);
        edges.push_back({ "e" + std::to_string(edges.size() + 1), words[0], words[1] });
    }

    return Multigraph(std::vector<std::string>(vertices.begin(), vertices.end()), std::move(edges));
}

auto read_edge_list(const std::string & path) -> Multigraph
{
    std::ifstream in(path);
    if (! in)
        fail(ErrorCode::InvalidParameter, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

auto serialize_edge_list(const Multigraph & g) -> std::string
{
    std::string out;
    for (auto & v : g.vertex_ids())
        out += "v " + v + "\n";
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        out += g.vertex_id(g.endpoints(e).first) + " " + g.vertex_id(g.endpoints(e).second) + "\n";
    return out;
}

auto to_dot(const Multigraph & g, std::string_view name) -> std::string
{
    std::string out = "graph \"" + std::string(name) + "\" {\n";
    for (auto & v : g.vertex_ids())
        out += "  \"" + v + "\";\n";
    for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
        out += "  \"" + g.vertex_id(g.endpoints(e).first) + "\" -- \"" + g.vertex_id(g.endpoints(e).second) +
            "\" [label=\"" + g.edge_id(e) + "\"];\n";
    out += "}\n";
    return out;
}

}
