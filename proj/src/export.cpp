#include <linkgraph/construction.hpp>

namespace linkgraph {

auto to_json(const LabeledGraph & h) -> nlohmann::json
{
    nlohmann::json vertices = nlohmann::json::array(), edges = nlohmann::json::array();
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
        vertices.push_back(format(h.source(), h.vertex(v)));
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
        edges.push_back({ h.endpoints(e).first, h.endpoints(e).second, format(h.source(), h.label(e)) });
    return { { "ell", h.ell() }, { "vertices", vertices }, { "edges", edges } };
}

auto to_json(const LabeledDigraph & d, const Multigraph & g) -> nlohmann::json
{
    nlohmann::json vertices = nlohmann::json::array(), arcs = nlohmann::json::array();
    for (auto & v : d.vertices)
        vertices.push_back(format(g, v));
    for (auto & a : d.arcs)
        arcs.push_back({ a.tail, a.head, format(g, a.label) });
    return { { "ell", d.ell }, { "vertices", vertices }, { "arcs", arcs } };
}

namespace
{
    auto quoted(const std::string & s) -> std::string
    {
        std::string out = "\"";
        for (auto c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    }
}

auto to_dot(const LabeledGraph & h, const AlmostStandardPartition * partition) -> std::string
{
    std::string out = "graph L" + std::to_string(h.ell()) + " {\n";
    auto node = [&] (std::uint32_t v) {
        return "  n" + std::to_string(v) + " [label=" + quoted(format(h.source(), h.vertex(v))) + "];\n";
    };
    if (partition) {
        for (std::size_t i = 0 ; i < partition->vertex_parts.size() ; ++i) {
            out += "  subgraph cluster_" + std::to_string(i) + " {\n  style=dotted;\n";
            if (i < partition->vertex_keys.size())
                out += "  label=" + quoted(format(h.source(), partition->vertex_keys[i])) + ";\n";
            for (auto v : partition->vertex_parts[i])
                out += "  " + node(v);
            out += "  }\n";
        }
    }
    else {
        for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
            out += node(v);
    }
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
        out += "  n" + std::to_string(h.endpoints(e).first) + " -- n" + std::to_string(h.endpoints(e).second) +
            " [label=" + quoted(format(h.source(), h.label(e))) + "];\n";
    return out + "}\n";
}

auto serialize_edge_list(const LabeledGraph & h) -> std::string
{
    std::string out;
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
        out += "# x" + std::to_string(v) + " = " + format(h.source(), h.vertex(v)) + "\n";
    for (std::uint32_t v = 0 ; v < h.vertex_count() ; ++v)
        out += "v x" + std::to_string(v) + "\n";
    for (std::uint32_t e = 0 ; e < h.edge_count() ; ++e)
        out += "x" + std::to_string(h.endpoints(e).first) + " x" + std::to_string(h.endpoints(e).second) + "\n";
    return out;
}

}
