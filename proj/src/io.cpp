#include "bowtie/io.hpp"

#include <sstream>
#include <stdexcept>

namespace bowtie {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    auto edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "vertices" && key != "edges")
            throw std::invalid_argument("unknown key in graph JSON: " + key);
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_array() || !j["edges"].is_array())
        throw std::invalid_argument("\"vertices\" and \"edges\" must be arrays");

    std::vector<Vertex> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer()) throw std::invalid_argument("vertex id must be an integer");
        vertices.push_back(v.get<Vertex>());
    }
    std::vector<VertexPair> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("edge must be a two-element integer array");
        Vertex u = e[0].get<Vertex>();
        Vertex v = e[1].get<Vertex>();
        if (u >= v) throw std::invalid_argument("edge must satisfy u < v");
        edges.push_back({u, v});
    }
    try {
        return Graph(std::move(vertices), edges);
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(std::string("invalid graph: ") + err.what());
    }
}

std::string graph_to_dot(const Graph& g, const std::set<VertexPair>& dashed) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v : g.vertices()) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (dashed.count({u, v})) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

json embedding_to_json(const Embedding& e) {
    json j = json::object();
    for (const auto& [u, v] : e) j[std::to_string(u)] = v;
    return j;
}

Embedding embedding_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("map JSON must be an object");
    Embedding e;
    for (const auto& [key, value] : j.items()) {
        std::size_t pos = 0;
        int u;
        try {
            u = std::stoi(key, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("map key must be a vertex id: " + key);
        }
        if (pos != key.size() || u < 0)
            throw std::invalid_argument("map key must be a vertex id: " + key);
        if (!value.is_number_integer())
            throw std::invalid_argument("map value must be an integer");
        e[u] = value.get<Vertex>();
    }
    return e;
}

}  // namespace bowtie
