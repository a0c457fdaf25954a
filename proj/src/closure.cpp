#include "bowtie/closure.hpp"

#include <stdexcept>

#include "bowtie/errors.hpp"
#include "bowtie/structure.hpp"

namespace bowtie {

std::set<VertexPair> special_edges(const Graph& g) {
    if (auto w = find_bowtie(g))
        throw ContainsBowtieError("graph contains a bowtie", *w);
    if (!is_special(g)) {
        try {
            decompose(g);
        } catch (const NotSpecialError&) {
            throw;
        }
        throw NotSpecialError("graph is not special", -1);
    }

    std::map<VertexPair, int> per_edge;
    for (const auto& t : triangles_of(g)) {
        ++per_edge[ordered(t.v[0], t.v[1])];
        ++per_edge[ordered(t.v[0], t.v[2])];
        ++per_edge[ordered(t.v[1], t.v[2])];
    }
    std::set<VertexPair> out;
    for (const auto& [e, count] : per_edge)
        if (count >= 2) out.insert(e);
    return out;
}

ClosureResult acl(const Graph& g, const std::set<Vertex>& a) {
    for (Vertex v : a)
        if (!g.has_vertex(v)) throw std::invalid_argument("closure set has unknown vertex");
    auto specials = special_edges(g);  // also validates specialness

    ClosureResult r;
    r.input = a;
    r.closed = a;
    std::map<Vertex, ClosureEntry> why;
    for (Vertex v : a) why[v] = ClosureEntry{v, true, {}, {}};

    for (const auto& t : triangles_of(g)) {
        bool meets = false;
        for (Vertex v : t.v)
            if (a.count(v)) meets = true;
        if (!meets) continue;
        std::array<VertexPair, 3> sides{ordered(t.v[0], t.v[1]),
                                        ordered(t.v[0], t.v[2]),
                                        ordered(t.v[1], t.v[2])};
        for (const auto& e : sides) {
            if (!specials.count(e)) continue;
            for (Vertex v : {e.first, e.second}) {
                if (r.closed.insert(v).second)
                    why[v] = ClosureEntry{v, false, e, t};
            }
        }
    }
    for (const auto& [v, entry] : why) r.provenance.push_back(entry);
    return r;
}

nlohmann::json closure_to_json(const ClosureResult& r) {
    nlohmann::json j;
    j["input"] = r.input;
    j["closed"] = r.closed;
    j["provenance"] = nlohmann::json::array();
    for (const auto& e : r.provenance) {
        nlohmann::json je;
        je["vertex"] = e.vertex;
        je["rule"] = e.in_input ? "input" : "special-edge";
        if (e.via_edge) je["edge"] = {e.via_edge->first, e.via_edge->second};
        if (e.via_triangle) je["triangle"] = e.via_triangle->v;
        j["provenance"].push_back(je);
    }
    return j;
}

}  // namespace bowtie
