#include "bowtie/amalgam.hpp"

#include <algorithm>
#include <stdexcept>

#include "bowtie/errors.hpp"
#include "bowtie/structure.hpp"

namespace bowtie {

void validate(const AmalgamSpec& spec) {
    if (spec.into_left.size() != spec.base.vertex_count() ||
        spec.into_right.size() != spec.base.vertex_count())
        throw std::invalid_argument("embedding must cover every base vertex");
    for (Vertex v : spec.base.vertices())
        if (!spec.into_left.count(v) || !spec.into_right.count(v))
            throw std::invalid_argument("embedding must cover every base vertex");
    if (!is_induced_embedding(spec.base, spec.left, spec.into_left))
        throw std::invalid_argument("left map is not an induced embedding");
    if (!is_induced_embedding(spec.base, spec.right, spec.into_right))
        throw std::invalid_argument("right map is not an induced embedding");
}

AmalgamResult free_amalgam(const AmalgamSpec& spec) {
    validate(spec);

    // right-side base image -> left-side base image
    std::map<Vertex, Vertex> identify;
    for (Vertex a : spec.base.vertices())
        identify[spec.into_right.at(a)] = spec.into_left.at(a);

    AmalgamResult out;
    for (Vertex v : spec.left.vertices()) out.from_left[v] = v;

    Vertex fresh = spec.left.max_vertex_id() + 1;
    for (Vertex v : spec.right.vertices()) {
        auto it = identify.find(v);
        out.from_right[v] = it != identify.end() ? it->second : fresh++;
    }

    std::vector<Vertex> vertices = spec.left.vertices();
    for (Vertex v : spec.right.vertices())
        if (!identify.count(v)) vertices.push_back(out.from_right.at(v));

    std::vector<VertexPair> edges(spec.left.edges().begin(),
                                  spec.left.edges().end());
    for (const auto& [u, v] : spec.right.edges())
        edges.push_back(ordered(out.from_right.at(u), out.from_right.at(v)));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    out.graph = Graph(std::move(vertices), edges);
    return out;
}

std::variant<AmalgamResult, AmalgamReport> check_special_amalgam(
    const AmalgamSpec& spec) {
    AmalgamReport report{{}, free_amalgam(spec)};

    if (!is_special(spec.base)) report.violations.push_back({"base not special", {}});
    if (!is_special(spec.left)) report.violations.push_back({"left not special", {}});
    if (!is_special(spec.right)) report.violations.push_back({"right not special", {}});

    const Graph& c = report.amalgam.graph;
    if (auto w = find_bowtie(c)) {
        report.violations.push_back(
            {"amalgam contains bowtie", {w->begin(), w->end()}});
    } else if (!is_special(c)) {
        // name a vertex outside every K4 and chimney
        Vertex offending = -1;
        try {
            decompose(c);
        } catch (const NotSpecialError& e) {
            offending = e.offending_vertex();
        }
        report.violations.push_back({"amalgam not special", {offending}});
    }

    if (report.violations.empty()) {
        if (!is_special(c))
            throw InternalClaimError("amalgam of special graphs is not special");
        return report.amalgam;
    }
    return report;
}

AmalgamResult disjoint_union(const Graph& g, const Graph& h) {
    AmalgamSpec spec{Graph(), g, h, {}, {}};
    return free_amalgam(spec);
}

}  // namespace bowtie
