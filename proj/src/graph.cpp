#include "bowtie/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bowtie {

Graph::Graph(std::vector<Vertex> vertices, const std::vector<VertexPair>& edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex id");
    for (Vertex v : vertices_) {
        if (v < 0) throw std::invalid_argument("negative vertex id");
        adjacency_[v];
    }
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("edge endpoint is not a listed vertex");
        edges_.insert(ordered(u, v));
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    return edges_.count(ordered(u, v)) != 0;
}

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw std::invalid_argument("no such vertex");
    return it->second;
}

Vertex Graph::max_vertex_id() const {
    return vertices_.empty() ? -1 : vertices_.back();
}

Graph Graph::induced(const std::set<Vertex>& subset) const {
    std::vector<Vertex> vs;
    for (Vertex v : vertices_)
        if (subset.count(v)) vs.push_back(v);
    std::vector<VertexPair> es;
    for (const auto& [u, v] : edges_)
        if (subset.count(u) && subset.count(v)) es.push_back({u, v});
    return Graph(std::move(vs), es);
}

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
    std::array<Vertex, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return Triangle{t};
}

std::vector<Triangle> triangles_of(const Graph& g) {
    std::vector<Triangle> out;
    for (const auto& [u, v] : g.edges()) {
        // common neighbors above v close each triangle exactly once
        for (Vertex w : g.neighbors(u)) {
            if (w <= v) continue;
            if (g.has_edge(v, w)) out.push_back(make_triangle(u, v, w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Number of shared vertices of two sorted triples.
int shared_count(const Triangle& s, const Triangle& t) {
    int n = 0;
    for (Vertex a : s.v)
        for (Vertex b : t.v)
            if (a == b) ++n;
    return n;
}

}  // namespace

std::optional<std::array<Vertex, 5>> find_bowtie(const Graph& g) {
    auto tris = triangles_of(g);
    for (std::size_t i = 0; i < tris.size(); ++i) {
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            if (shared_count(tris[i], tris[j]) != 1) continue;
            Vertex center = -1;
            for (Vertex a : tris[i].v)
                for (Vertex b : tris[j].v)
                    if (a == b) center = a;
            std::array<Vertex, 5> w{};
            std::size_t k = 0;
            for (Vertex a : tris[i].v)
                if (a != center) w[k++] = a;
            w[k++] = center;
            for (Vertex b : tris[j].v)
                if (b != center) w[k++] = b;
            return w;
        }
    }
    return std::nullopt;
}

bool contains_bowtie(const Graph& g) { return find_bowtie(g).has_value(); }

bool is_induced_embedding(const Graph& source, const Graph& target,
                          const Embedding& e) {
    std::set<Vertex> image;
    for (const auto& [u, fu] : e) {
        if (!source.has_vertex(u) || !target.has_vertex(fu)) return false;
        if (!image.insert(fu).second) return false;  // not injective
    }
    for (auto it = e.begin(); it != e.end(); ++it)
        for (auto jt = std::next(it); jt != e.end(); ++jt)
            if (source.has_edge(it->first, jt->first) !=
                target.has_edge(it->second, jt->second))
                return false;
    return true;
}

namespace {

struct EmbeddingSearch {
    const Graph& a;
    const Graph& g;
    std::size_t limit;
    std::vector<Vertex> order;           // unmapped source vertices, ascending
    std::map<Vertex, std::size_t> tri_a; // triangle counts per vertex
    std::map<Vertex, std::size_t> tri_g;
    Embedding current;
    std::set<Vertex> used;
    std::vector<Embedding> results;

    bool compatible(Vertex v, Vertex c) const {
        if (used.count(c)) return false;
        if (g.degree(c) < a.degree(v)) return false;
        if (tri_g.at(c) < tri_a.at(v)) return false;
        for (const auto& [u, fu] : current)
            if (a.has_edge(u, v) != g.has_edge(fu, c)) return false;
        return true;
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) {
            results.push_back(current);
            return limit != 0 && results.size() >= limit;
        }
        Vertex v = order[depth];
        for (Vertex c : g.vertices()) {
            if (!compatible(v, c)) continue;
            current[v] = c;
            used.insert(c);
            bool done = run(depth + 1);
            used.erase(c);
            current.erase(v);
            if (done) return true;
        }
        return false;
    }
};

std::map<Vertex, std::size_t> triangle_counts(const Graph& g) {
    std::map<Vertex, std::size_t> out;
    for (Vertex v : g.vertices()) out[v] = 0;
    for (const auto& t : triangles_of(g))
        for (Vertex v : t.v) ++out[v];
    return out;
}

}  // namespace

std::vector<Embedding> find_embeddings(const Graph& a, const Graph& g,
                                       const Embedding& seed,
                                       std::size_t limit) {
    for (const auto& [u, fu] : seed)
        if (!a.has_vertex(u) || !g.has_vertex(fu))
            throw std::invalid_argument("seed maps unknown vertices");
    if (!is_induced_embedding(a, g, seed))
        throw std::invalid_argument("seed is not a partial induced embedding");
    if (a.vertex_count() > g.vertex_count()) return {};

    EmbeddingSearch search{a, g, limit, {}, triangle_counts(a),
                           triangle_counts(g), seed, {}, {}};
    for (const auto& [u, fu] : seed) search.used.insert(fu);
    for (Vertex v : a.vertices())
        if (!seed.count(v)) search.order.push_back(v);
    search.run(0);
    return std::move(search.results);
}

std::optional<Embedding> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    auto found = find_embeddings(g, h, {}, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

}  // namespace bowtie
