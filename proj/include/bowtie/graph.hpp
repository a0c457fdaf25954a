#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace bowtie {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;  // normalized: first < second

inline VertexPair ordered(Vertex u, Vertex v) {
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Finite simple undirected graph over non-negative integer vertex ids.
// Immutable value type: operations that "modify" a graph return a new one.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on self-loops, duplicate vertices, or
    // edges whose endpoints are not listed vertices.
    Graph(std::vector<Vertex> vertices, const std::vector<VertexPair>& edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::set<VertexPair>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(Vertex v) const { return adjacency_.count(v) != 0; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::set<Vertex>& neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    // Largest vertex id, or -1 for the empty graph; fresh ids start above it.
    Vertex max_vertex_id() const;

    // Induced subgraph on the given subset (ignoring ids not present).
    Graph induced(const std::set<Vertex>& subset) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Vertex> vertices_;  // sorted ascending
    std::set<VertexPair> edges_;
    std::map<Vertex, std::set<Vertex>> adjacency_;
};

// Three distinct vertex ids, stored sorted; all three pairs are edges of
// the host graph.
struct Triangle {
    std::array<Vertex, 3> v;
    bool operator==(const Triangle&) const = default;
    auto operator<=>(const Triangle&) const = default;
};

Triangle make_triangle(Vertex a, Vertex b, Vertex c);

// All vertex triples inducing K3, sorted.
std::vector<Triangle> triangles_of(const Graph& g);

// Two triangles sharing exactly one vertex, i.e. a (not necessarily
// induced) bowtie subgraph.
bool contains_bowtie(const Graph& g);

// Witness quintuple {a, b, c, u, v} with triangles abc and cuv sharing the
// single vertex c; c is stored in the middle position.
std::optional<std::array<Vertex, 5>> find_bowtie(const Graph& g);

// Injective vertex map preserving edges and non-edges (an isomorphism of
// the source onto an induced subgraph of the target).
using Embedding = std::map<Vertex, Vertex>;

bool is_induced_embedding(const Graph& source, const Graph& target,
                          const Embedding& e);

// All extensions of `seed` to full induced embeddings of `a` into `g`, in
// a deterministic order (source vertices ascending, candidates ascending).
// `limit` = 0 means all; otherwise stop after that many.
// Throws std::invalid_argument if the seed is not a partial induced
// embedding.
std::vector<Embedding> find_embeddings(const Graph& a, const Graph& g,
                                       const Embedding& seed = {},
                                       std::size_t limit = 0);

// A bijective induced embedding if one exists; deterministic witness.
std::optional<Embedding> are_isomorphic(const Graph& g, const Graph& h);

}  // namespace bowtie
