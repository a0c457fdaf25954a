#pragma once

#include <cstddef>
#include <set>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bowtie/graph.hpp"

namespace bowtie {

// Two or more triangles over one common edge; the base pair is the common
// edge, each tip is adjacent to both base vertices, tips are pairwise
// non-adjacent.
struct Chimney {
    VertexPair base;
    std::set<Vertex> tips;  // size >= 2; height = tips.size()
    bool operator==(const Chimney&) const = default;
};

struct K4Block {
    std::array<Vertex, 4> vertices;  // sorted
    bool operator==(const K4Block&) const = default;
};

using Block = std::variant<K4Block, Chimney>;

std::set<Vertex> block_vertices(const Block& b);

// Partition of a special graph into K4 blocks and maximal chimneys, plus
// the edges lying in no triangle.
struct Decomposition {
    std::vector<Block> blocks;
    std::vector<VertexPair> cross_edges;
};

enum class VertexRole { InK4, Base, Tip };

// True iff g is bowtie-free and every vertex lies in a K4 or a chimney of g.
bool is_special(const Graph& g);

// Unique decomposition of a special graph.  Throws ContainsBowtieError or
// NotSpecialError otherwise.
Decomposition decompose(const Graph& g);

VertexRole classify_vertex(const Graph& g, Vertex v);

// Special supergraph of a bowtie-free graph plus the inclusion embedding.
// Bad vertices are processed in ascending id order; a vertex in no
// triangle gets a fresh K4, otherwise its lexicographically least triangle
// is completed to a K4.  Throws ContainsBowtieError.
struct SpecializeResult {
    Graph graph;
    Embedding inclusion;
};
SpecializeResult specialize(const Graph& g);

// All special bowtie-free graphs on exactly n vertices, one per
// isomorphism class, built block-multiset first and cross-edge sets
// second, in a deterministic order.
std::vector<Graph> enumerate_special(std::size_t n);

nlohmann::json decomposition_to_json(const Decomposition& d);

// DOT with cross edges dashed; throws if g is not special.
std::string decomposition_dot(const Graph& g);

}  // namespace bowtie
