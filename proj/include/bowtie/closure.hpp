#pragma once

#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "bowtie/graph.hpp"

namespace bowtie {

// Edges lying in at least two triangles of a special graph: exactly the
// chimney base edges together with all K4 edges.  Throws NotSpecialError
// or ContainsBowtieError.
std::set<VertexPair> special_edges(const Graph& g);

// Why a vertex belongs to the closure.
struct ClosureEntry {
    Vertex vertex;
    bool in_input = false;
    // endpoint of this special edge, which lies in this triangle meeting A
    std::optional<VertexPair> via_edge;
    std::optional<Triangle> via_triangle;
};

struct ClosureResult {
    std::set<Vertex> input;
    std::set<Vertex> closed;
    std::vector<ClosureEntry> provenance;  // one entry per closed vertex
};

// A together with the endpoints of every special edge lying in a triangle
// meeting A, evaluated inside the given finite special graph.
ClosureResult acl(const Graph& g, const std::set<Vertex>& a);

nlohmann::json closure_to_json(const ClosureResult& r);

}  // namespace bowtie
