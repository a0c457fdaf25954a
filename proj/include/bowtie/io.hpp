#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "bowtie/graph.hpp"

namespace bowtie {

// Canonical graph JSON: {"vertices": [...ascending...],
// "edges": [[u, v], ...]} with u < v, edges sorted.  Parsing rejects
// unknown keys, self-loops, unsorted pairs, and unlisted endpoints so that
// the round-trip is bit-exact.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Undirected DOT, one edge statement per edge sorted by (u, v).  Edges in
// `dashed` are rendered with style=dashed.
std::string graph_to_dot(const Graph& g,
                         const std::set<VertexPair>& dashed = {});

// Vertex maps (embeddings, partial automorphisms) serialize as a JSON
// object of decimal-string domain id to integer range id.
nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

}  // namespace bowtie
