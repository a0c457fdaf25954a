#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bowtie/graph.hpp"

namespace bowtie {

// Free amalgamation diagram A -> B1, A -> B2 with induced embeddings.
struct AmalgamSpec {
    Graph base;   // A
    Graph left;   // B1
    Graph right;  // B2
    Embedding into_left;
    Embedding into_right;
};

// Throws std::invalid_argument unless both maps are induced embeddings of
// base covering all of its vertices.
void validate(const AmalgamSpec& spec);

struct AmalgamResult {
    Graph graph;  // keeps left's ids; right\A gets fresh ids above the max
    Embedding from_left;
    Embedding from_right;
};

// B1 and B2 with the A-images identified and no edges between B1\A and
// B2\A.  Raw construction: never validates specialness, so it can
// reproduce the amalgamation failure of the unrestricted bowtie-free
// class.
AmalgamResult free_amalgam(const AmalgamSpec& spec);

struct AmalgamViolation {
    std::string condition;         // e.g. "base not special"
    std::vector<Vertex> witness;   // bowtie quintuple or offending vertex
};

struct AmalgamReport {
    std::vector<AmalgamViolation> violations;
    AmalgamResult amalgam;  // the raw construction, always available
};

// If base, left, right are all special, asserts the amalgam is special and
// returns it; otherwise returns a report naming every violated condition,
// with the five bowtie vertices when one exists in the amalgam.
std::variant<AmalgamResult, AmalgamReport> check_special_amalgam(
    const AmalgamSpec& spec);

// Vertex-disjoint union; h's vertices get fresh ids above g's maximum,
// assigned in ascending order of their original ids.
AmalgamResult disjoint_union(const Graph& g, const Graph& h);

}  // namespace bowtie
