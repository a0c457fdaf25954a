#pragma once

#include <set>
#include <vector>

#include "bowtie/graph.hpp"

namespace bowtie {

// Injective vertex map between induced subgraphs of a host graph,
// preserving edges and non-edges.
class PartialAutomorphism {
public:
    // Throws std::invalid_argument unless map is an induced isomorphism
    // between induced subgraphs of host.
    PartialAutomorphism(Graph host, Embedding map);

    const Graph& host() const { return host_; }
    const Embedding& map() const { return map_; }
    std::set<Vertex> domain() const;
    std::set<Vertex> range() const;
    bool is_total() const { return map_.size() == host_.vertex_count(); }

private:
    Graph host_;
    Embedding map_;
};

// Orbit decomposition: a cycle is complete iff iterating the map from a
// vertex returns to it without leaving the domain; chains are maximal
// non-returning orbit sequences.  Chain length counts vertices.
struct CycleProfile {
    std::vector<std::vector<Vertex>> complete_cycles;
    std::vector<std::vector<Vertex>> partial_chains;
};

CycleProfile cycle_profile(const PartialAutomorphism& p);

// Least n >= 1 divisible by every complete-cycle length and strictly
// greater than every partial-chain length; 1 for the empty profile.
int necklace_order(const CycleProfile& profile);

// Extend p so that its domain and range induce special subgraphs, by
// backtracking over block-respecting extensions to the closures of the
// domain and range (padding chimneys to base plus two tips).  The host is
// unchanged.  Throws NotExtendableError when no extension exists,
// PreconditionError if the host is not special.
PartialAutomorphism close_system(const PartialAutomorphism& p);

struct NecklaceResult {
    Graph extended;                        // K
    std::map<Vertex, Vertex> automorphism; // f, total on K
    Embedding inclusion;                   // host into K
    int order_n;                           // bead count per half
};

// Necklace construction: beads are copies of the host glued range-to-
// domain; two mirrored halves closed into a ring give a special graph K
// with a total automorphism extending p.  Proof-claim checks (the
// complete-cycle characterisation of the half-overlap and specialness of
// its union) run on every call and raise InternalClaimError on failure.
// Requires host, domain, and range special (PreconditionError otherwise).
NecklaceResult necklace(const PartialAutomorphism& p);

// Finite structure together with one total automorphism.
struct OneSystem {
    Graph structure;
    std::map<Vertex, Vertex> automorphism;
};

void validate(const OneSystem& s);  // throws std::invalid_argument

// Free amalgam of left and right over base with automorphism h1 ∪ h2.
// With an empty base this degenerates to the disjoint union, giving joint
// embedding.  Requires all structures special and both embeddings
// commuting with the automorphisms (PreconditionError otherwise).
OneSystem amalgamate_1systems(const OneSystem& base, const OneSystem& left,
                              const OneSystem& right,
                              const Embedding& into_left,
                              const Embedding& into_right);

}  // namespace bowtie
