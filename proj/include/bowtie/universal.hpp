#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bowtie/graph.hpp"

namespace bowtie {

// A requirement template: `part` is an induced subgraph of `whole`
// (sharing vertex ids), both special.
struct ExtensionPair {
    Graph whole;
    Graph part;
};

// Deterministic enumeration over enumerate_special(m) for 4 <= m <= cap
// and every vertex subset of each graph inducing a special subgraph.
std::vector<ExtensionPair> extension_pairs(std::size_t cap);

struct ApproximantConfig {
    std::size_t cap = 4;     // max |B| per requirement
    std::size_t budget = 1;  // max amalgamation steps
    std::uint64_t seed = 0;
};

struct LedgerEntry {
    std::size_t pair_index;
    std::string embedding_fingerprint;
    bool operator==(const LedgerEntry&) const = default;
    auto operator<=>(const LedgerEntry&) const = default;
};

// A finite prefix of the chain whose union realizes the universal
// bowtie-free graph: every snapshot is special and induced in the next.
struct Approximant {
    ApproximantConfig config;
    std::vector<Graph> snapshots;  // snapshot 0 is the start graph K4
    Graph final;
    std::vector<LedgerEntry> ledger;
};

// Fair chain construction: starting from K4, repeatedly satisfy the oldest
// unsatisfied requirement (round-robin over pairs, FIFO over embeddings of
// the part into the current graph) by free amalgamation with the whole.
// Stops at the budget or when no requirement is unsatisfied.
Approximant build_approximant(const ApproximantConfig& config);

struct UnextendedEntry {
    std::size_t pair_index;
    Embedding embedding;
};

struct ExtensionReport {
    std::size_t checked = 0;
    std::size_t extended = 0;
    std::vector<UnextendedEntry> unextended;
};

// For every pair with |whole| <= cap and every embedding of the part into
// the chosen snapshot: does it extend to an embedding of the whole into
// the final graph?
ExtensionReport check_extension_property(const Approximant& approx,
                                         std::size_t snapshot_index,
                                         std::size_t cap);

struct WitnessConfig {
    int k = 3;  // must be >= 3
};

// The non-finite-homogenisability witness: k+1 height-2 chimneys with both
// base families closed into (k+1)-cycles, plus one extra "hat" chimney
// spliced between positions k and 1.
struct Witness {
    Graph graph;
    int k = 0;
    std::map<std::string, Vertex> names;  // a1..b1..t1..s1.., a_hat, ...
};

Witness homogenisability_witness(const WitnessConfig& cfg);  // InvalidKError if k < 3

struct SubtupleCheck {
    std::vector<int> indices;  // the (k-1)-subset I of {1..k}
    bool found = false;
};

struct WitnessReport {
    bool special_ok = false;
    std::vector<SubtupleCheck> subtuple_checks;
    bool no_automorphism_ok = false;
    bool passed() const;
};

// (a) the witness graph is special; (b) each (k-1)-subset admits a partial
// isomorphism swapping the last chimney for the hat chimney while fixing
// the chosen tips; (c) exhaustive search finds no automorphism fixing the
// first k bases and tips pointwise and sending t_{k+1} to the hat tip.
WitnessReport verify_witness(const Witness& w);

nlohmann::json approximant_to_json(const Approximant& a);
Approximant approximant_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
nlohmann::json extension_report_to_json(const ExtensionReport& r);
nlohmann::json witness_report_to_json(const WitnessReport& r);

}  // namespace bowtie
