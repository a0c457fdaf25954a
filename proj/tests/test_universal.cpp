#include <doctest.h>

#include <set>

#include "bowtie/errors.hpp"
#include "bowtie/io.hpp"
#include "bowtie/structure.hpp"
#include "bowtie/universal.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bowtie;
using namespace bowtie::testing;

TEST_CASE("extension_pairs at cap 4") {
    auto pairs = extension_pairs(4);
    // two 4-vertex special graphs, each with the empty part and itself
    CHECK(pairs.size() == 4);
    for (const auto& p : pairs) {
        CHECK(is_special(p.whole));
        CHECK(is_special(p.part));
        std::set<Vertex> sub(p.part.vertices().begin(), p.part.vertices().end());
        CHECK(p.whole.induced(sub) == p.part);
    }
}

TEST_CASE("build_approximant with zero budget returns the K4 start graph") {
    auto a = build_approximant({4, 0, 0});
    CHECK(a.final == complete(4));
    CHECK(a.snapshots.size() == 1);
    CHECK(a.ledger.empty());
}

TEST_CASE("build_approximant rejects caps below the smallest special graph") {
    CHECK_THROWS_AS(build_approximant({3, 1, 0}), PreconditionError);
}

TEST_CASE("approximant chain is monotone and special throughout") {
    auto a = build_approximant({4, 5, 11});
    CHECK(a.snapshots.front() == complete(4));
    CHECK(a.snapshots.back() == a.final);
    for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
        CHECK(is_special(a.snapshots[i]));
        CHECK_FALSE(contains_bowtie(a.snapshots[i]));
        if (i + 1 < a.snapshots.size()) {
            std::set<Vertex> prev(a.snapshots[i].vertices().begin(),
                                  a.snapshots[i].vertices().end());
            CHECK(a.snapshots[i + 1].induced(prev) == a.snapshots[i]);
        }
    }
}

TEST_CASE("every 4-vertex special graph embeds into a cap-4 approximant") {
    auto a = build_approximant({4, 50, 3});
    for (const auto& g : enumerate_special(4))
        CHECK_FALSE(find_embeddings(g, a.final, {}, 1).empty());
}

TEST_CASE("check_extension_property certifies snapshot 0 at cap 4") {
    auto a = build_approximant({4, 50, 3});
    auto report = check_extension_property(a, 0, 4);
    CHECK(report.checked > 0);
    CHECK(report.extended == report.checked);
    CHECK(report.unextended.empty());
}

TEST_CASE("identical configs reproduce identical approximants") {
    ApproximantConfig cfg{4, 20, 42};
    auto a = build_approximant(cfg);
    auto b = build_approximant(cfg);
    CHECK(approximant_to_json(a).dump() == approximant_to_json(b).dump());

    auto round = approximant_from_json(approximant_to_json(a));
    CHECK(approximant_to_json(round).dump() == approximant_to_json(a).dump());
}

TEST_CASE("witness construction sizes and names") {
    CHECK_THROWS_AS(homogenisability_witness({2}), InvalidKError);

    auto w = homogenisability_witness({3});
    CHECK(w.graph.vertex_count() == 20);
    CHECK(w.graph.edge_count() == 37);
    CHECK(is_special(w.graph));
    CHECK_FALSE(oracle_contains_bowtie(w.graph));
    CHECK(w.names.size() == 20);
    std::set<Vertex> named;
    for (const auto& [name, v] : w.names) {
        CHECK(w.graph.has_vertex(v));
        CHECK(named.insert(v).second);
    }

    auto w4 = homogenisability_witness({4});
    CHECK(w4.graph.vertex_count() == 24);
    CHECK(is_special(w4.graph));
}

TEST_CASE("a length-3 base cycle would close into a triangle") {
    // demonstrate why k = 2 is rejected: the base cycle a1 a2 a3 closes
    // into a triangle, which shares exactly the vertex a1 with the first
    // chimney triangle a1 b1 t1 — a bowtie
    Graph g({0, 1, 2, 3, 4},
            {{0, 1}, {1, 2}, {0, 2},    // base triangle a1 a2 a3
             {0, 3}, {0, 4}, {3, 4}});  // chimney triangle a1 b1 t1
    CHECK(contains_bowtie(g));
    CHECK(oracle_contains_bowtie(g));
}

TEST_CASE("verify_witness passes for k = 3 and k = 4") {
    for (int k : {3, 4}) {
        auto w = homogenisability_witness({k});
        auto report = verify_witness(w);
        CHECK(report.special_ok);
        CHECK(report.subtuple_checks.size() == static_cast<std::size_t>(k));
        for (const auto& check : report.subtuple_checks) CHECK(check.found);
        CHECK(report.no_automorphism_ok);
        CHECK(report.passed());
    }
}

TEST_CASE("verify_witness detects a broken witness") {
    auto w = homogenisability_witness({3});
    // drop the hat splice edges; the subtuple swaps lose their target
    std::vector<VertexPair> es;
    Vertex a1 = w.names.at("a1"), ak = w.names.at("a3");
    Vertex b1 = w.names.at("b1"), bk = w.names.at("b3");
    Vertex ah = w.names.at("a_hat"), bh = w.names.at("b_hat");
    std::set<VertexPair> dropped{ordered(ak, ah), ordered(ah, b1),
                                 ordered(bk, bh), ordered(bh, a1)};
    for (const auto& e : w.graph.edges())
        if (!dropped.count(e)) es.push_back(e);
    Witness broken = w;
    broken.graph = Graph(w.graph.vertices(), es);
    auto report = verify_witness(broken);
    bool any_failed = false;
    for (const auto& check : report.subtuple_checks)
        if (!check.found) any_failed = true;
    CHECK(any_failed);
    CHECK_FALSE(report.passed());
}

TEST_CASE("witness serialization round-trips") {
    auto w = homogenisability_witness({3});
    auto j = witness_to_json(w);
    auto round = witness_from_json(j);
    CHECK(round.graph == w.graph);
    CHECK(round.names == w.names);
    CHECK(round.k == w.k);

    auto rj = witness_report_to_json(verify_witness(w));
    CHECK(rj.at("passed") == true);
    CHECK(rj.at("subtuples").size() == 3);
}
