#include "bowtie/universal.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bowtie/amalgam.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/io.hpp"
#include "bowtie/structure.hpp"

namespace bowtie {

std::vector<ExtensionPair> extension_pairs(std::size_t cap) {
    std::vector<ExtensionPair> pairs;
    for (std::size_t m = 4; m <= cap; ++m) {
        for (const auto& whole : enumerate_special(m)) {
            const auto& vs = whole.vertices();
            for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
                std::set<Vertex> subset;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (std::size_t{1} << i)) subset.insert(vs[i]);
                Graph part = whole.induced(subset);
                if (part.vertex_count() == whole.vertex_count()) continue;
                if (is_special(part)) pairs.push_back({whole, part});
            }
            pairs.push_back({whole, whole});  // trivially satisfiable, kept last
        }
    }
    return pairs;
}

namespace {

std::string fingerprint(const Embedding& e) {
    std::ostringstream out;
    for (const auto& [u, v] : e) out << u << ">" << v << ";";
    return out.str();
}

Graph start_graph() {
    return Graph({0, 1, 2, 3},
                 {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

bool embedding_extends(const ExtensionPair& pair, const Embedding& e,
                       const Graph& target) {
    return !find_embeddings(pair.whole, target, e, 1).empty();
}

// Amalgamate `whole` onto `current` over `part` along e.  The fresh ids
// for whole\part follow an order shuffled by the seeded RNG.
Graph amalgamate_step(const Graph& current, const ExtensionPair& pair,
                      const Embedding& e, std::mt19937_64& rng) {
    std::vector<Vertex> extras;
    std::set<Vertex> part_set(pair.part.vertices().begin(),
                              pair.part.vertices().end());
    for (Vertex v : pair.whole.vertices())
        if (!part_set.count(v)) extras.push_back(v);
    std::shuffle(extras.begin(), extras.end(), rng);

    std::map<Vertex, Vertex> relabel;
    for (Vertex v : pair.part.vertices()) relabel[v] = v;
    Vertex temp = pair.whole.max_vertex_id() + 1;
    for (Vertex v : extras) relabel[v] = temp++;

    std::vector<Vertex> vs;
    for (Vertex v : pair.whole.vertices()) vs.push_back(relabel.at(v));
    std::vector<VertexPair> es;
    for (const auto& [u, v] : pair.whole.edges())
        es.push_back(ordered(relabel.at(u), relabel.at(v)));
    Graph right(vs, es);

    Embedding into_right;
    for (Vertex v : pair.part.vertices()) into_right[v] = v;
    AmalgamSpec spec{pair.part, current, right, e, into_right};
    return free_amalgam(spec).graph;
}

}  // namespace

Approximant build_approximant(const ApproximantConfig& config) {
    if (config.cap < 4) throw PreconditionError("cap must be at least 4");

    auto pairs = extension_pairs(config.cap);
    std::mt19937_64 rng(config.seed);

    Approximant approx;
    approx.config = config;
    Graph current = start_graph();
    approx.snapshots.push_back(current);

    std::set<LedgerEntry> seen;
    std::size_t steps = 0;
    std::size_t start = 0;
    while (steps < config.budget) {
        bool progressed = false;
        for (std::size_t offset = 0; offset < pairs.size() && !progressed; ++offset) {
            std::size_t idx = (start + offset) % pairs.size();
            for (const auto& e : find_embeddings(pairs[idx].part, current)) {
                LedgerEntry entry{idx, fingerprint(e)};
                if (seen.count(entry)) continue;
                if (embedding_extends(pairs[idx], e, current)) {
                    seen.insert(entry);
                    approx.ledger.push_back(entry);
                    continue;
                }
                current = amalgamate_step(current, pairs[idx], e, rng);
                seen.insert(entry);
                approx.ledger.push_back(entry);
                approx.snapshots.push_back(current);
                ++steps;
                start = idx + 1;
                progressed = true;
                break;
            }
        }
        if (!progressed) break;
    }
    approx.final = current;
    return approx;
}

ExtensionReport check_extension_property(const Approximant& approx,
                                         std::size_t snapshot_index,
                                         std::size_t cap) {
    const Graph& snapshot = approx.snapshots.at(snapshot_index);
    auto pairs = extension_pairs(cap);
    ExtensionReport report;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        for (const auto& e : find_embeddings(pairs[idx].part, snapshot)) {
            ++report.checked;
            if (embedding_extends(pairs[idx], e, approx.final))
                ++report.extended;
            else
                report.unextended.push_back({idx, e});
        }
    }
    return report;
}

Witness homogenisability_witness(const WitnessConfig& cfg) {
    int k = cfg.k;
    if (k < 3)
        throw InvalidKError(
            "k must be at least 3: a length-3 base cycle closes into a "
            "triangle and creates a bowtie");

    Witness w;
    w.k = k;
    std::vector<Vertex> vertices;
    std::vector<VertexPair> edges;

    auto add_chimney = [&](Vertex a, Vertex b, Vertex t, Vertex s) {
        vertices.insert(vertices.end(), {a, b, t, s});
        edges.push_back(ordered(a, b));
        edges.push_back(ordered(a, t));
        edges.push_back(ordered(b, t));
        edges.push_back(ordered(a, s));
        edges.push_back(ordered(b, s));
    };

    auto name_at = [&](const std::string& stem, int i) { return stem + std::to_string(i); };
    for (int i = 1; i <= k + 1; ++i) {
        Vertex base = 4 * (i - 1);
        w.names[name_at("a", i)] = base;
        w.names[name_at("b", i)] = base + 1;
        w.names[name_at("t", i)] = base + 2;
        w.names[name_at("s", i)] = base + 3;
        add_chimney(base, base + 1, base + 2, base + 3);
    }
    Vertex hat = 4 * (k + 1);
    w.names["a_hat"] = hat;
    w.names["b_hat"] = hat + 1;
    w.names["t_hat"] = hat + 2;
    w.names["s_hat"] = hat + 3;
    add_chimney(hat, hat + 1, hat + 2, hat + 3);

    auto a = [&](int i) { return w.names.at(name_at("a", i)); };
    auto b = [&](int i) { return w.names.at(name_at("b", i)); };
    for (int i = 1; i <= k; ++i) {
        edges.push_back(ordered(a(i), a(i + 1)));
        edges.push_back(ordered(b(i), b(i + 1)));
    }
    edges.push_back(ordered(a(k + 1), a(1)));
    edges.push_back(ordered(b(k + 1), b(1)));
    edges.push_back(ordered(a(k), w.names.at("a_hat")));
    edges.push_back(ordered(w.names.at("a_hat"), b(1)));
    edges.push_back(ordered(b(k), w.names.at("b_hat")));
    edges.push_back(ordered(w.names.at("b_hat"), a(1)));

    w.graph = Graph(vertices, edges);
    if (!is_special(w.graph))
        throw InternalClaimError("witness graph is not special");
    return w;
}

bool WitnessReport::passed() const {
    if (!special_ok || !no_automorphism_ok) return false;
    for (const auto& check : subtuple_checks)
        if (!check.found) return false;
    return true;
}

WitnessReport verify_witness(const Witness& w) {
    int k = w.k;
    auto named = [&](const std::string& key) { return w.names.at(key); };
    auto chimney_vertices = [&](int i) {
        std::string suffix = std::to_string(i);
        return std::set<Vertex>{named("a" + suffix), named("b" + suffix),
                                named("t" + suffix), named("s" + suffix)};
    };

    WitnessReport report;
    report.special_ok = is_special(w.graph);

    for (int skip = 1; skip <= k; ++skip) {
        SubtupleCheck check;
        std::set<Vertex> source, target;
        Embedding seed;
        for (int i = 1; i <= k; ++i) {
            if (i == skip) continue;
            check.indices.push_back(i);
            auto cv = chimney_vertices(i);
            source.insert(cv.begin(), cv.end());
            target.insert(cv.begin(), cv.end());
            seed[named("t" + std::to_string(i))] = named("t" + std::to_string(i));
        }
        auto last = chimney_vertices(k + 1);
        source.insert(last.begin(), last.end());
        for (const char* stem : {"a_hat", "b_hat", "t_hat", "s_hat"})
            target.insert(named(stem));
        seed[named("t" + std::to_string(k + 1))] = named("t_hat");

        Graph s = w.graph.induced(source);
        Graph t = w.graph.induced(target);
        check.found = !find_embeddings(s, t, seed, 1).empty();
        report.subtuple_checks.push_back(std::move(check));
    }

    Embedding fix;
    for (int i = 1; i <= k; ++i) {
        std::string suffix = std::to_string(i);
        fix[named("a" + suffix)] = named("a" + suffix);
        fix[named("b" + suffix)] = named("b" + suffix);
        fix[named("t" + suffix)] = named("t" + suffix);
    }
    fix[named("t" + std::to_string(k + 1))] = named("t_hat");
    report.no_automorphism_ok = find_embeddings(w.graph, w.graph, fix, 1).empty();
    return report;
}

using nlohmann::json;

json approximant_to_json(const Approximant& a) {
    json j;
    j["config"] = {{"cap", a.config.cap},
                   {"budget", a.config.budget},
                   {"seed", a.config.seed}};
    j["snapshots"] = json::array();
    for (const auto& g : a.snapshots) j["snapshots"].push_back(graph_to_json(g));
    j["final"] = graph_to_json(a.final);
    j["ledger"] = json::array();
    for (const auto& entry : a.ledger)
        j["ledger"].push_back(
            {{"pair", entry.pair_index}, {"embedding", entry.embedding_fingerprint}});
    return j;
}

Approximant approximant_from_json(const json& j) {
    Approximant a;
    a.config.cap = j.at("config").at("cap").get<std::size_t>();
    a.config.budget = j.at("config").at("budget").get<std::size_t>();
    a.config.seed = j.at("config").at("seed").get<std::uint64_t>();
    for (const auto& g : j.at("snapshots")) a.snapshots.push_back(graph_from_json(g));
    a.final = graph_from_json(j.at("final"));
    for (const auto& entry : j.at("ledger"))
        a.ledger.push_back({entry.at("pair").get<std::size_t>(),
                            entry.at("embedding").get<std::string>()});
    return a;
}

json witness_to_json(const Witness& w) {
    json j;
    j["k"] = w.k;
    j["graph"] = graph_to_json(w.graph);
    j["names"] = json::object();
    for (const auto& [name, v] : w.names) j["names"][name] = v;
    return j;
}

Witness witness_from_json(const json& j) {
    Witness w;
    w.k = j.at("k").get<int>();
    w.graph = graph_from_json(j.at("graph"));
    for (const auto& [name, v] : j.at("names").items()) {
        if (!v.is_number_integer())
            throw std::invalid_argument("witness name must map to a vertex id");
        w.names[name] = v.get<Vertex>();
        if (!w.graph.has_vertex(w.names[name]))
            throw std::invalid_argument("witness names an unknown vertex");
    }
    return w;
}

json extension_report_to_json(const ExtensionReport& r) {
    json j;
    j["checked"] = r.checked;
    j["extended"] = r.extended;
    j["unextended"] = json::array();
    for (const auto& entry : r.unextended)
        j["unextended"].push_back({{"pair", entry.pair_index},
                                   {"embedding", embedding_to_json(entry.embedding)}});
    return j;
}

json witness_report_to_json(const WitnessReport& r) {
    json j;
    j["special"] = r.special_ok;
    j["subtuples"] = json::array();
    for (const auto& check : r.subtuple_checks)
        j["subtuples"].push_back({{"indices", check.indices}, {"found", check.found}});
    j["no_forbidden_automorphism"] = r.no_automorphism_ok;
    j["passed"] = r.passed();
    return j;
}

}  // namespace bowtie
