#include "bowtie/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bowtie/amalgam.hpp"
#include "bowtie/closure.hpp"
#include "bowtie/eppa.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/graph.hpp"
#include "bowtie/io.hpp"
#include "bowtie/structure.hpp"
#include "bowtie/universal.hpp"

namespace bowtie::cli {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

Embedding load_map(const std::string& path) {
    return embedding_from_json(load_json(path));
}

OneSystem load_system(const std::string& path) {
    json j = load_json(path);
    OneSystem s{graph_from_json(j.at("graph")),
                embedding_from_json(j.at("automorphism"))};
    validate(s);
    return s;
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot write file: " + out_path);
    file << text;
}

void emit_json(const json& j, const std::string& out_path, std::ostream& out) {
    emit(j.dump(2) + "\n", out_path, out);
}

std::set<Vertex> parse_vertex_set(const std::string& csv) {
    std::set<Vertex> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size() || v < 0)
            throw std::invalid_argument("bad vertex id in --set: " + item);
        out.insert(v);
    }
    return out;
}

void check_thread_env() {
    const char* value = std::getenv("BOWTIE_LAB_THREADS");
    if (!value) return;
    std::string s(value);
    std::size_t pos = 0;
    int n = -1;
    try {
        n = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || n < 0)
        throw std::invalid_argument("BOWTIE_LAB_THREADS must be a non-negative integer");
    // all operations currently run on one thread, which respects any cap
}

json amalgam_result_json(const AmalgamResult& r) {
    return {{"graph", graph_to_json(r.graph)},
            {"embed_left", embedding_to_json(r.from_left)},
            {"embed_right", embedding_to_json(r.from_right)}};
}

struct Options {
    std::string graph_path, second_path, third_path;
    std::string map_path, map_left_path, map_right_path;
    std::string out_path, dot_path, set_csv, format = "json";
    std::size_t n = 0, cap = 4, budget = 1, snapshot = 0;
    std::uint64_t seed = 0;
    int k = 3;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"constructive combinatorics of bowtie-free graphs"};
    app.require_subcommand(1);
    Options opt;

    auto* check = app.add_subcommand("check", "bowtie and specialness check");
    check->add_option("graph", opt.graph_path)->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "block decomposition");
    decompose_cmd->add_option("graph", opt.graph_path)->required();

    auto* specialize_cmd =
        app.add_subcommand("specialize", "special supergraph of a bowtie-free graph");
    specialize_cmd->add_option("graph", opt.graph_path)->required();
    specialize_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "dot"}));

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "special graphs on n vertices up to isomorphism");
    enumerate_cmd->add_option("--n", opt.n)->required();

    auto* amalgamate_cmd = app.add_subcommand("amalgamate", "verified free amalgam");
    amalgamate_cmd->add_option("base", opt.graph_path)->required();
    amalgamate_cmd->add_option("left", opt.second_path)->required();
    amalgamate_cmd->add_option("right", opt.third_path)->required();
    amalgamate_cmd->add_option("--map-left", opt.map_left_path)->required();
    amalgamate_cmd->add_option("--map-right", opt.map_right_path)->required();

    auto* union_cmd = app.add_subcommand("union", "disjoint union");
    union_cmd->add_option("left", opt.graph_path)->required();
    union_cmd->add_option("right", opt.second_path)->required();

    auto* special_edges_cmd =
        app.add_subcommand("special-edges", "edges lying in two or more triangles");
    special_edges_cmd->add_option("graph", opt.graph_path)->required();

    auto* acl_cmd = app.add_subcommand("acl", "algebraic closure of a vertex set");
    acl_cmd->add_option("graph", opt.graph_path)->required();
    acl_cmd->add_option("--set", opt.set_csv)->required();

    auto* necklace_cmd =
        app.add_subcommand("necklace", "extend a partial automorphism to a total one");
    necklace_cmd->add_option("graph", opt.graph_path)->required();
    necklace_cmd->add_option("--map", opt.map_path)->required();

    auto* close_cmd = app.add_subcommand(
        "close-system", "extend a partial map to special domain and range");
    close_cmd->add_option("graph", opt.graph_path)->required();
    close_cmd->add_option("--map", opt.map_path)->required();

    auto* systems_cmd =
        app.add_subcommand("amalgamate-systems", "free amalgam of 1-systems");
    systems_cmd->add_option("base", opt.graph_path)->required();
    systems_cmd->add_option("left", opt.second_path)->required();
    systems_cmd->add_option("right", opt.third_path)->required();
    systems_cmd->add_option("--map-left", opt.map_left_path)->required();
    systems_cmd->add_option("--map-right", opt.map_right_path)->required();

    auto* build_cmd = app.add_subcommand("build", "finite approximant chain");
    build_cmd->add_option("--cap", opt.cap);
    build_cmd->add_option("--budget", opt.budget);
    build_cmd->add_option("--seed", opt.seed);
    build_cmd->add_option("--out", opt.out_path);

    auto* certify_cmd =
        app.add_subcommand("certify", "extension-property report for a snapshot");
    certify_cmd->add_option("approximant", opt.graph_path)->required();
    certify_cmd->add_option("--snapshot", opt.snapshot);
    certify_cmd->add_option("--cap", opt.cap);

    auto* witness_cmd =
        app.add_subcommand("witness", "non-finite-homogenisability witness graph");
    witness_cmd->add_option("--k", opt.k);
    witness_cmd->add_option("--out", opt.out_path);
    witness_cmd->add_option("--dot", opt.dot_path);

    auto* verify_cmd = app.add_subcommand("verify-witness", "verify a witness file");
    verify_cmd->add_option("witness", opt.graph_path)->required();

    auto* dot_cmd = app.add_subcommand("export-dot", "DOT emission");
    dot_cmd->add_option("graph", opt.graph_path)->required();

    for (auto* cmd : {check, decompose_cmd, enumerate_cmd, amalgamate_cmd,
                      union_cmd, special_edges_cmd, acl_cmd, necklace_cmd,
                      close_cmd, systems_cmd, certify_cmd, verify_cmd, dot_cmd,
                      specialize_cmd})
        cmd->add_option("--out", opt.out_path);

    std::vector<const char*> argv{"bowtie"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        check_thread_env();

        if (app.got_subcommand(check)) {
            Graph g = load_graph(opt.graph_path);
            if (auto w = find_bowtie(g)) {
                emit_json({{"bowtie_free", false},
                           {"witness", std::vector<Vertex>(w->begin(), w->end())}},
                          opt.out_path, out);
                return 1;
            }
            emit_json({{"bowtie_free", true}, {"special", is_special(g)}},
                      opt.out_path, out);
        } else if (app.got_subcommand(decompose_cmd)) {
            Graph g = load_graph(opt.graph_path);
            emit_json(decomposition_to_json(decompose(g)), opt.out_path, out);
        } else if (app.got_subcommand(specialize_cmd)) {
            auto result = specialize(load_graph(opt.graph_path));
            if (opt.format == "dot")
                emit(decomposition_dot(result.graph), opt.out_path, out);
            else
                emit_json({{"graph", graph_to_json(result.graph)},
                           {"embedding", embedding_to_json(result.inclusion)}},
                          opt.out_path, out);
        } else if (app.got_subcommand(enumerate_cmd)) {
            auto graphs = enumerate_special(opt.n);
            json j;
            j["count"] = graphs.size();
            j["graphs"] = json::array();
            for (const auto& g : graphs) j["graphs"].push_back(graph_to_json(g));
            emit_json(j, opt.out_path, out);
        } else if (app.got_subcommand(amalgamate_cmd)) {
            AmalgamSpec spec{load_graph(opt.graph_path), load_graph(opt.second_path),
                             load_graph(opt.third_path), load_map(opt.map_left_path),
                             load_map(opt.map_right_path)};
            auto result = check_special_amalgam(spec);
            if (const auto* ok = std::get_if<AmalgamResult>(&result)) {
                emit_json(amalgam_result_json(*ok), opt.out_path, out);
            } else {
                const auto& report = std::get<AmalgamReport>(result);
                json j = amalgam_result_json(report.amalgam);
                j["violation"] = report.violations.front().condition;
                j["witness"] = report.violations.front().witness;
                j["violations"] = json::array();
                for (const auto& v : report.violations)
                    j["violations"].push_back(
                        {{"violation", v.condition}, {"witness", v.witness}});
                emit_json(j, opt.out_path, out);
                return 1;
            }
        } else if (app.got_subcommand(union_cmd)) {
            auto result =
                disjoint_union(load_graph(opt.graph_path), load_graph(opt.second_path));
            emit_json(amalgam_result_json(result), opt.out_path, out);
        } else if (app.got_subcommand(special_edges_cmd)) {
            auto edges = special_edges(load_graph(opt.graph_path));
            json j;
            j["special_edges"] = json::array();
            for (const auto& [u, v] : edges) j["special_edges"].push_back({u, v});
            emit_json(j, opt.out_path, out);
        } else if (app.got_subcommand(acl_cmd)) {
            Graph g = load_graph(opt.graph_path);
            emit_json(closure_to_json(acl(g, parse_vertex_set(opt.set_csv))),
                      opt.out_path, out);
        } else if (app.got_subcommand(necklace_cmd)) {
            PartialAutomorphism p(load_graph(opt.graph_path), load_map(opt.map_path));
            auto result = necklace(p);
            emit_json({{"graph", graph_to_json(result.extended)},
                       {"automorphism", embedding_to_json(result.automorphism)},
                       {"n", result.order_n},
                       {"inclusion", embedding_to_json(result.inclusion)}},
                      opt.out_path, out);
        } else if (app.got_subcommand(close_cmd)) {
            PartialAutomorphism p(load_graph(opt.graph_path), load_map(opt.map_path));
            auto closed = close_system(p);
            emit_json({{"map", embedding_to_json(closed.map())},
                       {"domain", closed.domain()},
                       {"range", closed.range()}},
                      opt.out_path, out);
        } else if (app.got_subcommand(systems_cmd)) {
            auto result = amalgamate_1systems(
                load_system(opt.graph_path), load_system(opt.second_path),
                load_system(opt.third_path), load_map(opt.map_left_path),
                load_map(opt.map_right_path));
            emit_json({{"graph", graph_to_json(result.structure)},
                       {"automorphism", embedding_to_json(result.automorphism)}},
                      opt.out_path, out);
        } else if (app.got_subcommand(build_cmd)) {
            auto approx = build_approximant({opt.cap, opt.budget, opt.seed});
            emit_json(approximant_to_json(approx), opt.out_path, out);
        } else if (app.got_subcommand(certify_cmd)) {
            auto approx = approximant_from_json(load_json(opt.graph_path));
            auto report = check_extension_property(approx, opt.snapshot, opt.cap);
            emit_json(extension_report_to_json(report), opt.out_path, out);
        } else if (app.got_subcommand(witness_cmd)) {
            auto w = homogenisability_witness({opt.k});
            emit_json(witness_to_json(w), opt.out_path, out);
            if (!opt.dot_path.empty())
                emit(decomposition_dot(w.graph), opt.dot_path, out);
        } else if (app.got_subcommand(verify_cmd)) {
            auto w = witness_from_json(load_json(opt.graph_path));
            emit_json(witness_report_to_json(verify_witness(w)), opt.out_path, out);
        } else if (app.got_subcommand(dot_cmd)) {
            Graph g = load_graph(opt.graph_path);
            if (is_special(g))
                emit(decomposition_dot(g), opt.out_path, out);
            else
                emit(graph_to_dot(g), opt.out_path, out);
        }
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalClaimError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bowtie::cli
