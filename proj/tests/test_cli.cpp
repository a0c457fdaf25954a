#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bowtie/cli.hpp"
#include "bowtie/io.hpp"
#include "fixtures.hpp"

using namespace bowtie;
using namespace bowtie::testing;
using nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const json& j) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << j.dump();
    return path;
}

std::filesystem::path write_graph(const std::string& name, const Graph& g) {
    return write_temp(name, graph_to_json(g));
}

}  // namespace

TEST_CASE("graph JSON round-trips and rejects malformed input") {
    for (const Graph& g : {Graph(), complete(4), chimney_graph(3), two_k4_cross()}) {
        auto j = graph_to_json(g);
        CHECK(graph_from_json(j) == g);
        CHECK(graph_to_json(graph_from_json(j)).dump() == j.dump());
    }
    CHECK_THROWS(graph_from_json(json{{"vertices", {0, 1}},
                                      {"edges", {{1, 0}}}}));  // u >= v
    CHECK_THROWS(graph_from_json(json{{"vertices", {0, 1}},
                                      {"edges", json::array()},
                                      {"extra", 1}}));  // unknown key
    CHECK_THROWS(graph_from_json(json{{"vertices", {0}},
                                      {"edges", {{0, 1}}}}));  // unknown endpoint
}

TEST_CASE("embedding JSON round-trips") {
    Embedding e{{0, 4}, {7, 2}};
    CHECK(embedding_from_json(embedding_to_json(e)) == e);
    CHECK_THROWS(embedding_from_json(json{{"x", 1}}));
}

TEST_CASE("check reports a bowtie witness with exit 1") {
    auto path = write_graph("cli_k5.json", complete(5));
    auto r = run_cli({"check", path.string()});
    CHECK(r.status == 1);
    auto j = json::parse(r.out);
    CHECK(j.at("bowtie_free") == false);
    CHECK(j.at("witness").size() == 5);
}

TEST_CASE("check reports specialness on clean graphs") {
    auto r = run_cli({"check", write_graph("cli_k4.json", complete(4)).string()});
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("bowtie_free") == true);
    CHECK(j.at("special") == true);

    auto r2 = run_cli({"check", write_graph("cli_k3.json", complete(3)).string()});
    CHECK(r2.status == 0);
    CHECK(json::parse(r2.out).at("special") == false);
}

TEST_CASE("specialize emits a K4 for the triangle") {
    auto r = run_cli({"specialize", write_graph("cli_tri.json", complete(3)).string()});
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(graph_from_json(j.at("graph")) == complete(4));
}

TEST_CASE("decompose fails cleanly on non-special input") {
    auto r = run_cli({"decompose", write_graph("cli_c5.json", cycle(5)).string()});
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli({"no-such-command"}).status == 2);
    CHECK(run_cli({"check"}).status == 2);  // missing argument
    CHECK(run_cli({"check", "/nonexistent/graph.json"}).status == 2);
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("enumerate matches the library") {
    auto r = run_cli({"enumerate", "--n", "4"});
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("count") == 2);
    CHECK(j.at("graphs").size() == 2);
}

TEST_CASE("amalgamate verifies the special case and reports failures") {
    auto base = write_graph("cli_base.json", chimney_graph(2));
    auto side = write_graph("cli_side.json", chimney_graph(3));
    json id{{"0", 0}, {"1", 1}, {"2", 2}, {"3", 3}};
    auto map = write_temp("cli_id.json", id);
    auto ok = run_cli({"amalgamate", base.string(), side.string(), side.string(),
                       "--map-left", map.string(), "--map-right", map.string()});
    CHECK(ok.status == 0);
    CHECK(json::parse(ok.out).contains("graph"));

    // two triangles over a shared vertex: violation report, exit 1
    auto point = write_graph("cli_pt.json", Graph({0}, {}));
    auto tri = write_graph("cli_tri2.json", complete(3));
    auto pt_map = write_temp("cli_pt_map.json", json{{"0", 0}});
    auto bad = run_cli({"amalgamate", point.string(), tri.string(), tri.string(),
                        "--map-left", pt_map.string(), "--map-right", pt_map.string()});
    CHECK(bad.status == 1);
    auto j = json::parse(bad.out);
    CHECK(j.contains("violation"));
    CHECK(j.at("violations").size() >= 3);
}

TEST_CASE("acl subcommand prints closure with provenance") {
    auto path = write_graph("cli_ch.json", chimney_graph(2));
    auto r = run_cli({"acl", path.string(), "--set", "2"});
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("closed") == (std::vector<int>{0, 1, 2}));

    CHECK(run_cli({"acl", path.string(), "--set", "2x"}).status == 2);
}

TEST_CASE("necklace subcommand emits graph, automorphism, n, inclusion") {
    Graph g = complete(4);
    std::vector<Vertex> vs = g.vertices();
    std::vector<VertexPair> es(g.edges().begin(), g.edges().end());
    Graph other = complete(4, 4);
    for (const auto& e : other.edges()) es.push_back(e);
    for (Vertex v : other.vertices()) vs.push_back(v);
    auto path = write_graph("cli_2k4.json", Graph(vs, es));
    auto map = write_temp("cli_shift.json",
                          json{{"0", 4}, {"1", 5}, {"2", 6}, {"3", 7}});
    auto r = run_cli({"necklace", path.string(), "--map", map.string()});
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("n") == 3);
    CHECK(j.at("graph").at("vertices").size() == 24);
    CHECK(j.at("automorphism").size() == 24);
}

TEST_CASE("close-system surfaces NotExtendable as exit 1") {
    auto path = write_graph("cli_ch2.json", chimney_graph(2));
    auto map = write_temp("cli_tip2base.json", json{{"2", 0}});
    auto r = run_cli({"close-system", path.string(), "--map", map.string()});
    CHECK(r.status == 1);
}

TEST_CASE("witness and verify-witness round-trip through files") {
    auto out = std::filesystem::temp_directory_path() / "cli_witness.json";
    auto dot = std::filesystem::temp_directory_path() / "cli_witness.dot";
    auto r = run_cli({"witness", "--k", "3", "--out", out.string(),
                      "--dot", dot.string()});
    CHECK(r.status == 0);
    CHECK(std::filesystem::exists(out));
    std::ifstream dot_in(dot);
    std::stringstream dot_text;
    dot_text << dot_in.rdbuf();
    CHECK(dot_text.str().find("graph") != std::string::npos);

    auto v = run_cli({"verify-witness", out.string()});
    CHECK(v.status == 0);
    CHECK(json::parse(v.out).at("passed") == true);

    CHECK(run_cli({"witness", "--k", "2"}).status == 1);
}

TEST_CASE("build and certify work together") {
    auto out = std::filesystem::temp_directory_path() / "cli_approx.json";
    auto r = run_cli({"build", "--cap", "4", "--budget", "20", "--seed", "7",
                      "--out", out.string()});
    CHECK(r.status == 0);
    auto c = run_cli({"certify", out.string(), "--snapshot", "0", "--cap", "4"});
    CHECK(c.status == 0);
    auto j = json::parse(c.out);
    CHECK(j.at("unextended").empty());
    CHECK(j.at("checked") == j.at("extended"));
}

TEST_CASE("identical invocations are byte-identical") {
    std::vector<std::string> args{"build", "--cap", "4", "--budget", "10",
                                  "--seed", "5"};
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("export-dot renders cross edges dashed on special graphs") {
    auto r = run_cli({"export-dot", write_graph("cli_cross.json",
                                                two_k4_cross()).string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("style=dashed") != std::string::npos);

    auto plain = run_cli({"export-dot", write_graph("cli_c4.json", cycle(4)).string()});
    CHECK(plain.status == 0);
    CHECK(plain.out.find("style=dashed") == std::string::npos);
}

TEST_CASE("thread cap environment variable is validated") {
    setenv("BOWTIE_LAB_THREADS", "2", 1);
    CHECK(run_cli({"enumerate", "--n", "4"}).status == 0);
    setenv("BOWTIE_LAB_THREADS", "lots", 1);
    CHECK(run_cli({"enumerate", "--n", "4"}).status == 2);
    unsetenv("BOWTIE_LAB_THREADS");
}
