#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "krc/bench.hpp"
#include "krc/cli.hpp"
#include "krc/generators.hpp"
#include "krc/graph_io.hpp"

using namespace krc;
using nlohmann::ordered_json;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = cli_main(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path scratch_file(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "krc-cli-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    auto path = scratch_file(name);
    std::ofstream sink(path);
    sink << content;
    return path.string();
}

}  // namespace

TEST_CASE("solve subcommand reports a decision object") {
    std::string path = write_scratch("grid.gr", write_graph_text(gen_grid(5, 5)));
    CliRun r = run_cli({"solve", path, "-r", "3", "-k", "0"});
    REQUIRE(r.code == 0);
    ordered_json result = ordered_json::parse(r.out);
    CHECK(result["command"] == "solve");
    CHECK(result["decision"] == true);
    CHECK(result["certificate"].is_array());
    CHECK(result["certificate"].empty());
    CHECK(result["stats"]["wall_time_ms"].is_null());
}

TEST_CASE("solve reruns are byte identical") {
    std::string path =
        write_scratch("gnp.gr", write_graph_text(gen_gnp(14, 0.35, 21)));
    std::vector<std::string> args = {"solve", path,        "-r",     "3",
                                     "-k",    "4",         "--audit"};
    CliRun a = run_cli(args);
    CliRun b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("solve with min reports the optimum") {
    std::string path =
        write_scratch("arrow.gr", write_graph_text(gen_disjoint_cliques(2, 3)));
    CliRun r = run_cli({"solve", path, "-r", "3", "-k", "1", "--min"});
    REQUIRE(r.code == 0);
    ordered_json result = ordered_json::parse(r.out);
    CHECK(result["optimum"] == 2);
    CHECK(result["decision"] == false);
}

TEST_CASE("oracle subcommand honors annotation lines") {
    Graph ab(2, {{0, 1}});
    std::string text = write_graph_text(ab, {VertexSet{0}, VertexSet{1}});
    std::string path = write_scratch("edge.gr", text);
    CliRun neg = run_cli({"oracle", path, "-r", "3", "-k", "1"});
    REQUIRE(neg.code == 0);
    CHECK(ordered_json::parse(neg.out)["decision"] == false);
    CliRun pos = run_cli({"oracle", path, "-r", "3", "-k", "2"});
    CHECK(ordered_json::parse(pos.out)["decision"] == true);
    CHECK(ordered_json::parse(pos.out)["min_size"] == 2);
}

TEST_CASE("cliques subcommand counts triangles of K_5") {
    std::string path = write_scratch("k5.gr", write_graph_text(gen_complete(5)));
    CliRun r = run_cli({"cliques", path, "-i", "3", "--count"});
    REQUIRE(r.code == 0);
    ordered_json result = ordered_json::parse(r.out);
    CHECK(result["count"] == 10);
    CHECK_FALSE(result.contains("cliques"));

    CliRun full = run_cli({"cliques", path, "-i", "4"});
    ordered_json listing = ordered_json::parse(full.out);
    CHECK(listing["count"] == 5);
    CHECK(listing["cliques"].size() == 5);
}

TEST_CASE("gen verify round trip through files") {
    std::string out_path = scratch_file("planted.gr").string();
    CliRun gen = run_cli({"gen", "planted:n=25,s=3,r=3,base=geometric", "-o",
                          out_path, "--seed", "11"});
    REQUIRE(gen.code == 0);
    ordered_json result = ordered_json::parse(gen.out);
    CHECK(result["n"] == 25);
    REQUIRE(result.contains("cover_file"));

    CliRun check = run_cli({"verify", out_path, "-r", "3", "--solution",
                            result["cover_file"].get<std::string>()});
    REQUIRE(check.code == 0);
    CHECK(ordered_json::parse(check.out)["valid"] == true);

    CliRun regen = run_cli({"gen", "planted:n=25,s=3,r=3,base=geometric", "-o",
                            out_path, "--seed", "11"});
    CHECK(regen.out == gen.out);
}

TEST_CASE("decompose subcommand writes a valid decomposition") {
    std::string path = write_scratch("grid34.gr", write_graph_text(gen_grid(3, 4)));
    std::string td_path = scratch_file("grid34.td").string();
    CliRun r = run_cli({"decompose", path, "-o", td_path});
    REQUIRE(r.code == 0);
    ordered_json result = ordered_json::parse(r.out);
    CHECK(result["valid"] == true);
    std::ifstream read_back(td_path);
    std::string first_line;
    std::getline(read_back, first_line);
    CHECK(first_line.rfind("s td ", 0) == 0);
}

TEST_CASE("bench manifest runs clean against the oracle") {
    std::string graph_path =
        write_scratch("bench-input.gr", write_graph_text(gen_disjoint_cliques(2, 3)));
    ordered_json manifest;
    manifest["instances"] = ordered_json::array();
    manifest["instances"].push_back({{"id", "spec-one"},
                                     {"spec", "gnp:n=10,p=0.4,seed=3"},
                                     {"r", 3},
                                     {"k", 2},
                                     {"profile", "generic"},
                                     {"oracle", true}});
    manifest["instances"].push_back({{"id", "file-one"},
                                     {"file", graph_path},
                                     {"r", 3},
                                     {"k", 2},
                                     {"profile", "pseudo-disk"},
                                     {"oracle", true},
                                     {"audit", true}});
    std::string manifest_path = write_scratch("manifest.json", manifest.dump());
    std::string out_path = scratch_file("bench.jsonl").string();

    CliRun r = run_cli({"bench", manifest_path, "-o", out_path, "--threads", "2"});
    REQUIRE(r.code == 0);
    ordered_json summary = ordered_json::parse(r.out);
    CHECK(summary["records"] == 2);
    CHECK(summary["mismatches"] == 0);

    std::ifstream lines(out_path);
    std::string line;
    int seen = 0;
    while (std::getline(lines, line)) {
        ordered_json record = ordered_json::parse(line);
        CHECK(record["mismatch"] == false);
        if (seen == 0) CHECK(record["id"] == "spec-one");
        ++seen;
    }
    CHECK(seen == 2);
}

TEST_CASE("scaling manifests fit the measured counts") {
    ordered_json manifest;
    manifest["scaling"] = {{"family", "planted:n=16,base=bipartite"},
                           {"profile", "generic"},
                           {"r", 3},
                           {"k_min", 2},
                           {"k_max", 4},
                           {"seed", 5}};
    BenchResult res = run_bench_manifest(manifest.dump(), 1);
    REQUIRE(res.lines.size() == 4);
    ordered_json fit = ordered_json::parse(res.lines.back());
    CHECK(fit["fit"]["points"] == 3);
    CHECK(fit["fit"]["degenerate"] == false);

    manifest["scaling"]["k_max"] = 2;
    BenchResult tiny = run_bench_manifest(manifest.dump(), 1);
    REQUIRE(tiny.lines.size() == 2);
    CHECK(ordered_json::parse(tiny.lines.back())["fit"]["degenerate"] == true);

    manifest["scaling"]["family"] = "";
    CHECK(run_bench_manifest(manifest.dump(), 1).lines.empty());
}

TEST_CASE("help requests exit cleanly with usage text") {
    CliRun top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("Subcommands:") != std::string::npos);
    CliRun sub = run_cli({"solve", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--profile") != std::string::npos);
}

TEST_CASE("usage and input errors use distinct exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"mystery"}).code == 2);
    CHECK(run_cli({"solve"}).code == 2);
    CHECK(run_cli({"solve", "missing.gr", "-r", "3", "-k", "1"}).code == 3);
    std::string bad = write_scratch("bad.gr", "e 0 1\n");
    CHECK(run_cli({"solve", bad, "-r", "3", "-k", "1"}).code == 3);
    std::string good = write_scratch("good.gr", write_graph_text(gen_grid(2, 2)));
    CHECK(run_cli({"solve", good, "-r", "3", "-k", "1", "--profile", "mystery"}).code ==
          2);
    std::string bad_manifest = write_scratch("bad-manifest.json", "{nope");
    std::string sink = scratch_file("sink.jsonl").string();
    CHECK(run_cli({"bench", bad_manifest, "-o", sink}).code == 3);
}
