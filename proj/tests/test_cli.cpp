#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("cover-tool");
    for (const auto& a : args) argv.push_back(a.c_str());
    return cover::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> csv_lines(const fs::path& path) {
    std::istringstream in(slurp(path));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("gen command") {
    TempDir tmp("cover_cli_gen");
    auto out = (tmp.path / "a").string();
    CHECK(run_cli({"gen", "--L", "3", "--count", "2", "--seed", "5", "--out", out}) == 0);
    CHECK(fs::exists(tmp.path / "a" / "instance_000.json"));
    CHECK(fs::exists(tmp.path / "a" / "instance_001.json"));
    CHECK(fs::exists(tmp.path / "a" / "manifest.json"));
    CHECK(slurp(tmp.path / "a" / "instance_000.json").find("\"n_sites\": 9") != std::string::npos);

    // refuses to overwrite without --force
    CHECK(run_cli({"gen", "--L", "3", "--count", "2", "--seed", "5", "--out", out}) == 2);

    // byte-identical regeneration
    std::string first = slurp(tmp.path / "a" / "instance_000.json");
    auto out2 = (tmp.path / "b").string();
    CHECK(run_cli({"gen", "--L", "3", "--count", "2", "--seed", "5", "--out", out2}) == 0);
    CHECK(slurp(tmp.path / "b" / "instance_000.json") == first);

    CHECK(run_cli({"gen", "--L", "2", "--seed", "1", "--out", (tmp.path / "c").string()}) == 2);
}

TEST_CASE("walk command") {
    TempDir tmp("cover_cli_walk");
    auto gen_out = (tmp.path / "inst").string();
    REQUIRE(run_cli({"gen", "--L", "3", "--seed", "1", "--out", gen_out}) == 0);
    auto instance = (tmp.path / "inst" / "instance_000.json").string();

    auto out = (tmp.path / "walk").string();
    CHECK(run_cli({"walk", "--kind", "encoded", "--instance", instance, "--t", "200", "--seed",
                   "3", "--record", "10,100", "--out", out}) == 0);
    auto lines = csv_lines(tmp.path / "walk" / "trace.csv");
    REQUIRE(lines.size() == 3);  // header + 2 rows
    CHECK(lines[0] == "t,value");
    CHECK(lines[1].substr(0, 3) == "10,");
    double v1 = std::stod(lines[1].substr(3));
    double v2 = std::stod(lines[2].substr(4));
    CHECK(v2 <= v1);
    CHECK(fs::exists(tmp.path / "walk" / "final_state.json"));

    // determinism
    auto out2 = (tmp.path / "walk2").string();
    CHECK(run_cli({"walk", "--kind", "encoded", "--instance", instance, "--t", "200", "--seed",
                   "3", "--record", "10,100", "--out", out2}) == 0);
    CHECK(slurp(tmp.path / "walk2" / "trace.csv") == slurp(tmp.path / "walk" / "trace.csv"));

    auto out3 = (tmp.path / "walk3").string();
    CHECK(run_cli({"walk", "--kind", "direct", "--instance", instance, "--t", "100", "--seed",
                   "3", "--out", out3}) == 0);
    CHECK(csv_lines(tmp.path / "walk3" / "trace.csv").size() == 2);

    CHECK(run_cli({"walk", "--kind", "bogus", "--instance", instance, "--t", "10", "--out",
                   (tmp.path / "walk4").string()}) == 2);
}

TEST_CASE("compare and clusters commands") {
    TempDir tmp("cover_cli_compare");
    auto gen_out = (tmp.path / "inst").string();
    REQUIRE(run_cli({"gen", "--L", "3", "--count", "1", "--seed", "2", "--out", gen_out}) == 0);

    auto out = (tmp.path / "cmp").string();
    CHECK(run_cli({"compare", "--instances", gen_out, "--t", "200", "--tau", "100", "--samples",
                   "20", "--seed", "4", "--out", out}) == 0);
    auto rows = csv_lines(tmp.path / "cmp" / "pvalues.csv");
    REQUIRE(rows.size() == 2);  // header + one (instance, t, tau) row
    CHECK(rows[0] == "instance_id,t,tau,eta_min,p");
    auto summary = csv_lines(tmp.path / "cmp" / "summary.csv");
    REQUIRE(summary.size() == 2);

    // p within [0, 1]
    auto last_comma = rows[1].rfind(',');
    double p = std::stod(rows[1].substr(last_comma + 1));
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);

    CHECK(fs::exists(tmp.path / "cmp" / "states" / "instance_000_forest.json"));

    auto cl_out = (tmp.path / "cl").string();
    CHECK(run_cli({"clusters", "--states", (tmp.path / "cmp" / "states").string(), "--seed", "6",
                   "--out", cl_out}) == 0);
    auto cl = csv_lines(tmp.path / "cl" / "clusters.csv");
    REQUIRE(cl.size() == 3);  // header + encoded + surrogate
    CHECK(cl[0] == "instance_id,kind,largest,second_largest");
    CHECK(fs::exists(tmp.path / "cl" / "cumulative.csv"));
    CHECK(fs::exists(tmp.path / "cl" / "clusters.svg"));
}

TEST_CASE("npp command") {
    TempDir tmp("cover_cli_npp");
    {
        std::ofstream numbers(tmp.path / "numbers.txt");
        numbers << "4\n5\n6\n7\n8\n";
    }
    auto out = (tmp.path / "kk").string();
    CHECK(run_cli({"npp", "--numbers", (tmp.path / "numbers.txt").string(), "--mode", "kk",
                   "--out", out}) == 0);
    auto rows = csv_lines(tmp.path / "kk" / "result.csv");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "0,2");

    auto walk_out = (tmp.path / "walk").string();
    CHECK(run_cli({"npp", "--numbers", (tmp.path / "numbers.txt").string(), "--mode", "walk",
                   "--t", "50", "--seed", "2", "--out", walk_out}) == 0);
    auto trace = csv_lines(tmp.path / "walk" / "result.csv");
    REQUIRE(trace.size() == 52);
    double prev = 1e300;
    for (size_t k = 1; k < trace.size(); ++k) {
        double v = std::stod(trace[k].substr(trace[k].find(',') + 1));
        CHECK(v <= prev);
        prev = v;
    }

    {
        std::ofstream numbers(tmp.path / "pair.txt");
        numbers << "1\n1\n";
    }
    auto pair_out = (tmp.path / "pair").string();
    CHECK(run_cli({"npp", "--numbers", (tmp.path / "pair.txt").string(), "--mode", "kk", "--out",
                   pair_out}) == 0);
    CHECK(csv_lines(tmp.path / "pair" / "result.csv")[1] == "0,0");
}

TEST_CASE("semigroup-check and ground-truth commands") {
    TempDir tmp("cover_cli_semi");
    for (int N : {1, 2, 3}) {
        auto out = (tmp.path / ("s" + std::to_string(N))).string();
        CHECK(run_cli({"semigroup-check", "--space", "schema", "--N", std::to_string(N), "--out",
                       out}) == 0);
        CHECK(slurp(fs::path(out) / "violations.json").find("\"violations\": []") !=
              std::string::npos);
    }
    CHECK(run_cli({"semigroup-check", "--space", "schema", "--N", "9", "--out",
                   (tmp.path / "big").string()}) == 2);

    auto gen_out = (tmp.path / "inst").string();
    REQUIRE(run_cli({"gen", "--L", "3", "--seed", "1", "--out", gen_out}) == 0);
    auto gt_out = (tmp.path / "gt").string();
    CHECK(run_cli({"ground-truth", "--instance", (tmp.path / "inst" / "instance_000.json").string(),
                   "--out", gt_out}) == 0);
    CHECK(slurp(fs::path(gt_out) / "ground_truth.json").find("energy") != std::string::npos);
}
