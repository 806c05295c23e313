#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helmscatter/bench.hpp"

using namespace helm;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is.good());
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
    fs::path d = fs::temp_directory_path() / ("helmscatter_test_" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

} // namespace

TEST_CASE("config parsing") {
    const RunConfig cfg = RunConfig::from_json_text(R"({
        "shape": "kite", "formulation": "neumann.cfier.rn",
        "lambda": 2.0, "mu": 1.0, "omega": 20.0,
        "ppw": 6, "tol": 1e-4, "maxit": 300,
        "incident": "point", "source": [0.2, 0.1],
        "omegas": [10, 20], "refines": [1, 2]
    })");
    CHECK(cfg.base.shape == "kite");
    CHECK(cfg.base.formulation == "neumann.cfier.rn");
    CHECK(cfg.base.omega == 20.0);
    CHECK(cfg.base.ppw == 6);
    CHECK(cfg.base.source.y() == 0.1);
    REQUIRE(cfg.omegas.size() == 2);
    CHECK(cfg.refines[1] == 2);

    CHECK_THROWS_AS(RunConfig::from_json_text("{\"bogus\": 1}"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text("not json"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text("{\"tol\": -1}"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text("{\"source\": [1]}"),
                    ConfigError);
}

TEST_CASE("solve subcommand writes the artifact set") {
    RunConfig cfg = RunConfig::from_json_text(R"({
        "shape": "circle", "formulation": "dirichlet.cfie",
        "omega": 4.0, "n_override": 48, "dump_operator": true
    })");
    const fs::path out = fresh_dir("solve");
    run_subcommand("solve", cfg, out.string());
    for (const char* f :
         {"curve.csv", "solve.csv", "iters.csv", "farfield.csv"}) {
        const std::string body = slurp(out / f);
        CAPTURE(f);
        CHECK(body.rfind("# helmscatter-v1", 0) == 0);
    }
    CHECK(fs::exists(out / "operator.bin"));
    fs::remove_all(out);
}

TEST_CASE("bench-iters output is byte-identical across runs") {
    RunConfig cfg = RunConfig::from_json_text(R"({
        "shape": "circle",
        "formulations": ["dirichlet.cfie", "dirichlet.cfier.rd"],
        "omegas": [4.0], "n_override": 48, "tol": 1e-5
    })");
    const fs::path a = fresh_dir("bench_a"), b = fresh_dir("bench_b");
    run_subcommand("bench-iters", cfg, a.string());
    run_subcommand("bench-iters", cfg, b.string());
    CHECK(slurp(a / "bench.csv") == slurp(b / "bench.csv"));
    CHECK(slurp(a / "bench.svg") == slurp(b / "bench.svg"));

    // header plus column row plus one line per case
    std::istringstream is(slurp(a / "bench.csv"));
    std::string line;
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2 + 2);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("bench-iters rejects unknown formulations up front") {
    RunConfig cfg = RunConfig::from_json_text(R"({
        "shape": "circle", "formulations": ["dirichlet.cfier.rn"],
        "omegas": [4.0], "n_override": 48
    })");
    const fs::path out = fresh_dir("bench_bad");
    CHECK_THROWS_AS(run_subcommand("bench-iters", cfg, out.string()),
                    ConfigError);
    fs::remove_all(out);
}

TEST_CASE("unknown subcommand is a config error") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_subcommand("frobnicate", cfg, "."), ConfigError);
}

TEST_CASE("spectrum subcommand writes eigenvalue artifacts") {
    RunConfig cfg = RunConfig::from_json_text(R"({
        "shape": "circle", "formulation": "dirichlet.cfier.rd",
        "omega": 4.0, "n_override": 48
    })");
    const fs::path out = fresh_dir("spec");
    run_subcommand("spectrum", cfg, out.string());
    const std::string body = slurp(out / "spectrum.csv");
    CHECK(body.rfind("# helmscatter-v1", 0) == 0);
    std::istringstream is(body);
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 2 + 2 * 48); // one eigenvalue per unknown
    CHECK(fs::exists(out / "spectrum.svg"));
    fs::remove_all(out);
}
