#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "helmscatter.h"

namespace fs = std::filesystem;

TEST_CASE("c api: curve lifecycle and csv export") {
    hs_curve* c = nullptr;
    REQUIRE(hs_curve_create("kite", 64, &c) == HS_OK);
    REQUIRE(c != nullptr);
    CHECK(hs_curve_size(c) == 64);

    const fs::path p = fs::temp_directory_path() / "hs_api_curve.csv";
    REQUIRE(hs_curve_export_csv(c, p.string().c_str()) == HS_OK);
    std::ifstream is(p);
    std::string first;
    std::getline(is, first);
    CHECK(first == "# helmscatter-v1");
    hs_curve_destroy(c);
    fs::remove(p);
}

TEST_CASE("c api: bad shape reports a config error") {
    hs_curve* c = nullptr;
    CHECK(hs_curve_create("dodecagon", 64, &c) == HS_ERR_CONFIG);
    CHECK(c == nullptr);
    CHECK(std::strlen(hs_last_error()) > 0);
    CHECK(hs_curve_create(nullptr, 64, &c) == HS_ERR_BADARG);
}

TEST_CASE("c api: graded curve honors the divisibility rule") {
    hs_curve* c = nullptr;
    CHECK(hs_curve_create_graded("lshape", 3, 100, &c) == HS_ERR_CONFIG);
    REQUIRE(hs_curve_create_graded("lshape", 3, 96, &c) == HS_OK);
    CHECK(hs_curve_size(c) == 96);
    hs_curve_destroy(c);
}

TEST_CASE("c api: operator assemble, apply, dump") {
    hs_curve* c = nullptr;
    REQUIRE(hs_curve_create("circle", 48, &c) == HS_OK);
    hs_operator* op = nullptr;
    REQUIRE(hs_operator_assemble("dirichlet.cfie", c, 2.0, 1.0, 4.0, &op) ==
            HS_OK);
    const int dim = hs_operator_dim(op);
    REQUIRE(dim == 96);

    std::vector<double> xr(dim, 0.0), xi(dim, 0.0), yr(dim), yi(dim);
    xr[3] = 1.0;
    REQUIRE(hs_operator_apply(op, xr.data(), xi.data(), yr.data(),
                              yi.data()) == HS_OK);
    double nrm = 0.0;
    for (int i = 0; i < dim; ++i) nrm += yr[i] * yr[i] + yi[i] * yi[i];
    CHECK(nrm > 0.0);

    const fs::path p = fs::temp_directory_path() / "hs_api_op.bin";
    REQUIRE(hs_operator_dump(op, p.string().c_str()) == HS_OK);
    CHECK(fs::file_size(p) > static_cast<uintmax_t>(dim) * dim * 16);
    fs::remove(p);

    hs_operator_destroy(op);
    hs_operator* bad = nullptr;
    CHECK(hs_operator_assemble("neumann.cfier.rd", c, 2.0, 1.0, 4.0, &bad) ==
          HS_ERR_CONFIG);
    CHECK(bad == nullptr);
    hs_curve_destroy(c);
}

TEST_CASE("c api: hs_run round-trips a tiny solve") {
    const fs::path dir = fs::temp_directory_path() / "hs_api_run";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path cfgp = dir / "config.json";
    {
        std::ofstream os(cfgp);
        os << R"({"shape": "circle", "formulation": "dirichlet.cfie",
                  "omega": 4.0, "n_override": 48})";
    }
    REQUIRE(hs_run("solve", cfgp.string().c_str(), dir.string().c_str(), 1,
                   0) == HS_OK);
    CHECK(fs::exists(dir / "solve.csv"));
    CHECK(hs_run("bogus", cfgp.string().c_str(), dir.string().c_str(), 1,
                 0) == HS_ERR_CONFIG);
    CHECK(hs_run("solve", "/nonexistent/cfg.json", dir.string().c_str(), 1,
                 0) == HS_ERR_CONFIG);
    fs::remove_all(dir);
}
