#pragma once

#include <string>
#include <vector>

#include "driver.hpp"

namespace helm {

// Flat experiment config; parsed from a JSON file. Unknown keys are
// rejected. Sweep lists fall back to the scalar fields when absent.
struct RunConfig {
    ProblemSpec base;
    std::vector<std::string> shapes;
    std::vector<std::string> formulations;
    std::vector<double> omegas;
    std::vector<int> refines;
    bool dump_operator = false;
    bool large = false; // extend bench-iters omegas with 80 and 160

    static RunConfig from_file(const std::string& path);
    static RunConfig from_json_text(const std::string& text);
};

// subcommands: solve, bench-iters, spectrum, convergence, verify-psdo;
// writes CSV/SVG artifacts into out_dir
void run_subcommand(const std::string& cmd, const RunConfig& cfg,
                    const std::string& out_dir);

// residual-order certification rows, also used by verify-psdo
struct PsdoRow {
    std::string curve, op, model;
    double claimed, fitted;
};
std::vector<PsdoRow> psdo_table();

// frozen first line of every CSV artifact
inline const char* csv_header() { return "# helmscatter-v1"; }

} // namespace helm
