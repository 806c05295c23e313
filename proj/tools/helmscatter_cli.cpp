#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "helmscatter.h"

int main(int argc, char** argv) {
    CLI::App app{"2D elastic scattering boundary integral solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hs_version());

    std::string config, out = ".";
    int threads = 0;
    bool large = false;
    if (const char* env = std::getenv("HELMSCATTER_THREADS"))
        threads = std::atoi(env);

    const char* names[] = {"solve", "bench-iters", "spectrum", "convergence",
                           "verify-psdo"};
    const char* descs[] = {
        "run one scattering solve and export densities and far field",
        "iteration-count sweep over shapes, formulations and frequencies",
        "dense eigenvalue scatter of the assembled system",
        "far-field self-convergence over grid refinements",
        "certify operator symbol expansions by fitted residual orders"};
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("--config", config, "JSON config file")->required();
        sub->add_option("--out", out, "output directory");
        sub->add_option("--threads", threads, "worker thread count");
        if (std::string(names[i]) == "bench-iters")
            sub->add_flag("--large", large,
                          "include the expensive high frequencies");
    }

    CLI11_PARSE(app, argc, argv);

    const std::string cmd = app.get_subcommands().front()->get_name();
    const hs_status st =
        hs_run(cmd.c_str(), config.c_str(), out.c_str(), threads,
               large ? 1 : 0);
    if (st != HS_OK) {
        std::fprintf(stderr, "error: %s\n", hs_last_error());
        return static_cast<int>(st);
    }
    return 0;
}
