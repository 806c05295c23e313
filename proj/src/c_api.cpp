#include "helmscatter.h"

#include <fstream>
#include <string>

#include "helmscatter/bench.hpp"
#include "helmscatter/util.hpp"

using namespace helm;

struct hs_curve {
    Curve c;
};

struct hs_operator {
    Assembly a;
};

namespace {

thread_local std::string g_last_error;

hs_status fail(hs_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <typename F> hs_status guarded(F&& f) {
    try {
        return f();
    } catch (const ConfigError& e) {
        return fail(HS_ERR_CONFIG, e.what());
    } catch (const DomainError& e) {
        return fail(HS_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(HS_ERR_NUMERIC, e.what());
    }
}

} // namespace

extern "C" {

const char* hs_version(void) { return "helmscatter 1.0.0"; }

const char* hs_last_error(void) { return g_last_error.c_str(); }

hs_status hs_curve_create(const char* shape, int n, hs_curve** out) {
    if (!shape || !out) return fail(HS_ERR_BADARG, "null argument");
    *out = nullptr;
    return guarded([&]() {
        auto h = new hs_curve{sample_curve(make_shape(shape), n)};
        *out = h;
        return HS_OK;
    });
}

hs_status hs_curve_create_graded(const char* shape, int p, int n,
                                 hs_curve** out) {
    if (!shape || !out) return fail(HS_ERR_BADARG, "null argument");
    *out = nullptr;
    return guarded([&]() {
        auto h = new hs_curve{graded_nodes(shape, p, n)};
        *out = h;
        return HS_OK;
    });
}

int hs_curve_size(const hs_curve* c) { return c ? c->c.n() : 0; }

hs_status hs_curve_export_csv(const hs_curve* c, const char* path) {
    if (!c || !path) return fail(HS_ERR_BADARG, "null argument");
    return guarded([&]() {
        std::ofstream os(path);
        if (!os)
            return fail(HS_ERR_IO, std::string("cannot write ") + path);
        c->c.write_csv(os);
        return HS_OK;
    });
}

void hs_curve_destroy(hs_curve* c) { delete c; }

hs_status hs_operator_assemble(const char* formulation_id, const hs_curve* c,
                               double lambda, double mu, double omega,
                               hs_operator** out) {
    if (!formulation_id || !c || !out)
        return fail(HS_ERR_BADARG, "null argument");
    *out = nullptr;
    return guarded([&]() {
        const ElasticMedium m =
            make_medium(lambda, mu, omega, c->c.max_curvature());
        auto h =
            new hs_operator{assemble_formulation(formulation_id, m, c->c)};
        *out = h;
        return HS_OK;
    });
}

int hs_operator_dim(const hs_operator* op) {
    return op ? 2 * op->a.op.N : 0;
}

hs_status hs_operator_apply(const hs_operator* op, const double* x_re,
                            const double* x_im, double* y_re, double* y_im) {
    if (!op || !x_re || !x_im || !y_re || !y_im)
        return fail(HS_ERR_BADARG, "null argument");
    return guarded([&]() {
        const int dim = 2 * op->a.op.N;
        CVec x(dim);
        for (int i = 0; i < dim; ++i) x[i] = Complex(x_re[i], x_im[i]);
        const CVec y = op->a.op.apply(x);
        for (int i = 0; i < dim; ++i) {
            y_re[i] = y[i].real();
            y_im[i] = y[i].imag();
        }
        return HS_OK;
    });
}

hs_status hs_operator_dump(const hs_operator* op, const char* path) {
    if (!op || !path) return fail(HS_ERR_BADARG, "null argument");
    return guarded([&]() {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            return fail(HS_ERR_IO, std::string("cannot write ") + path);
        write_operator(os, op->a.op.flatten());
        return HS_OK;
    });
}

void hs_operator_destroy(hs_operator* op) { delete op; }

hs_status hs_run(const char* subcommand, const char* config_path,
                 const char* out_dir, int threads, int large) {
    if (!subcommand || !config_path || !out_dir)
        return fail(HS_ERR_BADARG, "null argument");
    return guarded([&]() {
        if (threads > 0) set_threads(threads);
        RunConfig cfg = RunConfig::from_file(config_path);
        if (large) cfg.large = true;
        run_subcommand(subcommand, cfg, out_dir);
        return HS_OK;
    });
}

} // extern "C"
