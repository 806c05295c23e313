#include "helmscatter/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "helmscatter/svg.hpp"

namespace helm {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot write " + path);
    os << csv_header() << "\n";
    return os;
}

} // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    RunConfig cfg;
    ProblemSpec& b = cfg.base;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const json& v = it.value();
        try {
            if (k == "shape") b.shape = v.get<std::string>();
            else if (k == "formulation") b.formulation = v.get<std::string>();
            else if (k == "lambda") b.lambda = v.get<double>();
            else if (k == "mu") b.mu = v.get<double>();
            else if (k == "omega") b.omega = v.get<double>();
            else if (k == "ppw") b.ppw = v.get<int>();
            else if (k == "refine") b.refine = v.get<int>();
            else if (k == "grading_p") b.grading_p = v.get<int>();
            else if (k == "tol") b.tol = v.get<double>();
            else if (k == "maxit") b.maxit = v.get<int>();
            else if (k == "incident") b.incident = v.get<std::string>();
            else if (k == "direction_deg") b.direction_deg = v.get<double>();
            else if (k == "polarization_deg")
                b.polarization_deg = v.get<double>();
            else if (k == "n_override") b.n_override = v.get<int>();
            else if (k == "source") {
                if (!v.is_array() || v.size() != 2)
                    throw ConfigError("source must be [x, y]");
                b.source = Vec2(v[0].get<double>(), v[1].get<double>());
            } else if (k == "shapes")
                cfg.shapes = v.get<std::vector<std::string>>();
            else if (k == "formulations")
                cfg.formulations = v.get<std::vector<std::string>>();
            else if (k == "omegas")
                cfg.omegas = v.get<std::vector<double>>();
            else if (k == "refines")
                cfg.refines = v.get<std::vector<int>>();
            else if (k == "dump_operator")
                cfg.dump_operator = v.get<bool>();
            else if (k == "large")
                cfg.large = v.get<bool>();
            else
                throw ConfigError("unknown config key: " + k);
        } catch (const json::exception& e) {
            throw ConfigError("bad value for config key '" + k +
                              "': " + e.what());
        }
    }
    if (b.ppw < 2) throw ConfigError("ppw must be at least 2");
    if (b.refine < 1) throw ConfigError("refine must be positive");
    if (b.tol <= 0) throw ConfigError("tol must be positive");
    if (b.maxit < 1) throw ConfigError("maxit must be positive");
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return from_json_text(ss.str());
}

namespace {

void write_iters_csv(const std::string& path, const KrylovResult& kr) {
    auto os = open_csv(path);
    os << "iteration,residual\n";
    for (size_t i = 0; i < kr.residuals.size(); ++i)
        os << i << "," << num(kr.residuals[i]) << "\n";
}

void run_solve(const RunConfig& cfg, const std::string& out) {
    SolveOutput so = solve_problem(cfg.base);
    {
        std::ofstream cs(out + "/curve.csv");
        if (!cs) throw ConfigError("cannot write " + out + "/curve.csv");
        so.curve.write_csv(cs);
    }

    {
        auto os = open_csv(out + "/solve.csv");
        os << "s,re_phi_p,im_phi_p,re_phi_s,im_phi_s\n";
        for (int j = 0; j < so.N; ++j)
            os << num(so.curve.s[j]) << "," << num(so.phi[j].real()) << ","
               << num(so.phi[j].imag()) << "," << num(so.phi[so.N + j].real())
               << "," << num(so.phi[so.N + j].imag()) << "\n";
    }
    write_iters_csv(out + "/iters.csv", so.krylov);

    std::vector<double> angles(360);
    for (int a = 0; a < 360; ++a) angles[a] = a * M_PI / 180.0;
    auto [up, us] = far_field_ps(so, angles);
    {
        auto os = open_csv(out + "/farfield.csv");
        os << "angle_deg,re_up,im_up,re_us,im_us\n";
        for (int a = 0; a < 360; ++a)
            os << a << "," << num(up[a].real()) << "," << num(up[a].imag())
               << "," << num(us[a].real()) << "," << num(us[a].imag()) << "\n";
    }
    if (cfg.dump_operator) {
        std::ofstream os(out + "/operator.bin", std::ios::binary);
        if (!os) throw ConfigError("cannot write " + out + "/operator.bin");
        write_operator(os, so.assembly.op.flatten());
    }
}

void run_bench_iters(const RunConfig& cfg, const std::string& out) {
    std::vector<std::string> shapes =
        cfg.shapes.empty() ? std::vector<std::string>{cfg.base.shape}
                           : cfg.shapes;
    std::vector<std::string> forms =
        cfg.formulations.empty()
            ? std::vector<std::string>{cfg.base.formulation}
            : cfg.formulations;
    std::vector<double> omegas =
        cfg.omegas.empty() ? std::vector<double>{cfg.base.omega} : cfg.omegas;
    if (cfg.large) {
        omegas.push_back(80.0);
        omegas.push_back(160.0);
    }

    // fail fast on unknown ids before any expensive solve
    for (const auto& f : forms) parse_formulation(f);

    auto os = open_csv(out + "/bench.csv");
    os << "shape,formulation,omega,N,iters,converged,residual\n";

    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
        series;
    for (const auto& sh : shapes)
        for (const auto& f : forms)
            for (double w : omegas) {
                ProblemSpec ps = cfg.base;
                ps.shape = sh;
                ps.formulation = f;
                ps.omega = w;
                SolveOutput so = solve_problem(ps);
                const double res = so.krylov.residuals.empty()
                                       ? 0.0
                                       : so.krylov.residuals.back();
                os << sh << "," << f << "," << num(w) << "," << so.N << ","
                   << so.krylov.iterations << ","
                   << (so.krylov.converged ? 1 : 0) << "," << num(res)
                   << "\n";
                auto& sr = series[sh + " " + f];
                sr.first.push_back(w);
                sr.second.push_back(
                    static_cast<double>(so.krylov.iterations));
            }

    SvgPlot plot("GMRES iterations", "omega", "iterations");
    for (const auto& [label, xy] : series)
        plot.add_series(label, xy.first, xy.second);
    plot.write(out + "/bench.svg");
}

void run_spectrum(const RunConfig& cfg, const std::string& out) {
    ProblemSpec ps = cfg.base;
    const int N = resolution_for(ps);
    Curve c = curve_for(ps, N);
    const ElasticMedium m = medium_for(ps, c);
    Assembly a = assemble_formulation(ps.formulation, m, c);
    const CVec ev = spectrum(a.op.flatten());

    auto os = open_csv(out + "/spectrum.csv");
    os << "re,im\n";
    std::vector<double> xs(ev.size()), ys(ev.size());
    for (int i = 0; i < ev.size(); ++i) {
        os << num(ev[i].real()) << "," << num(ev[i].imag()) << "\n";
        xs[i] = ev[i].real();
        ys[i] = ev[i].imag();
    }
    SvgPlot plot("spectrum " + ps.formulation, "Re", "Im");
    plot.add_scatter(ps.shape, xs, ys);
    plot.write(out + "/spectrum.svg");
}

void run_convergence(const RunConfig& cfg, const std::string& out) {
    std::vector<int> refines =
        cfg.refines.empty() ? std::vector<int>{1, 2, 4} : cfg.refines;

    std::vector<double> angles(64);
    for (int a = 0; a < 64; ++a) angles[a] = a * 2.0 * M_PI / 64;

    auto os = open_csv(out + "/convergence.csv");
    os << "refine,N,iters,farfield_diff\n";
    CVec prev;
    for (int r : refines) {
        ProblemSpec ps = cfg.base;
        ps.refine = r;
        SolveOutput so = solve_problem(ps);
        auto [up, us] = far_field_ps(so, angles);
        CVec cur(2 * 64);
        cur << up, us;
        double diff = std::nan("");
        if (prev.size()) {
            const double scale = std::max(cur.lpNorm<Eigen::Infinity>(),
                                          1e-300);
            diff = (cur - prev).lpNorm<Eigen::Infinity>() / scale;
        }
        os << r << "," << so.N << "," << so.krylov.iterations << ","
           << num(diff) << "\n";
        prev = cur;
    }
}

void run_verify_psdo(const RunConfig&, const std::string& out) {
    auto os = open_csv(out + "/psdo.csv");
    os << "curve,operator,model,claimed,fitted\n";
    for (const auto& r : psdo_table())
        os << r.curve << "," << r.op << "," << r.model << ","
           << num(r.claimed) << "," << num(r.fitted) << "\n";
}

} // namespace

void run_subcommand(const std::string& cmd, const RunConfig& cfg,
                    const std::string& out_dir) {
    if (cmd == "solve") run_solve(cfg, out_dir);
    else if (cmd == "bench-iters") run_bench_iters(cfg, out_dir);
    else if (cmd == "spectrum") run_spectrum(cfg, out_dir);
    else if (cmd == "convergence") run_convergence(cfg, out_dir);
    else if (cmd == "verify-psdo") run_verify_psdo(cfg, out_dir);
    else
        throw ConfigError(
            "unknown subcommand '" + cmd +
            "' (expected solve, bench-iters, spectrum, convergence, "
            "verify-psdo)");
}

namespace {

std::vector<int> probe_modes(int nmin, int nmax) {
    std::vector<int> out;
    const int count = 9;
    for (int i = 0; i < count; ++i) {
        const double x =
            nmin * std::pow(double(nmax) / nmin, i / double(count - 1));
        const int n = static_cast<int>(std::lround(x));
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

// Slope of log residual vs log n for a dense operator probed with arc
// length modes e^{i n s}. The symbol claims are stated in the arc length
// frequency, so on a curve with nonconstant jacobian the probes must be
// warped to the arc length variable; plain grid modes mix arc length
// frequencies over the jacobian range and flatten the fitted order.
double warped_order(const CMat& a, const Curve& c,
                    const std::function<CVec(int, const CVec&)>& model,
                    int nmin, int nmax) {
    std::vector<double> lx, ly;
    const int N = c.n();
    for (int n : probe_modes(nmin, nmax)) {
        const CVec e = warped_mode(n, c.s_arc);
        const double r = (a * e - model(n, e)).norm() / std::sqrt(double(N));
        lx.push_back(std::log(double(n)));
        ly.push_back(std::log(std::max(r, 1e-14)));
    }
    return fit_slope(lx, ly);
}

// same, for 2x2 systems with a constant principal symbol; the probe enters
// each slot in turn and the worse residual counts
double warped_order_pair(const std::function<CVec(const CVec&)>& op,
                         const Curve& c,
                         const std::function<Eigen::Matrix2cd(int)>& psym,
                         int nmin, int nmax) {
    std::vector<double> lx, ly;
    const int N = c.n();
    for (int n : probe_modes(nmin, nmax)) {
        const CVec e = warped_mode(n, c.s_arc);
        const Eigen::Matrix2cd p = psym(n);
        double worst = 0.0;
        for (int col = 0; col < 2; ++col) {
            CVec in = CVec::Zero(2 * N);
            if (col == 0)
                in.head(N) = e;
            else
                in.tail(N) = e;
            CVec want(2 * N);
            want.head(N) = p(0, col) * e;
            want.tail(N) = p(1, col) * e;
            worst = std::max(worst, (op(in) - want).norm());
        }
        lx.push_back(std::log(double(n)));
        ly.push_back(std::log(std::max(worst / std::sqrt(double(N)), 1e-14)));
    }
    return fit_slope(lx, ly);
}

} // namespace

std::vector<PsdoRow> psdo_table() {
    std::vector<PsdoRow> rows;
    // The kite's remainders carry a slowly decaying analytic-kernel part
    // that dominates below n ~ 100, so the scalar rows probe high modes on
    // a fine grid to fit the genuine asymptotic order.
    const int N = 1024;
    const int nmin = 24, nmax = 192;
    const double k = 2.0;

    for (const std::string name : {"circle", "kite"}) {
        Curve c = sample_curve(make_shape(name), N);
        const BioSet b = assemble_bios(Complex(k, 0.0), c);
        const RVec kap = c.kappa;

        // per-mode symbol factors at arc length frequency n
        auto parts = [](int n) {
            const Complex in(0.0, double(n));
            const Complex h = (n >= 0) ? I : -I;
            return std::make_tuple(in, h, 1.0 / in, 1.0 / (in * in * in));
        };

        rows.push_back({name, "V", "H/2 D-1 - k^2/4 H D-3", -5.0,
                        warped_order(
                            b.v, c,
                            [&](int n, const CVec& e) {
                                auto [in, h, d1, d3] = parts(n);
                                return CVec((0.5 * h * d1 -
                                             0.25 * k * k * h * d3) *
                                            e);
                            },
                            nmin, nmax)});
        rows.push_back({name, "W", "H/2 D1 + k^2/4 H D-1", -3.0,
                        warped_order(
                            b.w, c,
                            [&](int n, const CVec& e) {
                                auto [in, h, d1, d3] = parts(n);
                                return CVec((0.5 * h * in +
                                             0.25 * k * k * h * d1) *
                                            e);
                            },
                            nmin, nmax)});
        // kappa commutes with the symbol part to one order beyond the claim
        // on an arc length mode, so K and Kt share the model values
        auto k_model = [&](int n, const CVec& e) {
            auto [in, h, d1, d3] = parts(n);
            CVec y = (-0.25 * k * k * h * d3) * e;
            y.array() *= kap.array();
            return y;
        };
        rows.push_back({name, "K", "-k^2/4 kappa H D-3", -4.0,
                        warped_order(b.kop, c, k_model, nmin, nmax)});
        rows.push_back({name, "Kt", "-k^2/4 H D-3 kappa", -4.0,
                        warped_order(b.kt, c, k_model, nmin, nmax)});
        // n-projected single layer n.V(n.)
        {
            CMat nvn = CMat::Zero(N, N);
            for (int comp = 0; comp < 2; ++comp) {
                const RVec nc = c.nrm.row(comp).transpose();
                nvn += nc.cast<Complex>().asDiagonal() * b.v *
                       nc.cast<Complex>().asDiagonal();
            }
            rows.push_back({name, "nVn", "H/2 D-1 - (k^2+2kappa)/4 D-3 H",
                            -3.0,
                            warped_order(
                                nvn, c,
                                [&](int n, const CVec& e) {
                                    auto [in, h, d1, d3] = parts(n);
                                    CVec y = (d3 * h) * e;
                                    y.array() *=
                                        (k * k + 2.0 * kap.array()) * -0.25;
                                    return CVec((0.5 * h * d1) * e + y);
                                },
                                nmin, nmax)});
        }

        // regularized combined-field systems: order-0 principal symbol,
        // remainder one order down; a coarser grid suffices here since the
        // O(1/n) remainder is visible well before the analytic tail matters
        const Curve c2 = sample_curve(make_shape(name), 512);
        const ElasticMedium m =
            make_medium(2.0, 1.0, 10.0, c2.max_curvature());
        const Complex a_re(m.kp() * m.kp() + m.ks() * m.ks(), 0.0);
        const Complex a_tl = m.kp_c * m.kp_c + m.ks_c * m.ks_c;

        {
            Assembly asr = assemble_formulation("dirichlet.cfier.rd", m, c2);
            rows.push_back(
                {name, "cfier.rd", "clustered 2x2 symbol", -1.0,
                 warped_order_pair(
                     [&](const CVec& x) { return asr.op.apply(x); }, c2,
                     [&](int n) {
                         const Complex h = (n >= 0) ? I : -I;
                         Eigen::Matrix2cd p;
                         p << a_re + a_tl, -(a_re - a_tl) * h,
                             (a_re - a_tl) * h, a_re + a_tl;
                         return Eigen::Matrix2cd(p / (2.0 * a_tl));
                     },
                     16, 100)});
        }
        {
            Assembly asr = assemble_formulation("neumann.cfier.rn", m, c2);
            const double kp2 = m.kp() * m.kp(), ks2 = m.ks() * m.ks();
            const Complex tp2 = m.kp_c * m.kp_c, ts2 = m.ks_c * m.ks_c;
            const Complex tau = (kp2 + ks2 - tp2 - ts2) /
                                (2.0 * (2.0 * ks2 - tp2 - ts2));
            rows.push_back(
                {name, "cfier.rn", "clustered 2x2 symbol", -1.0,
                 warped_order_pair(
                     [&](const CVec& x) { return asr.op.apply(x); }, c2,
                     [&](int n) {
                         const Complex h = (n >= 0) ? I : -I;
                         Eigen::Matrix2cd p;
                         p << 1.0 - tau, tau * h, -tau * h, 1.0 - tau;
                         return p;
                     },
                     16, 100)});
        }
    }
    return rows;
}

} // namespace helm
