#include "helmscatter/formulations.hpp"

namespace helm {

FormulationId parse_formulation(const std::string& id) {
    FormulationId f;
    f.text = id;
    auto fail = [&]() -> FormulationId {
        throw ConfigError(
            "unknown formulation id: " + id +
            " (valid: dirichlet.cfie, dirichlet.cfier.{rd,rd1,rd2,ps}, "
            "neumann.cfie, neumann.cfier.{rn,rn1,rn2,ps})");
    };
    std::string rest;
    if (id.rfind("dirichlet.", 0) == 0) {
        f.bc = Bc::Dirichlet;
        rest = id.substr(10);
    } else if (id.rfind("neumann.", 0) == 0) {
        f.bc = Bc::Neumann;
        rest = id.substr(8);
    } else {
        return fail();
    }
    if (rest == "cfie") return f;
    if (rest.rfind("cfier.", 0) != 0) return fail();
    f.regularized = true;
    const std::string reg = rest.substr(6);
    if (f.bc == Bc::Dirichlet) {
        if (reg == "rd") f.reg = RegKind::RD;
        else if (reg == "rd1") f.reg = RegKind::RD1;
        else if (reg == "rd2") f.reg = RegKind::RD2;
        else if (reg == "ps") f.reg = RegKind::PS;
        else return fail();
    } else {
        if (reg == "rn") f.reg = RegKind::RN;
        else if (reg == "rn1") f.reg = RegKind::RN1;
        else if (reg == "rn2") f.reg = RegKind::RN2;
        else if (reg == "ps") f.reg = RegKind::PS;
        else return fail();
    }
    return f;
}

CVec BlockOperator::apply_regularizer(const CVec& x) const {
    if (rmul) return rmul->apply(x);
    if (rdense) {
        const auto& r = *rdense;
        CVec out(2 * N);
        out.head(N) = r[0] * x.head(N) + r[1] * x.tail(N);
        out.tail(N) = r[2] * x.head(N) + r[3] * x.tail(N);
        return out;
    }
    return x;
}

CVec BlockOperator::apply_left(const CVec& x) const {
    CVec out(2 * N);
    out.head(N) = a11 * x.head(N) + a12 * x.tail(N);
    out.tail(N) = a21 * x.head(N) + a22 * x.tail(N);
    return out;
}

CVec BlockOperator::apply(const CVec& x) const {
    return apply_left(apply_regularizer(x));
}

CMat BlockOperator::flatten() const {
    CMat a(2 * N, 2 * N);
    a.topLeftCorner(N, N) = a11;
    a.topRightCorner(N, N) = a12;
    a.bottomLeftCorner(N, N) = a21;
    a.bottomRightCorner(N, N) = a22;
    if (rmul) {
        CMat r(2 * N, 2 * N);
        auto sym_entry = [&](int i, int j) {
            auto s = rmul->sym;
            return ScalarMultiplier{
                [s, i, j](double n) { return s(n)(i, j); }};
        };
        r.topLeftCorner(N, N) = multiplier_matrix(sym_entry(0, 0), N);
        r.topRightCorner(N, N) = multiplier_matrix(sym_entry(0, 1), N);
        r.bottomLeftCorner(N, N) = multiplier_matrix(sym_entry(1, 0), N);
        r.bottomRightCorner(N, N) = multiplier_matrix(sym_entry(1, 1), N);
        return a * r;
    }
    if (rdense) {
        CMat r(2 * N, 2 * N);
        r.topLeftCorner(N, N) = (*rdense)[0];
        r.topRightCorner(N, N) = (*rdense)[1];
        r.bottomLeftCorner(N, N) = (*rdense)[2];
        r.bottomRightCorner(N, N) = (*rdense)[3];
        return a * r;
    }
    return a;
}

DirichletBlocks dirichlet_blocks(const BioSet& bp, const BioSet& bs,
                                 const Curve& c) {
    const int N = c.n();
    const GradTraces gp = grad_traces(bp, c);
    const GradTraces gs = grad_traces(bs, c);
    DirichletBlocks d;
    d.dl11 = bp.w;
    d.dl12 = gs.dt_dl;
    d.dl21 = gp.dt_dl;
    d.dl22 = -bs.w;
    d.sl11 = -0.5 * CMat::Identity(N, N) + bp.kt;
    d.sl12 = gs.dt_sl;
    d.sl21 = gp.dt_sl;
    d.sl22 = 0.5 * CMat::Identity(N, N) - bs.kt;
    return d;
}

NeumannBlocks neumann_blocks(const BioSet& bp, const BioSet& bs,
                             const ElasticMedium& m, const Curve& c) {
    const int N = c.n();
    const double mu = m.mu, lam = m.lambda;
    const double kp2 = m.kp() * m.kp(), ks2 = m.ks() * m.ks();
    const CMat id = CMat::Identity(N, N);
    const HessTraces hp_sl = hess_traces_sl(bp, c);
    const HessTraces hs_sl = hess_traces_sl(bs, c);
    const HessTraces hp_dl = hess_traces_dl(bp, c);
    const HessTraces hs_dl = hess_traces_dl(bs, c);
    NeumannBlocks b;
    b.dl11 = 2.0 * mu * hp_dl.nn - lam * kp2 * (0.5 * id + bp.kop);
    b.dl12 = 2.0 * mu * hs_dl.tn;
    b.dl21 = 2.0 * mu * hp_dl.tn;
    b.dl22 = -2.0 * mu * hs_dl.nn - mu * ks2 * (0.5 * id + bs.kop);
    b.sl11 = 2.0 * mu * hp_sl.nn - lam * kp2 * bp.v;
    b.sl12 = 2.0 * mu * hs_sl.tn;
    b.sl21 = 2.0 * mu * hp_sl.tn;
    b.sl22 = -2.0 * mu * hs_sl.nn - mu * ks2 * bs.v;
    return b;
}

Assembly assemble_formulation(const std::string& id, const ElasticMedium& m,
                              const Curve& c) {
    const FormulationId fid = parse_formulation(id);
    const int N = c.n();
    const Complex kp(m.kp(), 0.0), ks(m.ks(), 0.0);
    const BioSet bp = assemble_bios(kp, c);
    const BioSet bs = assemble_bios(ks, c);

    Assembly out;
    out.id = fid;
    out.medium = m;
    out.op.N = N;

    // Fourier multipliers act at the parameter frequency n, but the symbols
    // they implement live at the arc length frequency n / jac. On a curve
    // with nonconstant jacobian they must be requantized pointwise, or the
    // principal symbols fail to cancel and the regularization is lost.
    const bool warped =
        (c.jac.array() - c.jac[0]).abs().maxCoeff() > 1e-12 * c.jac[0];
    // On graded corner meshes the jacobian vanishes at the corners, and the
    // requantized frequency n / jac blows up there. Clamping the jacobian in
    // the quantization keeps the corner rows bounded; this only changes the
    // preconditioner, not the discretized equation, and it cuts iteration
    // counts roughly in half compared with the unclamped version.
    RVec jq = c.jac;
    if (c.offset_grid)
        jq = jq.cwiseMax(0.5);
    auto quantize = [&](const MatrixMultiplier& mm) {
        if (warped)
            out.op.rdense = kn_blocks(mm, jq);
        else
            out.op.rmul = mm;
    };

    // combined-field coefficients C_p, C_s of the representation
    if (!fid.regularized) {
        const Complex eta = -I * m.kp(); // coupling parameter k = k_p
        out.cp = eta * CMat::Identity(N, N);
        out.cs = eta * CMat::Identity(N, N);
    } else if (fid.reg == RegKind::PS) {
        if (warped) {
            out.cp = -2.0 * kn_matrix(mult_ps_w(m.kp_c), jq);
            out.cs = -2.0 * kn_matrix(mult_ps_w(m.ks_c), jq);
        } else {
            out.cp = -2.0 * multiplier_matrix(mult_ps_w(m.kp_c), N);
            out.cs = -2.0 * multiplier_matrix(mult_ps_w(m.ks_c), N);
        }
    } else {
        out.cp = -2.0 * assemble_bio(Bio::W, m.kp_c, c);
        out.cs = -2.0 * assemble_bio(Bio::W, m.ks_c, c);
    }

    if (fid.bc == Bc::Dirichlet) {
        const DirichletBlocks d = dirichlet_blocks(bp, bs, c);
        out.op.a11 = d.dl11 + d.sl11 * out.cp;
        out.op.a12 = d.dl12 + d.sl12 * out.cs;
        out.op.a21 = d.dl21 + d.sl21 * out.cp;
        out.op.a22 = d.dl22 + d.sl22 * out.cs;
    } else {
        const NeumannBlocks b = neumann_blocks(bp, bs, m, c);
        out.op.a11 = b.dl11 + b.sl11 * out.cp;
        out.op.a12 = b.dl12 + b.sl12 * out.cs;
        out.op.a21 = b.dl21 + b.sl21 * out.cp;
        out.op.a22 = b.dl22 + b.sl22 * out.cs;
    }

    switch (fid.reg) {
    case RegKind::None:
        break;
    case RegKind::RD:
        quantize(make_regularizer(Reg::RD, m));
        break;
    case RegKind::RD1:
        quantize(make_regularizer(Reg::RD1, m));
        break;
    case RegKind::RN:
        quantize(make_regularizer(Reg::RN, m));
        break;
    case RegKind::RN1:
        quantize(make_regularizer(Reg::RN1, m));
        break;
    case RegKind::PS:
        quantize((fid.bc == Bc::Dirichlet) ? make_rd_h0(m)
                                           : make_regularizer(Reg::RN, m));
        break;
    case RegKind::RD2: {
        // (1/(kp~^2 + ks~^2)) [[2 W_{kp~}, D], [D, -2 W_{ks~}]]
        const Complex inv = 1.0 / (m.kp_c * m.kp_c + m.ks_c * m.ks_c);
        const CMat d = deriv_matrix(c);
        out.op.rdense = std::array<CMat, 4>{CMat(-inv * out.cp), CMat(inv * d),
                                            CMat(inv * d), CMat(inv * out.cs)};
        break;
    }
    case RegKind::RN2: {
        const CMat id = CMat::Identity(N, N);
        const CMat dvs =
            deriv_left(c.jac, assemble_bio(Bio::V, m.ks_c, c));
        const CMat dvp =
            deriv_left(c.jac, assemble_bio(Bio::V, m.kp_c, c));
        out.op.rdense = {id, 2.0 * dvs, 2.0 * dvp, CMat(-id)};
        break;
    }
    }
    return out;
}

CVec assemble_rhs(Bc bc, const IncidentField& f, const ElasticMedium& m,
                  const Curve& c) {
    const int N = c.n();
    CVec rhs(2 * N);
    for (int j = 0; j < N; ++j) {
        const Vec2 x = c.x.col(j);
        const Vec2 nj = c.nrm.col(j), tj = c.tang.col(j);
        CVec2 val;
        if (bc == Bc::Dirichlet)
            val = f.u(x);
        else
            val = traction(f, m, x, nj);
        rhs[j] = -(val[0] * nj[0] + val[1] * nj[1]);
        rhs[N + j] = -(val[0] * tj[0] + val[1] * tj[1]);
    }
    return rhs;
}

Eigen::Matrix2cd mode_action(const std::function<CVec(const CVec&)>& op, int n,
                             int N) {
    Eigen::Matrix2cd m;
    const CVec e = mode_vector(n, N);
    for (int col = 0; col < 2; ++col) {
        CVec in = CVec::Zero(2 * N);
        if (col == 0)
            in.head(N) = e;
        else
            in.tail(N) = e;
        const CVec out = op(in);
        const CVec ca = fourier_coeffs(out.head(N));
        const CVec cb = fourier_coeffs(out.tail(N));
        const int idx = (n >= 0) ? n : n + N;
        m(0, col) = ca[idx];
        m(1, col) = cb[idx];
    }
    return m;
}

} // namespace helm
