#pragma once

#include <optional>
#include <string>

#include "fields.hpp"
#include "helm_bio.hpp"
#include "medium.hpp"
#include "spectral.hpp"
#include "traces.hpp"

namespace helm {

enum class Bc { Dirichlet, Neumann };
enum class RegKind { None, RD, RD1, RD2, RN, RN1, RN2, PS };

struct FormulationId {
    Bc bc;
    bool regularized = false;
    RegKind reg = RegKind::None;
    std::string text;
};

// ids: dirichlet.cfie, dirichlet.cfier.{rd,rd1,rd2,ps},
//      neumann.cfie,   neumann.cfier.{rn,rn1,rn2,ps}
FormulationId parse_formulation(const std::string& id);

// 2x2 block system acting on stacked (phi_p; phi_s); an optional right
// regularizer (Fourier multiplier or dense blocks) is applied first.
struct BlockOperator {
    int N = 0;
    CMat a11, a12, a21, a22;
    std::optional<MatrixMultiplier> rmul;
    std::optional<std::array<CMat, 4>> rdense;

    CVec apply(const CVec& x) const;
    CVec apply_regularizer(const CVec& x) const;
    CVec apply_left(const CVec& x) const; // dense part only
    CMat flatten() const;
};

// Potential representation of the solution:
//   u_a = DL_a phi_a + SL_a (C_a phi_a),  a in {p, s}
struct Assembly {
    FormulationId id;
    ElasticMedium medium;
    BlockOperator op;
    CMat cp, cs;
};

Assembly assemble_formulation(const std::string& id, const ElasticMedium& m,
                              const Curve& c);

// boundary data in the Helmholtz-decomposed (n, t) frame
CVec assemble_rhs(Bc bc, const IncidentField& f, const ElasticMedium& m,
                  const Curve& c);

// building blocks, exposed for tests
struct DirichletBlocks {
    CMat dl11, dl12, dl21, dl22; // A_DL
    CMat sl11, sl12, sl21, sl22; // A_SL
};
struct NeumannBlocks {
    CMat dl11, dl12, dl21, dl22; // B_DL
    CMat sl11, sl12, sl21, sl22; // B_SL
};
DirichletBlocks dirichlet_blocks(const BioSet& bp, const BioSet& bs,
                                 const Curve& c);
NeumannBlocks neumann_blocks(const BioSet& bp, const BioSet& bs,
                             const ElasticMedium& m, const Curve& c);

// 2x2 action of a stacked operator on the mode e_n (plain grid)
Eigen::Matrix2cd mode_action(const std::function<CVec(const CVec&)>& op, int n,
                             int N);

} // namespace helm
