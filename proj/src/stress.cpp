#include "foamfit/stress.hpp"

#include <cmath>

namespace foamfit {

namespace {

// chain-rule factors d(i1_bar)/dx, d(i2_bar)/dx, dJ/dx for x in {lambda,
// alpha, gamma} follow from i_bar = i * J^p: d(i_bar)/dx = (di/dx) J^p +
// p i J^(p-1) dJ/dx with p = -2/3 and -4/3
struct ChainFactors {
    double di1b = 0.0, di2b = 0.0, dj = 0.0;
};

ChainFactors lambda_factors(const Invariants& inv, double lambda, double alpha) {
    const double jm23 = std::pow(inv.j, -2.0 / 3.0);
    const double jm53 = std::pow(inv.j, -5.0 / 3.0);
    const double jm43 = std::pow(inv.j, -4.0 / 3.0);
    const double jm73 = std::pow(inv.j, -7.0 / 3.0);
    ChainFactors f;
    f.dj = alpha;
    f.di1b = 2.0 * lambda * jm23 - (2.0 / 3.0) * inv.i1 * jm53 * f.dj;
    const double di2 = 2.0 * lambda * (1.0 + alpha * alpha);
    f.di2b = di2 * jm43 - (4.0 / 3.0) * inv.i2 * jm73 * f.dj;
    return f;
}

ChainFactors alpha_factors(const Invariants& inv, double lambda, double alpha) {
    const double jm23 = std::pow(inv.j, -2.0 / 3.0);
    const double jm53 = std::pow(inv.j, -5.0 / 3.0);
    const double jm43 = std::pow(inv.j, -4.0 / 3.0);
    const double jm73 = std::pow(inv.j, -7.0 / 3.0);
    ChainFactors f;
    f.dj = lambda;
    f.di1b = 2.0 * alpha * jm23 - (2.0 / 3.0) * inv.i1 * jm53 * f.dj;
    const double di2 = 2.0 * alpha * (1.0 + lambda * lambda);
    f.di2b = di2 * jm43 - (4.0 / 3.0) * inv.i2 * jm73 * f.dj;
    return f;
}

ChainFactors gamma_factors(const Invariants& inv, double gamma) {
    // J = lambda * alpha is gamma-independent
    ChainFactors f;
    f.di1b = 2.0 * gamma * std::pow(inv.j, -2.0 / 3.0);
    f.di2b = 2.0 * gamma * std::pow(inv.j, -4.0 / 3.0);
    f.dj = 0.0;
    return f;
}

}  // namespace

UniaxialSensitivities uniaxial_sensitivities(const ModelSpec& m, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("uniaxial stretch must be positive");
    const DeformationState st{lambda, 1.0, 0.0};
    const Invariants inv = invariants(st);
    const ChainFactors fl = lambda_factors(inv, lambda, 1.0);
    const ChainFactors fa = alpha_factors(inv, lambda, 1.0);
    const double stretches[3] = {lambda, 1.0, 1.0};  // slot 0 loads, slot 1 is alpha
    UniaxialSensitivities out;
    const std::size_t n = m.terms.size();
    out.p11_unit.resize(n);
    out.p11_ds_unit.resize(n);
    out.p22_unit.resize(n);
    out.p22_ds_unit.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const TermSpec& term = m.terms[i];
        const TermPartials t = term_partials(term.id, term.w_star, inv, stretches);
        out.p11_unit[i] = t.d_i1b * fl.di1b + t.d_i2b * fl.di2b + t.d_j * fl.dj + t.df_dl[0];
        out.p22_unit[i] = t.d_i1b * fa.di1b + t.d_i2b * fa.di2b + t.d_j * fa.dj + t.df_dl[1];
        out.p11_ds_unit[i] =
            t.ds_i1b * fl.di1b + t.ds_i2b * fl.di2b + t.ds_j * fl.dj + t.dsdf_dl[0];
        out.p22_ds_unit[i] =
            t.ds_i1b * fa.di1b + t.ds_i2b * fa.di2b + t.ds_j * fa.dj + t.dsdf_dl[1];
    }
    return out;
}

ShearSensitivities shear_sensitivities(const ModelSpec& m, double gamma, double lambda) {
    const DeformationState st{lambda, 1.0, gamma};
    const Invariants inv = invariants(st);
    const ChainFactors fg = gamma_factors(inv, gamma);
    const PrincipalStretches ps = principal_stretches(st);
    const double stretches[3] = {ps.l1, ps.l2, ps.l3};
    ShearSensitivities out;
    const std::size_t n = m.terms.size();
    out.p12_unit.resize(n);
    out.p12_ds_unit.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const TermSpec& term = m.terms[i];
        const TermPartials t = term_partials(term.id, term.w_star, inv, stretches);
        out.p12_unit[i] = t.d_i1b * fg.di1b + t.d_i2b * fg.di2b +
                          t.df_dl[0] * ps.dl1_dgamma + t.df_dl[1] * ps.dl2_dgamma;
        out.p12_ds_unit[i] = t.ds_i1b * fg.di1b + t.ds_i2b * fg.di2b +
                             t.dsdf_dl[0] * ps.dl1_dgamma + t.dsdf_dl[1] * ps.dl2_dgamma;
    }
    return out;
}

StressResult uniaxial_stress(const ModelSpec& m, double lambda) {
    const UniaxialSensitivities s = uniaxial_sensitivities(m, lambda);
    StressResult r;
    for (std::size_t i = 0; i < m.terms.size(); ++i) {
        r.p11 += m.terms[i].w * s.p11_unit[i];
        r.p22 += m.terms[i].w * s.p22_unit[i];
    }
    return r;
}

double shear_stress(const ModelSpec& m, double gamma, double lambda) {
    const ShearSensitivities s = shear_sensitivities(m, gamma, lambda);
    double p12 = 0.0;
    for (std::size_t i = 0; i < m.terms.size(); ++i) p12 += m.terms[i].w * s.p12_unit[i];
    return p12;
}

double zero_stress_residual(const ModelSpec& m) {
    const StressResult u = uniaxial_stress(m, 1.0);
    const double p12 = shear_stress(m, 0.0, 1.0);
    return std::abs(u.p11) + std::abs(u.p22) + std::abs(p12);
}

}  // namespace foamfit
