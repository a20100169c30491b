#include "foamfit/energy.hpp"

#include <cmath>

namespace foamfit {

namespace {

double guarded_exp(int id, double arg) {
    if (arg > kExpArgGuard) throw SaturationError(id, arg);
    return std::exp(arg);
}

// x^p as exp(p ln x) with the same overflow guard
double guarded_pow(int id, double x, double p) {
    const double arg = p * std::log(x);
    if (arg > kExpArgGuard) throw SaturationError(id, arg);
    return std::pow(x, p);
}

}  // namespace

TermPartials term_partials(int id, double s, const Invariants& inv,
                           const double stretches[3]) {
    TermPartials t;
    const double u1 = inv.i1_bar - 3.0;
    const double u2 = inv.i2_bar - 3.0;
    const double j = inv.j;
    const double lnj = std::log(j);
    switch (id) {
        case 1:
            t.g = u1;
            t.d_i1b = 1.0;
            return t;
        case 2: {
            const double e = guarded_exp(id, s * u1);
            t.g = e - 1.0;
            t.d_i1b = s * e;
            t.ds = u1 * e;
            t.ds_i1b = e * (1.0 + s * u1);
            return t;
        }
        case 3:
            t.g = u1 * u1;
            t.d_i1b = 2.0 * u1;
            return t;
        case 4: {
            const double q = u1 * u1;
            const double e = guarded_exp(id, s * q);
            t.g = e - 1.0;
            t.d_i1b = 2.0 * s * u1 * e;
            t.ds = q * e;
            t.ds_i1b = 2.0 * u1 * e * (1.0 + s * q);
            return t;
        }
        case 5:
            t.g = u2;
            t.d_i2b = 1.0;
            return t;
        case 6: {
            const double e = guarded_exp(id, s * u2);
            t.g = e - 1.0;
            t.d_i2b = s * e;
            t.ds = u2 * e;
            t.ds_i2b = e * (1.0 + s * u2);
            return t;
        }
        case 7:
            t.g = u2 * u2;
            t.d_i2b = 2.0 * u2;
            return t;
        case 8: {
            const double q = u2 * u2;
            const double e = guarded_exp(id, s * q);
            t.g = e - 1.0;
            t.d_i2b = 2.0 * s * u2 * e;
            t.ds = q * e;
            t.ds_i2b = 2.0 * u2 * e * (1.0 + s * q);
            return t;
        }
        case 9: {
            const double js = guarded_pow(id, j, s);
            const double jsm1 = js / j;
            t.g = js - s * lnj - 1.0;
            t.d_j = s * (jsm1 - 1.0 / j);
            t.ds = js * lnj - lnj;
            t.ds_j = (jsm1 - 1.0 / j) + s * jsm1 * lnj;
            return t;
        }
        case 10: {
            const double q = lnj * lnj;
            const double e = guarded_exp(id, s * q);
            t.g = e - 1.0;
            t.d_j = 2.0 * s * lnj / j * e;
            t.ds = q * e;
            t.ds_j = 2.0 * lnj / j * e * (1.0 + s * q);
            return t;
        }
        case 11:
        case 12: {
            const double u = (id == 11) ? u1 : u2;
            const double js = guarded_pow(id, j, s);
            const double jsm1 = js / j;
            t.g = js * u;
            (id == 11 ? t.d_i1b : t.d_i2b) = js;
            t.d_j = s * jsm1 * u;
            t.ds = js * lnj * u;
            (id == 11 ? t.ds_i1b : t.ds_i2b) = js * lnj;
            t.ds_j = jsm1 * u * (1.0 + s * lnj);
            return t;
        }
        case 13:
        case 14: {
            for (int k = 0; k < 3; ++k) {
                const double x = stretches[k];
                const double lnx = std::log(x);
                const double xs = guarded_pow(id, x, s);
                const double xsm1 = xs / x;
                t.g += xs - s * lnx - 1.0;
                t.ds += lnx * (xs - 1.0);
                t.df_dl[k] = s * (xsm1 - 1.0 / x);
                t.dsdf_dl[k] = (xsm1 - 1.0 / x) + s * xsm1 * lnx;
            }
            return t;
        }
    }
    throw DomainError("unknown term id " + std::to_string(id));
}

double energy(const ModelSpec& m, const DeformationState& state) {
    const Invariants inv = invariants(state);
    double stretches[3];
    if (state.gamma == 0.0) {
        stretches[0] = state.lambda;
        stretches[1] = state.alpha;
        stretches[2] = 1.0;
    } else {
        const PrincipalStretches ps = principal_stretches(state);
        stretches[0] = ps.l1;
        stretches[1] = ps.l2;
        stretches[2] = ps.l3;
    }
    double psi = 0.0;
    for (const TermSpec& term : m.terms) {
        if (term.w == 0.0) continue;
        psi += term.w * term_partials(term.id, term.w_star, inv, stretches).g;
    }
    return psi;
}

}  // namespace foamfit
