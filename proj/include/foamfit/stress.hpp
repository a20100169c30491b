#pragma once

#include "foamfit/energy.hpp"

namespace foamfit {

// Piola stress components along the constrained loading paths, computed as
// exact total derivatives of the energy: P11 = d psi / d lambda and
// P22 = d psi / d alpha at (lambda, 1, 0); P12 = d psi / d gamma at
// (lambda_pre, 1, gamma), where J never depends on gamma.
struct StressResult {
    double p11 = 0.0;
    double p22 = 0.0;
    double p12 = 0.0;
};

// Per-term stress sensitivities at one state, rows in model.terms order.
// p*_unit is the term's stress at w = 1; p*_ds_unit is d(stress)/d(inner
// weight) at w = 1, so dP/dw_i = p_unit[i] and dP/ds_i = w_i * p_ds_unit[i].
struct UniaxialSensitivities {
    std::vector<double> p11_unit, p11_ds_unit;
    std::vector<double> p22_unit, p22_ds_unit;
};

struct ShearSensitivities {
    std::vector<double> p12_unit, p12_ds_unit;
};

UniaxialSensitivities uniaxial_sensitivities(const ModelSpec& m, double lambda);
ShearSensitivities shear_sensitivities(const ModelSpec& m, double gamma,
                                       double lambda = 1.0);

// (P11, P22) at the uniaxial state (lambda, 1, 0)
StressResult uniaxial_stress(const ModelSpec& m, double lambda);

// P12 at the shear state (lambda, 1, gamma)
double shear_stress(const ModelSpec& m, double gamma, double lambda = 1.0);

// |P11| + |P22| + |P12| at the identity; admissible models give exactly 0
double zero_stress_residual(const ModelSpec& m);

}  // namespace foamfit
