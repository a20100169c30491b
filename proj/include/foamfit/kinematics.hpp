#pragma once

#include "foamfit/types.hpp"

namespace foamfit {

// Constrained deformation gradient
//   F = [ lambda  gamma  0 ]
//       [   0     alpha  0 ]
//       [   0       0    1 ]
// covering uniaxial tension/compression (gamma = 0) and simple shear on a
// pre-stretched sample (alpha = 1, lambda = pre-compression stretch).
struct DeformationState {
    double lambda = 1.0;
    double alpha = 1.0;
    double gamma = 0.0;

    static DeformationState identity() { return {}; }
    static DeformationState tension(double lambda);      // lambda >= 1
    static DeformationState compression(double lambda);  // 0 < lambda <= 1
    static DeformationState shear(double gamma, double lambda = 1.0);
};

// Scalar invariants of C = F^T F plus their isochoric counterparts.
struct Invariants {
    double i1;      // tr C
    double i2;      // 1/2 (tr^2 C - tr C^2)
    double j;       // det F
    double i1_bar;  // i1 * j^(-2/3)
    double i2_bar;  // i2 * j^(-4/3)
};

// Closed forms:
//   i1 = 1 + alpha^2 + lambda^2 + gamma^2
//   i2 = alpha^2 + gamma^2 + lambda^2 + alpha^2 lambda^2
//   j  = lambda * alpha
Invariants invariants(const DeformationState& s);

// Principal stretches (singular values of F) with shear sensitivities.
// For gamma = 0 the stretches are (lambda, alpha, 1) sorted descending and the
// gamma-derivatives are 0 except at the identity, where the analytic limits
// are +1/2 and -1/2. For shear states (alpha = 1) l1 >= l2 are the in-plane
// pair with l1*l2 = lambda and l3 = 1.
struct PrincipalStretches {
    double l1, l2, l3;
    double dl1_dgamma = 0.0;
    double dl2_dgamma = 0.0;
};

PrincipalStretches principal_stretches(const DeformationState& s);

}  // namespace foamfit
