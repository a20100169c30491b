#include "foamfit/kinematics.hpp"

#include <cmath>

namespace foamfit {

DeformationState DeformationState::tension(double lambda) {
    if (!(lambda >= 1.0))
        throw DomainError("tension stretch must be >= 1, got " + std::to_string(lambda));
    return {lambda, 1.0, 0.0};
}

DeformationState DeformationState::compression(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw DomainError("compression stretch must be in (0, 1], got " + std::to_string(lambda));
    return {lambda, 1.0, 0.0};
}

DeformationState DeformationState::shear(double gamma, double lambda) {
    if (!(gamma >= 0.0))
        throw DomainError("shear strain must be >= 0, got " + std::to_string(gamma));
    if (!(lambda > 0.0))
        throw DomainError("shear pre-stretch must be > 0, got " + std::to_string(lambda));
    return {lambda, 1.0, gamma};
}

Invariants invariants(const DeformationState& s) {
    if (!(s.lambda > 0.0) || !(s.alpha > 0.0))
        throw DomainError("stretches must be positive");
    const double l2 = s.lambda * s.lambda;
    const double a2 = s.alpha * s.alpha;
    const double g2 = s.gamma * s.gamma;
    Invariants inv;
    inv.i1 = 1.0 + a2 + l2 + g2;
    inv.i2 = a2 + g2 + l2 + a2 * l2;
    inv.j = s.lambda * s.alpha;
    inv.i1_bar = inv.i1 * std::pow(inv.j, -2.0 / 3.0);
    inv.i2_bar = inv.i2 * std::pow(inv.j, -4.0 / 3.0);
    return inv;
}

PrincipalStretches principal_stretches(const DeformationState& s) {
    if (!(s.lambda > 0.0) || !(s.alpha > 0.0))
        throw DomainError("stretches must be positive");
    if (s.gamma == 0.0) {
        double v[3] = {s.lambda, s.alpha, 1.0};
        if (v[0] < v[1]) std::swap(v[0], v[1]);
        if (v[1] < v[2]) std::swap(v[1], v[2]);
        if (v[0] < v[1]) std::swap(v[0], v[1]);
        PrincipalStretches p{v[0], v[1], v[2]};
        if (s.lambda == 1.0 && s.alpha == 1.0) {
            // coalescent pair: lambda_{1,2} = 1 +- gamma/2 + O(gamma^2)
            p.dl1_dgamma = 0.5;
            p.dl2_dgamma = -0.5;
        }
        return p;
    }
    if (s.alpha != 1.0)
        throw DomainError("shear principal stretches assume alpha = 1");
    const double l2 = s.lambda * s.lambda;
    const double g2 = s.gamma * s.gamma;
    const double sum = 1.0 + l2 + g2;
    // sum^2 - 4 l2 = (1 - l2)^2 + g2 (g2 + 2 + 2 l2) > 0 away from the identity
    const double disc = std::sqrt(sum * sum - 4.0 * l2);
    PrincipalStretches p;
    p.l1 = std::sqrt(0.5 * (sum + disc));
    p.l2 = std::sqrt(0.5 * (sum - disc));
    p.l3 = 1.0;
    p.dl1_dgamma = 0.5 * s.gamma * (1.0 + sum / disc) / p.l1;
    p.dl2_dgamma = 0.5 * s.gamma * (1.0 - sum / disc) / p.l2;
    return p;
}

}  // namespace foamfit
