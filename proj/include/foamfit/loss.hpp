#pragma once

#include "foamfit/dataproc.hpp"
#include "foamfit/stress.hpp"

namespace foamfit {

// Penalty pressure at alpha = 1, in 1/sqrt(kPa). Calibrated on the built-in
// foams: the largest value whose three-term models stay within ~0.01
// worst-mode R^2 of the dense fit (see the damping note in loss.cpp).
inline constexpr double kPenaltyScale = 1.0 / 120.0;

// Normalized multi-mode objective:
//   sum_ten [(P11 - d)^2 + P22^2] / max|d_ten|^2
// + sum_com [(P11 - d)^2 + P22^2] / max|d_com|^2
// + sum_shr  (P12 - d)^2          / max|d_shr|^2
// + alpha * kPenaltyScale * sum_i sqrt(w_i)        (outer weights only)
// The P22 rows are reported separately as p22_penalty; tension_term /
// compression_term / shear_term carry only the data residuals.
struct LossBreakdown {
    double tension_term = 0.0;
    double compression_term = 0.0;
    double shear_term = 0.0;
    double p22_penalty = 0.0;
    double regularization = 0.0;
    double total = 0.0;
};

struct DataPointRef {
    Mode mode;
    int index;
};

struct LossGradient {
    LossBreakdown parts;
    // per model.terms entry; ds is 0 for terms without an inner weight
    std::vector<double> dw, ds;
};

LossBreakdown loss(const ModelSpec& m, const FoamDataset& data, double alpha);

// subset = nullptr evaluates every data point (full batch). Normalizers are
// dataset-level constants either way; the regularization term is whole per
// call. The L0.5 subgradient at w = 0 is taken as 0.
LossGradient loss_with_gradient(const ModelSpec& m, const FoamDataset& data, double alpha,
                                const std::vector<DataPointRef>* subset = nullptr);

}  // namespace foamfit
