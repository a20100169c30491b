#pragma once

#include <cstdint>

#include "foamfit/loss.hpp"

namespace foamfit {

struct TrainConfig {
    Architecture architecture = Architecture::SI_MI;
    double alpha = 0.0;       // L0.5 strength for the regularized stage
    int epochs = 15000;       // unregularized budget; also caps the next field
    int warm_epochs = 5000;   // epochs withheld from regularized refinement
    int batch_size = 64;      // >= dataset size means full-batch steps
    double learning_rate = 0.01;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TraceRow {
    int epoch;
    LossBreakdown parts;
};

struct FitReport {
    std::string label;  // dataset label
    Architecture architecture = Architecture::SI_MI;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    ModelSpec model;
    int nonzero_terms = 0;
    double r2_ten = 0.0, r2_com = 0.0, r2_shr = 0.0;
    std::vector<ConvexityFlag> polyconvexity;
    std::vector<TraceRow> loss_trace;

    double min_mode_r2() const;
};

// Per-mode model predictions on the dataset's own grids (shear evaluated at
// the dataset's pre-stretch).
std::vector<double> predict_mode(const ModelSpec& m, const FoamDataset& data, Mode mode);

// Two-stage fit, Adam with projection to the admissible orthant throughout.
// Stage 1 runs the full epoch budget unregularized; for alpha > 0 a second
// stage of epochs - warm_epochs refines the converged weights under the
// regularizer. Equivalent to the last cell of sparsity_sweep over {0, alpha}.
// Sparsifying a half-trained model instead keeps redundant term pairs alive,
// so the regularized stage always starts from the converged dense fit. Dead
// terms are pruned to exactly 0 afterwards. Deterministic per (config, seed).
// Throws DomainError when the loss turns non-finite.
FitReport fit(const TrainConfig& config, const FoamDataset& data);

// One fit per alpha (ascending). The alpha = 0 baseline runs the full epoch
// budget; every alpha > 0 entry warm-starts from the baseline's unpruned
// weights and runs a fresh regularized stage of epochs - warm_epochs.
std::vector<FitReport> sparsity_sweep(const TrainConfig& config, const FoamDataset& data,
                                      const std::vector<double>& alphas);

// Synthetic three-mode dataset generated from a known model on the built-in
// stretch/strain grids; the recovery oracle for the training loop.
FoamDataset synthesize_dataset(const ModelSpec& m, const std::string& label,
                               double shear_prestretch = 1.0);

}  // namespace foamfit
