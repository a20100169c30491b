#pragma once

#include "foamfit/training.hpp"

namespace foamfit {

struct ModelEval {
    double r2_ten = 0.0, r2_com = 0.0, r2_shr = 0.0;
};

// Per-mode goodness of fit of a model against a dataset's mean curves.
ModelEval evaluate_model(const ModelSpec& m, const FoamDataset& data);

// The six-cell experiment: {si, si-mi, si-ps} x {alpha 0, alpha 1}, each an
// independent two-stage fit under the template config (architecture/alpha
// overridden per cell, one shared seed). Cell order: si/0, si/1, si-mi/0,
// si-mi/1, si-ps/0, si-ps/1.
std::vector<FitReport> run_grid(const TrainConfig& tmpl, const FoamDataset& data);

// Fewest-terms-without-significant-loss rule. Candidates are reports whose
// min-mode R2 is within margin of their own architecture's alpha = 0
// baseline; ties break toward higher min-mode R2, then lower alpha. When no
// architecture baseline exists the lowest-alpha report is returned with the
// warning flag set.
struct Selection {
    FitReport report;
    bool fallback_warning = false;
};
Selection select_model(const std::vector<FitReport>& reports, double margin = 0.02);

// JSON model document: {label, architecture, alpha, terms: [{id, form,
// w_kpa, w_star}], r2: {ten, com, shr}, psi}. Weights round-trip exactly.
std::string export_model_json(const FitReport& report);
std::string export_model_json(const ModelSpec& m, const std::string& label,
                              Architecture arch, double alpha, const ModelEval& r2);
ModelSpec import_model(const std::string& json_text);

// label, architecture, alpha, seed, nonzero terms, per-mode R2, convexity
std::string report_csv_header();
std::string report_csv_row(const FitReport& report);

}  // namespace foamfit
