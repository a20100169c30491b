#pragma once

#include "foamfit/kinematics.hpp"
#include "foamfit/model.hpp"

namespace foamfit {

// Unit-weight (w = 1) evaluation of one library term: value plus every
// partial the stress assembly and the weight gradients need. Invariant terms
// populate d_* and ds_*; principal-stretch terms populate df_dl / dsdf_dl
// per stretch slot. ds is d g / d s at fixed state.
struct TermPartials {
    double g = 0.0;
    double d_i1b = 0.0, d_i2b = 0.0, d_j = 0.0;
    double ds = 0.0;
    double ds_i1b = 0.0, ds_i2b = 0.0, ds_j = 0.0;
    double df_dl[3] = {0.0, 0.0, 0.0};
    double dsdf_dl[3] = {0.0, 0.0, 0.0};
};

// stretches: the physical (unsorted) principal stretches of the state, used
// by terms 13/14 only. Throws SaturationError when an exponential argument
// passes the overflow guard.
TermPartials term_partials(int id, double w_star, const Invariants& inv,
                           const double stretches[3]);

// Total strain energy in kPa. Evaluates to exactly 0 at the identity for
// every admissible model: I1b - 3, ln J, and li - 1 are all IEEE-exact zeros.
double energy(const ModelSpec& m, const DeformationState& state);

}  // namespace foamfit
