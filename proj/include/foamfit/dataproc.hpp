#pragma once

#include <string>
#include <vector>

#include "foamfit/types.hpp"

namespace foamfit {

// A stretch-stress (or shear-strain-stress) polyline. x is the stretch for
// uniaxial modes, the shear strain for shear; y is Piola stress in kPa.
// y_std is empty or sized like y. Processed curves keep x strictly monotone;
// raw reduced recordings may sweep back and forth until cycle-averaged.
struct Curve {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> y_std;

    bool operator==(const Curve&) const = default;
    std::size_t size() const { return x.size(); }
};

struct FoamDataset {
    std::string label;
    Curve tension;      // lambda >= 1, P11 >= 0
    Curve compression;  // lambda <= 1, P11 <= 0 (signed convention)
    Curve shear;        // gamma >= 0, P12
    // stretch held on the sample while it is sheared; the built-in foams are
    // pre-compressed to 0.8 before torsion
    double shear_prestretch = 1.0;

    const Curve& mode_curve(Mode m) const;
};

// Instrument geometry, mm / mm^2. Only the fields a mode needs are read:
// tension (area, length), compression (area, height), shear (radius, height).
struct RawGeometry {
    double area = 0.0;
    double length = 0.0;
    double height = 0.0;
    double radius = 0.0;
};

// One recording channel pair over time. signal is force (N) for uniaxial
// modes and torque (N*mm) for shear; displacement is elongation u (mm) for
// tension, current height h (mm) for compression, twist angle phi (rad) for
// shear.
struct RawRecording {
    Mode mode = Mode::Tension;
    std::vector<double> time;
    std::vector<double> signal;
    std::vector<double> displacement;
    RawGeometry geometry;
};

// Pointwise conversion to a stretch/strain-stress polyline in kPa:
//   tension      lambda = 1 + u/L,  P11 = F/A
//   compression  lambda = h/H,      P11 = F/A
//   shear        gamma = (R/H) phi, P12 = 2 T / (pi R^3)
Curve reduce_recording(const RawRecording& rec);

// Chronological monotone segments (loading / unloading strokes) of a raw
// reduced polyline, split at direction reversals.
std::vector<Curve> split_monotone_segments(const Curve& raw);

enum class CycleAveragePolicy {
    // average the first loading and the final unloading stroke
    TensionFirstLoadFinalUnload,
    // drop the first loading and unloading strokes, average the rest
    CompressionDropFirstCycle,
};

// Averages the selected strokes on a uniform grid over their common x-range
// and shifts the result so the stress at the reference state (x nearest 1
// for stretches, clamped into range) is exactly zero.
Curve cycle_average(const std::vector<Curve>& segments, CycleAveragePolicy policy,
                    int grid_points = 200);

// Zero-intercept least-squares slope sum(e*s)/sum(e*e) over points with
// 0 < strain <= cap, strain = x - 1 for uniaxial modes and x for shear.
double linear_stiffness(const Curve& curve, Mode mode, double strain_cap = 0.10);

// Unloading-to-loading area ratio of a hysteresis loop, trapezoid rule with
// compensated summation. Both curves must span the same x-range.
double energy_return(const Curve& loading, const Curve& unloading);

// 1 - SS_res / SS_tot, SS_tot about the observed mean.
double r_squared(const std::vector<double>& predicted, const std::vector<double>& observed);

}  // namespace foamfit
