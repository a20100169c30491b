#include "foamfit/dataproc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace foamfit {

const Curve& FoamDataset::mode_curve(Mode m) const {
    switch (m) {
        case Mode::Tension: return tension;
        case Mode::Compression: return compression;
        case Mode::Shear: return shear;
    }
    throw DomainError("bad mode");
}

Curve reduce_recording(const RawRecording& rec) {
    const std::size_t n = rec.signal.size();
    if (rec.displacement.size() != n)
        throw DomainError("signal/displacement length mismatch");
    const RawGeometry& g = rec.geometry;
    Curve out;
    out.x.resize(n);
    out.y.resize(n);
    switch (rec.mode) {
        case Mode::Tension:
            if (g.area <= 0.0 || g.length <= 0.0)
                throw DomainError("tension recording needs area > 0 and length > 0");
            for (std::size_t i = 0; i < n; ++i) {
                out.x[i] = 1.0 + rec.displacement[i] / g.length;
                out.y[i] = rec.signal[i] / g.area * kKpaPerNPerMm2;
            }
            break;
        case Mode::Compression:
            if (g.area <= 0.0 || g.height <= 0.0)
                throw DomainError("compression recording needs area > 0 and height > 0");
            for (std::size_t i = 0; i < n; ++i) {
                out.x[i] = rec.displacement[i] / g.height;
                out.y[i] = rec.signal[i] / g.area * kKpaPerNPerMm2;
            }
            break;
        case Mode::Shear:
            if (g.radius <= 0.0 || g.height <= 0.0)
                throw DomainError("shear recording needs radius > 0 and height > 0");
            for (std::size_t i = 0; i < n; ++i) {
                out.x[i] = g.radius / g.height * rec.displacement[i];
                out.y[i] = 2.0 * rec.signal[i] /
                           (std::numbers::pi * g.radius * g.radius * g.radius) *
                           kKpaPerNPerMm2;
            }
            break;
    }
    return out;
}

std::vector<Curve> split_monotone_segments(const Curve& raw) {
    std::vector<Curve> segments;
    const std::size_t n = raw.size();
    if (n < 2) {
        if (n) segments.push_back(raw);
        return segments;
    }
    std::size_t start = 0;
    int dir = 0;  // direction of the current stroke
    for (std::size_t i = 1; i < n; ++i) {
        const double dx = raw.x[i] - raw.x[i - 1];
        const int d = dx > 0.0 ? 1 : dx < 0.0 ? -1 : 0;
        if (d == 0) continue;
        if (dir == 0) {
            dir = d;
        } else if (d != dir) {
            Curve seg;
            seg.x.assign(raw.x.begin() + start, raw.x.begin() + i);
            seg.y.assign(raw.y.begin() + start, raw.y.begin() + i);
            segments.push_back(std::move(seg));
            start = i - 1;  // reversal point opens the next stroke
            dir = d;
        }
    }
    Curve seg;
    seg.x.assign(raw.x.begin() + start, raw.x.end());
    seg.y.assign(raw.y.begin() + start, raw.y.end());
    segments.push_back(std::move(seg));
    return segments;
}

namespace {

// linear interpolation with flat extrapolation at the ends
double interp(const Curve& c, double x) {
    std::size_t n = c.size();
    if (n == 0) throw DomainError("empty curve");
    const bool ascending = c.x.front() <= c.x.back();
    auto value = [&](std::size_t i) { return c.y[i]; };
    // normalize to ascending index order
    auto xi = [&](std::size_t i) { return ascending ? c.x[i] : c.x[n - 1 - i]; };
    auto yi = [&](std::size_t i) { return ascending ? value(i) : value(n - 1 - i); };
    if (x <= xi(0)) return yi(0);
    if (x >= xi(n - 1)) return yi(n - 1);
    std::size_t lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        (xi(mid) <= x ? lo : hi) = mid;
    }
    const double t = (x - xi(lo)) / (xi(hi) - xi(lo));
    return yi(lo) + t * (yi(hi) - yi(lo));
}

}  // namespace

Curve cycle_average(const std::vector<Curve>& segments, CycleAveragePolicy policy,
                    int grid_points) {
    if (segments.empty()) throw DomainError("cycle_average: no segments");
    if (grid_points < 2) throw DomainError("cycle_average: grid too small");
    std::vector<const Curve*> picked;
    switch (policy) {
        case CycleAveragePolicy::TensionFirstLoadFinalUnload:
            picked.push_back(&segments.front());
            if (segments.size() > 1) picked.push_back(&segments.back());
            break;
        case CycleAveragePolicy::CompressionDropFirstCycle:
            if (segments.size() <= 2)
                throw DomainError("cycle_average: need strokes beyond the first cycle");
            for (std::size_t i = 2; i < segments.size(); ++i) picked.push_back(&segments[i]);
            break;
    }
    double lo = -1e300, hi = 1e300;
    for (const Curve* c : picked) {
        if (c->size() < 2) throw DomainError("cycle_average: degenerate stroke");
        auto [mn, mx] = std::minmax_element(c->x.begin(), c->x.end());
        lo = std::max(lo, *mn);
        hi = std::min(hi, *mx);
    }
    if (!(lo < hi)) throw DomainError("cycle_average: strokes do not overlap in x");
    Curve out;
    out.x.resize(grid_points);
    out.y.assign(grid_points, 0.0);
    for (int i = 0; i < grid_points; ++i)
        out.x[i] = lo + (hi - lo) * i / (grid_points - 1);
    for (const Curve* c : picked)
        for (int i = 0; i < grid_points; ++i) out.y[i] += interp(*c, out.x[i]);
    for (double& y : out.y) y /= static_cast<double>(picked.size());
    // zero at the reference state
    const double yref = interp(out, std::clamp(1.0, lo, hi));
    for (double& y : out.y) y -= yref;
    return out;
}

double linear_stiffness(const Curve& curve, Mode mode, double strain_cap) {
    double se_s = 0.0, se_e = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const double strain = mode == Mode::Shear ? curve.x[i] : curve.x[i] - 1.0;
        // the relative slack keeps a nominal boundary point (say 10% strain
        // stored as 1.100) from dropping out over representation noise
        if (strain == 0.0 || std::abs(strain) > strain_cap * (1.0 + 1e-9)) continue;
        se_s += strain * curve.y[i];
        se_e += strain * strain;
        any = true;
    }
    if (!any) throw DomainError("linear_stiffness: no points within the strain cap");
    return se_s / se_e;
}

namespace {

// trapezoid with Kahan compensation; dense analytic fixtures need the
// summation error to stay near machine epsilon
double trapezoid(const Curve& c) {
    if (c.size() < 2) throw DomainError("trapezoid: need >= 2 points");
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        const double term = 0.5 * (c.x[i] - c.x[i - 1]) * (c.y[i] + c.y[i - 1]);
        const double t = term - comp;
        const double s = sum + t;
        comp = (s - sum) - t;
        sum = s;
    }
    return sum;
}

}  // namespace

double energy_return(const Curve& loading, const Curve& unloading) {
    const double load = std::abs(trapezoid(loading));
    const double unload = std::abs(trapezoid(unloading));
    if (load == 0.0) throw DomainError("energy_return: zero loading area");
    return unload / load;
}

double r_squared(const std::vector<double>& predicted, const std::vector<double>& observed) {
    if (predicted.size() != observed.size() || observed.empty())
        throw DomainError("r_squared: size mismatch");
    double mean = 0.0;
    for (double v : observed) mean += v;
    mean /= static_cast<double>(observed.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        ss_res += (predicted[i] - observed[i]) * (predicted[i] - observed[i]);
        ss_tot += (observed[i] - mean) * (observed[i] - mean);
    }
    if (ss_tot == 0.0) throw DomainError("r_squared: constant observed data");
    return 1.0 - ss_res / ss_tot;
}

}  // namespace foamfit
