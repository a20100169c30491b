#include "foamfit/loss.hpp"

#include <cmath>

namespace foamfit {

namespace {

double norm_sq(const Curve& c, const char* mode) {
    double peak = 0.0;
    for (double v : c.y) peak = std::max(peak, std::abs(v));
    if (peak == 0.0)
        throw DomainError(std::string("loss: all-zero ") + mode + " stresses, cannot normalize");
    return peak * peak;
}

}  // namespace

LossGradient loss_with_gradient(const ModelSpec& m, const FoamDataset& data, double alpha,
                                const std::vector<DataPointRef>* subset) {
    for (Mode mode : {Mode::Tension, Mode::Compression, Mode::Shear})
        if (data.mode_curve(mode).size() == 0)
            throw DomainError(std::string("loss: dataset has no ") + mode_name(mode) +
                              " points");
    const double nt = norm_sq(data.tension, "tension");
    const double nc = norm_sq(data.compression, "compression");
    const double ns = norm_sq(data.shear, "shear");

    LossGradient out;
    const std::size_t nterms = m.terms.size();
    out.dw.assign(nterms, 0.0);
    out.ds.assign(nterms, 0.0);

    auto add_uniaxial = [&](Mode mode, int idx) {
        const Curve& c = data.mode_curve(mode);
        const double norm = mode == Mode::Tension ? nt : nc;
        const UniaxialSensitivities s = uniaxial_sensitivities(m, c.x[idx]);
        double p11 = 0.0, p22 = 0.0;
        for (std::size_t i = 0; i < nterms; ++i) {
            p11 += m.terms[i].w * s.p11_unit[i];
            p22 += m.terms[i].w * s.p22_unit[i];
        }
        const double r = p11 - c.y[idx];
        (mode == Mode::Tension ? out.parts.tension_term : out.parts.compression_term) +=
            r * r / norm;
        out.parts.p22_penalty += p22 * p22 / norm;
        for (std::size_t i = 0; i < nterms; ++i) {
            out.dw[i] += 2.0 * (r * s.p11_unit[i] + p22 * s.p22_unit[i]) / norm;
            out.ds[i] += 2.0 * m.terms[i].w *
                         (r * s.p11_ds_unit[i] + p22 * s.p22_ds_unit[i]) / norm;
        }
    };
    auto add_shear = [&](int idx) {
        const Curve& c = data.shear;
        const ShearSensitivities s = shear_sensitivities(m, c.x[idx], data.shear_prestretch);
        double p12 = 0.0;
        for (std::size_t i = 0; i < nterms; ++i) p12 += m.terms[i].w * s.p12_unit[i];
        const double r = p12 - c.y[idx];
        out.parts.shear_term += r * r / ns;
        for (std::size_t i = 0; i < nterms; ++i) {
            out.dw[i] += 2.0 * r * s.p12_unit[i] / ns;
            out.ds[i] += 2.0 * m.terms[i].w * r * s.p12_ds_unit[i] / ns;
        }
    };

    if (subset) {
        for (const DataPointRef& p : *subset) {
            if (p.index < 0 ||
                p.index >= static_cast<int>(data.mode_curve(p.mode).size()))
                throw DomainError("loss: data point index out of range");
            if (p.mode == Mode::Shear)
                add_shear(p.index);
            else
                add_uniaxial(p.mode, p.index);
        }
    } else {
        for (std::size_t i = 0; i < data.tension.size(); ++i)
            add_uniaxial(Mode::Tension, static_cast<int>(i));
        for (std::size_t i = 0; i < data.compression.size(); ++i)
            add_uniaxial(Mode::Compression, static_cast<int>(i));
        for (std::size_t i = 0; i < data.shear.size(); ++i)
            add_shear(static_cast<int>(i));
    }

    // kPenaltyScale damps the raw sum: undamped, the penalty gradient
    // 0.5/sqrt(w) dwarfs the normalized residual gradients by two orders of
    // magnitude for kPa-sized weights and alpha = 1 collapses every model to
    // one or two terms with ruined compression fits. The subgradient at
    // w = 0 is taken as 0.
    const double press = alpha * kPenaltyScale;
    for (std::size_t i = 0; i < nterms; ++i) {
        const double w = m.terms[i].w;
        if (w > 0.0) {
            out.parts.regularization += press * std::sqrt(w);
            out.dw[i] += press * 0.5 / std::sqrt(w);
        }
        if (!term_has_inner(m.terms[i].id)) out.ds[i] = 0.0;
    }
    out.parts.total = out.parts.tension_term + out.parts.compression_term +
                      out.parts.shear_term + out.parts.p22_penalty +
                      out.parts.regularization;
    return out;
}

LossBreakdown loss(const ModelSpec& m, const FoamDataset& data, double alpha) {
    return loss_with_gradient(m, data, alpha).parts;
}

}  // namespace foamfit
