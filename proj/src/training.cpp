#include "foamfit/training.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace foamfit {

void TrainConfig::validate() const {
    if (epochs < 1) throw DomainError("epochs must be >= 1");
    if (warm_epochs < 0 || warm_epochs > epochs)
        throw DomainError("warm_epochs must lie in [0, epochs]");
    if (batch_size < 1) throw DomainError("batch_size must be >= 1");
    if (!(learning_rate > 0.0)) throw DomainError("learning_rate must be positive");
    if (alpha < 0.0) throw DomainError("alpha must be >= 0");
}

double FitReport::min_mode_r2() const { return std::min({r2_ten, r2_com, r2_shr}); }

std::vector<double> predict_mode(const ModelSpec& m, const FoamDataset& data, Mode mode) {
    const Curve& c = data.mode_curve(mode);
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = mode == Mode::Shear
                     ? shear_stress(m, c.x[i], data.shear_prestretch)
                     : uniaxial_stress(m, c.x[i]).p11;
    return out;
}

namespace {

constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEps = 1e-8;
constexpr double kInnerFloorExp = 1e-6;   // keeps exponential gradients alive
constexpr double kPruneRel = 1e-4;        // of the largest outer weight

// mt19937_64 output mapped to [0, 1) the same way on every implementation;
// std::uniform_real_distribution is not pinned by the standard
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ModelSpec init_model(Architecture arch, std::mt19937_64& rng) {
    ModelSpec m;
    for (int id : architecture_terms(arch)) {
        TermSpec t;
        t.id = id;
        t.w = uniform01(rng);
        if (term_has_inner(id)) {
            t.w_star = 2.0 * uniform01(rng);
            if (term_is_exponential(id)) t.w_star = std::max(t.w_star, kInnerFloorExp);
        }
        m.terms.push_back(t);
    }
    return m;
}

void project(ModelSpec& m) {
    for (TermSpec& t : m.terms) {
        t.w = std::max(t.w, 0.0);
        if (term_has_inner(t.id))
            t.w_star = std::max(t.w_star, term_is_exponential(t.id) ? kInnerFloorExp : 0.0);
    }
}

struct AdamState {
    std::vector<double> mw, vw, ms, vs;
    long step = 0;
    explicit AdamState(std::size_t n)
        : mw(n, 0.0), vw(n, 0.0), ms(n, 0.0), vs(n, 0.0) {}
};

void adam_step(ModelSpec& m, const LossGradient& g, AdamState& st, double lr) {
    ++st.step;
    const double c1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(st.step));
    const double c2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(st.step));
    for (std::size_t i = 0; i < m.terms.size(); ++i) {
        st.mw[i] = kAdamBeta1 * st.mw[i] + (1.0 - kAdamBeta1) * g.dw[i];
        st.vw[i] = kAdamBeta2 * st.vw[i] + (1.0 - kAdamBeta2) * g.dw[i] * g.dw[i];
        m.terms[i].w -= lr * (st.mw[i] / c1) / (std::sqrt(st.vw[i] / c2) + kAdamEps);
        if (!term_has_inner(m.terms[i].id)) continue;
        st.ms[i] = kAdamBeta1 * st.ms[i] + (1.0 - kAdamBeta1) * g.ds[i];
        st.vs[i] = kAdamBeta2 * st.vs[i] + (1.0 - kAdamBeta2) * g.ds[i] * g.ds[i];
        m.terms[i].w_star -= lr * (st.ms[i] / c1) / (std::sqrt(st.vs[i] / c2) + kAdamEps);
    }
    project(m);
}

// A term is dead when its weight is below kPruneRel x the largest weight, or
// when its peak stress contribution over the training grids is below
// kPruneRel x the peak total stress. The second clause catches terms that
// park a sizable weight behind a near-zero inner weight and contribute
// nothing to the fit.
void prune(ModelSpec& m, const FoamDataset& data) {
    double wmax = 0.0;
    for (const TermSpec& t : m.terms) wmax = std::max(wmax, t.w);
    const double threshold = kPruneRel * wmax;
    for (TermSpec& t : m.terms)
        if (t.w < threshold) t.w = 0.0;

    const std::size_t n = m.terms.size();
    std::vector<double> peak(n, 0.0);
    double total = 0.0;
    auto scan = [&](const std::vector<double>& unit) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = m.terms[i].w * unit[i];
            peak[i] = std::max(peak[i], std::abs(c));
            sum += c;
        }
        total = std::max(total, std::abs(sum));
    };
    for (Mode mode : {Mode::Tension, Mode::Compression})
        for (double x : data.mode_curve(mode).x) scan(uniaxial_sensitivities(m, x).p11_unit);
    for (double g : data.shear.x)
        scan(shear_sensitivities(m, g, data.shear_prestretch).p12_unit);
    for (std::size_t i = 0; i < n; ++i)
        if (peak[i] < kPruneRel * total) m.terms[i].w = 0.0;
}

// Runs one optimization stage from the given weights with a fresh optimizer
// state. Returns the final unpruned model and appends one trace row per epoch.
ModelSpec run_epochs(ModelSpec model, const TrainConfig& cfg, const FoamDataset& data,
                     int n_epochs, double alpha, int epoch_offset,
                     std::mt19937_64& rng, std::vector<TraceRow>& trace) {
    const int total_points = static_cast<int>(data.tension.size() +
                                              data.compression.size() + data.shear.size());
    const bool full_batch = cfg.batch_size >= total_points;
    std::vector<DataPointRef> points;
    if (!full_batch) {
        for (Mode mode : {Mode::Tension, Mode::Compression, Mode::Shear})
            for (int i = 0; i < static_cast<int>(data.mode_curve(mode).size()); ++i)
                points.push_back({mode, i});
    }
    AdamState st(model.terms.size());
    trace.reserve(trace.size() + static_cast<std::size_t>(n_epochs));
    for (int e = 1; e <= n_epochs; ++e) {
        LossBreakdown epoch_parts;
        if (full_batch) {
            LossGradient g = loss_with_gradient(model, data, alpha);
            epoch_parts = g.parts;
            adam_step(model, g, st, cfg.learning_rate);
        } else {
            epoch_parts = loss(model, data, alpha);
            std::shuffle(points.begin(), points.end(), rng);
            for (std::size_t off = 0; off < points.size();
                 off += static_cast<std::size_t>(cfg.batch_size)) {
                const std::size_t end =
                    std::min(points.size(), off + static_cast<std::size_t>(cfg.batch_size));
                std::vector<DataPointRef> batch(points.begin() + off, points.begin() + end);
                LossGradient g = loss_with_gradient(model, data, alpha, &batch);
                adam_step(model, g, st, cfg.learning_rate);
            }
        }
        if (!std::isfinite(epoch_parts.total))
            throw DomainError("training diverged at epoch " +
                              std::to_string(epoch_offset + e));
        trace.push_back({epoch_offset + e, epoch_parts});
    }
    return model;
}

FitReport finish_report(ModelSpec model, const TrainConfig& cfg, const FoamDataset& data,
                        double alpha, std::vector<TraceRow> trace) {
    prune(model, data);
    FitReport r;
    r.label = data.label;
    r.architecture = cfg.architecture;
    r.alpha = alpha;
    r.seed = cfg.seed;
    r.model = std::move(model);
    r.nonzero_terms = r.model.nonzero_terms();
    r.r2_ten = r_squared(predict_mode(r.model, data, Mode::Tension), data.tension.y);
    r.r2_com = r_squared(predict_mode(r.model, data, Mode::Compression), data.compression.y);
    r.r2_shr = r_squared(predict_mode(r.model, data, Mode::Shear), data.shear.y);
    r.polyconvexity = polyconvexity_flags(r.model);
    r.loss_trace = std::move(trace);
    return r;
}

}  // namespace

FitReport fit(const TrainConfig& config, const FoamDataset& data) {
    std::vector<double> alphas{0.0};
    if (config.alpha > 0.0) alphas.push_back(config.alpha);
    return sparsity_sweep(config, data, alphas).back();
}

std::vector<FitReport> sparsity_sweep(const TrainConfig& config, const FoamDataset& data,
                                      const std::vector<double>& alphas) {
    config.validate();
    if (alphas.empty()) throw DomainError("sparsity_sweep: empty alpha list");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] < 0.0) throw DomainError("sparsity_sweep: negative alpha");
        if (i && alphas[i] <= alphas[i - 1])
            throw DomainError("sparsity_sweep: alphas must be strictly ascending");
    }
    // shared unregularized baseline, full budget
    std::mt19937_64 rng(config.seed);
    ModelSpec base = init_model(config.architecture, rng);
    std::vector<TraceRow> base_trace;
    base = run_epochs(std::move(base), config, data, config.epochs, 0.0, 0, rng,
                      base_trace);
    std::vector<FitReport> reports;
    for (double a : alphas) {
        if (a == 0.0) {
            reports.push_back(finish_report(base, config, data, 0.0, base_trace));
            continue;
        }
        std::mt19937_64 cell_rng(config.seed);  // batching stream, if any
        std::vector<TraceRow> trace = base_trace;
        ModelSpec m = run_epochs(base, config, data, config.epochs - config.warm_epochs, a,
                                 config.epochs, cell_rng, trace);
        reports.push_back(finish_report(std::move(m), config, data, a, std::move(trace)));
    }
    return reports;
}

FoamDataset synthesize_dataset(const ModelSpec& m, const std::string& label,
                               double shear_prestretch) {
    m.validate();
    FoamDataset d;
    d.label = label;
    d.shear_prestretch = shear_prestretch;
    for (int i = 0; i < 13; ++i) {
        d.tension.x.push_back(1.0 + 0.025 * i);
        d.compression.x.push_back(1.0 - 0.05 * i);
        d.shear.x.push_back(0.0125 * i);
    }
    d.tension.y = predict_mode(m, d, Mode::Tension);
    d.compression.y = predict_mode(m, d, Mode::Compression);
    d.shear.y = predict_mode(m, d, Mode::Shear);
    return d;
}

}  // namespace foamfit
