#include "foamfit/discovery.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <tuple>

#include <json.hpp>

namespace foamfit {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string convexity_summary(const std::vector<ConvexityFlag>& flags) {
    bool conditional = false;
    for (const auto& f : flags) {
        if (f.status == Convexity::Violates) return "violates";
        if (f.status == Convexity::Conditional) conditional = true;
    }
    return conditional ? "conditional" : "convex";
}

}  // namespace

ModelEval evaluate_model(const ModelSpec& m, const FoamDataset& data) {
    ModelEval e;
    e.r2_ten = r_squared(predict_mode(m, data, Mode::Tension), data.tension.y);
    e.r2_com = r_squared(predict_mode(m, data, Mode::Compression), data.compression.y);
    e.r2_shr = r_squared(predict_mode(m, data, Mode::Shear), data.shear.y);
    return e;
}

std::vector<FitReport> run_grid(const TrainConfig& tmpl, const FoamDataset& data) {
    std::vector<FitReport> out;
    out.reserve(6);
    for (Architecture arch : {Architecture::SI, Architecture::SI_MI, Architecture::SI_PS}) {
        for (double alpha : {0.0, 1.0}) {
            TrainConfig cfg = tmpl;
            cfg.architecture = arch;
            cfg.alpha = alpha;
            out.push_back(fit(cfg, data));
        }
    }
    return out;
}

Selection select_model(const std::vector<FitReport>& reports, double margin) {
    if (reports.empty()) throw DomainError("select_model: no reports");

    // Baseline per architecture: its alpha = 0 report (best min-mode R2 when
    // several exist).
    const FitReport* baseline[4] = {nullptr, nullptr, nullptr, nullptr};
    for (const auto& r : reports) {
        if (r.alpha != 0.0) continue;
        const FitReport*& slot = baseline[static_cast<int>(r.architecture)];
        if (!slot || r.min_mode_r2() > slot->min_mode_r2()) slot = &r;
    }

    // Sort key: fewest nonzero terms, then higher min-mode R2, then lower
    // alpha; the remaining components only pin down an order for true
    // duplicates so the pick is permutation invariant.
    auto key = [](const FitReport& r) {
        return std::make_tuple(r.nonzero_terms, -r.min_mode_r2(), r.alpha,
                               static_cast<int>(r.architecture), r.label);
    };

    const FitReport* best = nullptr;
    for (const auto& r : reports) {
        const FitReport* base = baseline[static_cast<int>(r.architecture)];
        if (!base) continue;
        if (r.min_mode_r2() < base->min_mode_r2() - margin) continue;
        if (!best || key(r) < key(*best)) best = &r;
    }
    if (best) return {*best, false};

    // No architecture had a baseline: fall back to the lowest-alpha report.
    for (const auto& r : reports)
        if (!best || std::make_tuple(r.alpha, key(r)) < std::make_tuple(best->alpha, key(*best)))
            best = &r;
    return {*best, true};
}

namespace {

nlohmann::ordered_json model_document(const ModelSpec& m, const std::string& label,
                                      Architecture arch, double alpha, const ModelEval& r2) {
    nlohmann::ordered_json doc;
    doc["label"] = label;
    doc["architecture"] = architecture_name(arch);
    doc["alpha"] = alpha;
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : m.terms) {
        nlohmann::ordered_json jt;
        jt["id"] = t.id;
        jt["form"] = term_symbol(t.id);
        jt["w_kpa"] = t.w;
        jt["w_star"] = t.w_star;
        doc["terms"].push_back(jt);
    }
    doc["r2"] = {{"ten", r2.r2_ten}, {"com", r2.r2_com}, {"shr", r2.r2_shr}};
    doc["psi"] = render_model(m);
    return doc;
}

}  // namespace

std::string export_model_json(const ModelSpec& m, const std::string& label,
                              Architecture arch, double alpha, const ModelEval& r2) {
    return model_document(m, label, arch, alpha, r2).dump(2) + "\n";
}

std::string export_model_json(const FitReport& report) {
    ModelEval r2{report.r2_ten, report.r2_com, report.r2_shr};
    return export_model_json(report.model, report.label, report.architecture, report.alpha, r2);
}

ModelSpec import_model(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("model document: ") + e.what());
    }
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw DomainError("model document: missing terms array");
    ModelSpec m;
    for (const auto& jt : doc["terms"]) {
        TermSpec t;
        try {
            t.id = jt.at("id").get<int>();
            t.w = jt.at("w_kpa").get<double>();
            t.w_star = jt.value("w_star", 1.0);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("model document: ") + e.what());
        }
        m.terms.push_back(t);
    }
    m.validate();
    return m;
}

std::string report_csv_header() {
    return "label,architecture,alpha,seed,nonzero_terms,r2_ten,r2_com,r2_shr,convexity";
}

std::string report_csv_row(const FitReport& r) {
    std::string row = r.label;
    row += ',';
    row += architecture_name(r.architecture);
    row += ',' + fmt("%g", r.alpha);
    row += ',' + std::to_string(r.seed);
    row += ',' + std::to_string(r.nonzero_terms);
    row += ',' + fmt("%.4f", r.r2_ten);
    row += ',' + fmt("%.4f", r.r2_com);
    row += ',' + fmt("%.4f", r.r2_shr);
    row += ',' + convexity_summary(r.polyconvexity);
    return row;
}

}  // namespace foamfit
