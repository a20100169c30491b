#include "foamfit/model.hpp"

#include <algorithm>
#include <cstdio>

namespace foamfit {

int ModelSpec::nonzero_terms() const {
    return static_cast<int>(
        std::count_if(terms.begin(), terms.end(), [](const TermSpec& t) { return t.w > 0.0; }));
}

void ModelSpec::validate() const {
    bool seen[kTermCount + 1] = {};
    for (const TermSpec& t : terms) {
        if (t.id < 1 || t.id > kTermCount)
            throw DomainError("unknown term id " + std::to_string(t.id));
        if (seen[t.id]) throw DomainError("duplicate term id " + std::to_string(t.id));
        seen[t.id] = true;
        if (t.w < 0.0) throw DomainError("negative weight on term " + std::to_string(t.id));
        if (term_has_inner(t.id) && t.w_star < 0.0)
            throw DomainError("negative inner weight on term " + std::to_string(t.id));
    }
}

const char* architecture_name(Architecture a) {
    switch (a) {
        case Architecture::SI: return "si";
        case Architecture::SI_MI: return "si-mi";
        case Architecture::SI_PS: return "si-ps";
        case Architecture::ALL: return "all";
    }
    return "?";
}

Architecture architecture_from_name(const std::string& name) {
    if (name == "si") return Architecture::SI;
    if (name == "si-mi" || name == "si_mi") return Architecture::SI_MI;
    if (name == "si-ps" || name == "si_ps") return Architecture::SI_PS;
    if (name == "all") return Architecture::ALL;
    throw DomainError("unknown architecture '" + name + "' (si | si-mi | si-ps | all)");
}

std::vector<int> architecture_terms(Architecture a) {
    std::vector<int> ids;
    for (int id = 1; id <= 10; ++id) ids.push_back(id);
    if (a == Architecture::SI_MI || a == Architecture::ALL) {
        ids.push_back(11);
        ids.push_back(12);
    }
    if (a == Architecture::SI_PS || a == Architecture::ALL) {
        ids.push_back(13);
        ids.push_back(14);
    }
    return ids;
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string form_with(int id, const std::string& W, const std::string& S) {
    switch (id) {
        case 1: return W + " [I1b - 3]";
        case 2: return W + " [exp(" + S + " [I1b - 3]) - 1]";
        case 3: return W + " [I1b - 3]^2";
        case 4: return W + " [exp(" + S + " [I1b - 3]^2) - 1]";
        case 5: return W + " [I2b - 3]";
        case 6: return W + " [exp(" + S + " [I2b - 3]) - 1]";
        case 7: return W + " [I2b - 3]^2";
        case 8: return W + " [exp(" + S + " [I2b - 3]^2) - 1]";
        case 9: return W + " [J^" + S + " - " + S + " ln(J) - 1]";
        case 10: return W + " [exp(" + S + " ln(J)^2) - 1]";
        case 11: return W + " J^" + S + " [I1b - 3]";
        case 12: return W + " J^" + S + " [I2b - 3]";
        case 13:
        case 14: return W + " sum_i [li^" + S + " - " + S + " ln(li) - 1]";
    }
    throw DomainError("unknown term id " + std::to_string(id));
}

}  // namespace

std::string term_form(int id, double w, double w_star) {
    return form_with(id, num(w), num(w_star));
}

std::string term_symbol(int id) { return form_with(id, "w", "w*"); }

std::string render_model(const ModelSpec& m) {
    std::string out = "psi =";
    bool first = true;
    for (const TermSpec& t : m.terms) {
        if (t.w == 0.0) continue;
        out += first ? " " : "\n    + ";
        out += term_form(t.id, t.w, t.w_star) + " kPa";
        first = false;
    }
    if (first) out += " 0";
    return out;
}

std::vector<ConvexityFlag> polyconvexity_flags(const ModelSpec& m) {
    std::vector<ConvexityFlag> flags;
    for (const TermSpec& t : m.terms) {
        if (t.w == 0.0) continue;
        ConvexityFlag f{t.id, Convexity::Convex, 0.0};
        if (t.id == 11) {
            f.threshold = 2.0 / 3.0;
            f.status = t.w_star > f.threshold ? Convexity::Violates : Convexity::Conditional;
        } else if (t.id == 12) {
            f.status = Convexity::Violates;
        }
        flags.push_back(f);
    }
    return flags;
}

ModelSpec printed_model(const std::string& foam, Architecture arch) {
    if (foam == "leap" && arch == Architecture::SI_MI)
        return {{{1, 26.9, 0.0}, {9, 70.3, 1.06}, {11, 79.0, 4.86}}};
    if (foam == "turbo" && arch == Architecture::SI_MI)
        return {{{10, 936.0, 0.0615}, {11, 139.0, 4.36}, {12, 19.8, 1.47}}};
    if (foam == "leap" && arch == Architecture::SI_PS)
        return {{{3, 9.93, 0.0}, {9, 59.0, 0.481}, {13, 0.286, 8.40}}};
    if (foam == "turbo" && arch == Architecture::SI_PS)
        return {{{2, 73.9, 0.147}, {10, 0.00592, 6.64}, {13, 0.365, 8.33}}};
    throw DomainError("no printed model for foam '" + foam + "', architecture '" +
                      architecture_name(arch) + "'");
}

}  // namespace foamfit
