#pragma once

#include <string>
#include <vector>

#include "foamfit/types.hpp"

namespace foamfit {

// Term library (w = outer weight in kPa, s = inner weight, dimensionless):
//    1  w [I1b - 3]                 2  w [exp(s [I1b - 3]) - 1]
//    3  w [I1b - 3]^2               4  w [exp(s [I1b - 3]^2) - 1]
//    5  w [I2b - 3]                 6  w [exp(s [I2b - 3]) - 1]
//    7  w [I2b - 3]^2               8  w [exp(s [I2b - 3]^2) - 1]
//    9  w [J^s - s ln J - 1]       10  w [exp(s ln^2 J) - 1]
//   11  w J^s [I1b - 3]            12  w J^s [I2b - 3]
//   13  w sum_i [li^s - s ln li - 1]
//   14  w sum_i [li^s - s ln li - 1]   (second principal-stretch slot)
inline constexpr int kTermCount = 14;

inline constexpr bool term_has_inner(int id) {
    return !(id == 1 || id == 3 || id == 5 || id == 7);
}

// Terms whose inner weight sits inside an exponential; these keep a 1e-6
// floor during training so their gradients stay alive.
inline constexpr bool term_is_exponential(int id) {
    return id == 2 || id == 4 || id == 6 || id == 8 || id == 10;
}

struct TermSpec {
    int id = 0;
    double w = 0.0;       // kPa, >= 0
    double w_star = 0.0;  // ignored for terms without an inner weight

    bool operator==(const TermSpec&) const = default;
};

struct ModelSpec {
    std::vector<TermSpec> terms;

    bool operator==(const ModelSpec&) const = default;
    int nonzero_terms() const;
    // throws DomainError on unknown ids, duplicates, or negative weights
    void validate() const;
};

enum class Architecture { SI, SI_MI, SI_PS, ALL };

const char* architecture_name(Architecture a);
Architecture architecture_from_name(const std::string& name);  // si | si-mi | si-ps | all
std::vector<int> architecture_terms(Architecture a);

// Human-readable rendering of one term / a whole model, printed-model style.
std::string term_form(int id, double w, double w_star);
std::string term_symbol(int id);  // same shape with literal "w" / "w*"
std::string render_model(const ModelSpec& m);

// Polyconvexity status per activated term: single-invariant and
// principal-stretch families are polyconvex by design for non-negative
// weights; J^s [I1b - 3] loses rank-one convexity for s > 2/3; J^s [I2b - 3]
// loses it for every exponent.
enum class Convexity { Convex, Conditional, Violates };
struct ConvexityFlag {
    int term_id;
    Convexity status;
    double threshold = 0.0;  // the s bound backing a Conditional/Violates call
};
std::vector<ConvexityFlag> polyconvexity_flags(const ModelSpec& m);

// Registry of the reference discovered models, coefficients verbatim.
// leap/turbo x si-mi/si-ps, regularization alpha = 1.0.
ModelSpec printed_model(const std::string& foam, Architecture arch);

}  // namespace foamfit
