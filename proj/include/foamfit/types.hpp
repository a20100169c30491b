#pragma once

#include <stdexcept>
#include <string>

namespace foamfit {

// Loading modes of the three experiments every dataset carries.
enum class Mode { Tension, Compression, Shear };

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Tension: return "tension";
        case Mode::Compression: return "compression";
        case Mode::Shear: return "shear";
    }
    return "?";
}

// Invalid physical state or malformed input. CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// exp() argument grew past the overflow guard while evaluating a term.
struct SaturationError : DomainError {
    int term_id;
    explicit SaturationError(int id, double arg)
        : DomainError("term " + std::to_string(id) + ": exp argument " +
                      std::to_string(arg) + " exceeds overflow guard"),
          term_id(id) {}
};

// exp(700) is still finite in double; beyond that evaluations are garbage.
inline constexpr double kExpArgGuard = 700.0;

// Stress unit conversion: 1 N/mm^2 = 1 MPa = 1000 kPa.
inline constexpr double kKpaPerNPerMm2 = 1000.0;

}  // namespace foamfit
