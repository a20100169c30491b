#include "foamfit/datasets.hpp"

namespace foamfit {

namespace {

Curve make_curve(std::initializer_list<double> x, std::initializer_list<double> y,
                 std::initializer_list<double> s, double y_sign = 1.0) {
    Curve c;
    c.x = x;
    c.y = y;
    c.y_std = s;
    if (y_sign != 1.0)
        for (double& v : c.y) v *= y_sign;
    return c;
}

}  // namespace

FoamDataset builtin_dataset(const std::string& name) {
    FoamDataset d;
    d.label = name;
    d.shear_prestretch = 0.8;
    if (name == "leap") {
        d.tension = make_curve(
            {1.000, 1.025, 1.050, 1.075, 1.100, 1.125, 1.150, 1.175, 1.200, 1.225, 1.250,
             1.275, 1.300},
            {0.00, 13.71, 29.76, 46.83, 65.35, 85.64, 107.77, 131.58, 157.34, 185.70,
             217.85, 255.28, 298.59},
            {0.00, 2.15, 4.50, 7.19, 10.34, 13.94, 17.66, 21.25, 24.86, 28.77, 33.26,
             38.67, 45.29});
        d.compression = make_curve(
            {1.000, 0.950, 0.900, 0.850, 0.800, 0.750, 0.700, 0.650, 0.600, 0.550, 0.500,
             0.450, 0.400},
            {0.00, 12.79, 32.65, 45.64, 55.37, 65.47, 77.17, 91.21, 108.06, 129.08,
             156.19, 191.67, 241.60},
            {0.00, 1.24, 3.98, 5.47, 5.84, 6.08, 6.33, 6.69, 6.98, 7.59, 8.50, 10.09,
             13.73},
            -1.0);
        d.shear = make_curve(
            {0.000, 0.012, 0.025, 0.037, 0.050, 0.062, 0.075, 0.087, 0.100, 0.112, 0.125,
             0.137, 0.150},
            {0.09, 1.42, 2.85, 4.29, 5.75, 7.24, 8.76, 10.34, 11.97, 13.67, 15.43, 17.29,
             19.14},
            {0.02, 0.28, 0.56, 0.85, 1.14, 1.45, 1.77, 2.11, 2.46, 2.84, 3.23, 3.67,
             4.12});
        return d;
    }
    if (name == "turbo") {
        d.tension = make_curve(
            {1.000, 1.025, 1.050, 1.075, 1.100, 1.125, 1.150, 1.175, 1.200, 1.225, 1.250,
             1.275, 1.300},
            {0.00, 19.45, 41.89, 66.29, 93.27, 123.76, 157.97, 195.56, 236.36, 281.58,
             333.96, 395.95, 469.95},
            {0.00, 1.64, 3.31, 5.12, 7.29, 9.81, 12.40, 14.99, 18.01, 21.73, 25.42, 29.71,
             34.89});
        d.compression = make_curve(
            {1.000, 0.950, 0.900, 0.850, 0.800, 0.750, 0.700, 0.650, 0.600, 0.550, 0.500,
             0.450, 0.400},
            {0.00, 9.41, 32.75, 51.40, 64.33, 76.82, 90.92, 107.86, 128.72, 155.11,
             189.78, 236.96, 305.43},
            {0.00, 1.08, 1.96, 4.41, 5.62, 6.22, 6.66, 7.34, 8.32, 9.66, 11.63, 14.90,
             19.56},
            -1.0);
        d.shear = make_curve(
            {0.000, 0.012, 0.025, 0.037, 0.050, 0.062, 0.075, 0.087, 0.100, 0.112, 0.125,
             0.137, 0.150},
            {0.16, 2.66, 5.33, 8.03, 10.76, 13.54, 16.39, 19.33, 22.35, 25.47, 28.69,
             32.03, 35.41},
            {0.02, 0.26, 0.52, 0.77, 1.03, 1.28, 1.53, 1.77, 2.02, 2.27, 2.50, 2.76,
             2.99});
        return d;
    }
    throw DomainError("unknown built-in dataset '" + name + "' (leap | turbo)");
}

}  // namespace foamfit
