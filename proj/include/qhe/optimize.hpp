#pragma once

#include <array>
#include <vector>

#include "qhe/params.hpp"

namespace qhe {

// The four dimensionless power curves that can be maximized.
enum class PowerCurve { MorseVsRatio, MorseVsEfficiency, HoVsRatio, HoVsEfficiency };

struct OptimizationResult {
    double argmax = 0.0;
    double max_value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double tolerance = 0.0;
    int iterations = 0;
};

// Default search bracket: (3 + 1e-9, 100) for the ratio curves, (0, 1) for
// the efficiency curves.
std::pair<double, double> default_bracket(PowerCurve c);

constexpr double kDefaultOptTolerance = 1e-10;

// Coarse-grid scan followed by golden-section refinement.  Deterministic
// for fixed inputs.  Throws BracketError when the scan finds no interior
// maximum on (lo, hi).
OptimizationResult maximize_power_curve(PowerCurve c, double lo, double hi,
                                        double tol = kDefaultOptTolerance);
OptimizationResult maximize_power_curve(PowerCurve c);

// Degree-8 polynomial quoted as the maximum-power condition for the ratio
// curve: -2r^8 + 9r^7 + 15r^6 - 67r^5 + 63r^4 - 18r^3.  Horner evaluation.
double max_power_polynomial(double r);

struct PolynomialRoot {
    double value;
    int multiplicity;
};

// Degree-8 coefficients (descending) together with all real roots.
struct RootSet {
    std::array<double, 9> coefficients;
    std::vector<PolynomialRoot> roots;  // ascending by value
};

// Real roots of max_power_polynomial from its verified factorization
// -r^3 (r-1)^2 (r+3) (2r^2 - 11r + 6):
// -3, 0 (x3), (11-sqrt(73))/4, 1 (x2), (11+sqrt(73))/4.
RootSet max_power_polynomial_roots();

// Efficiency 1 - 3/r at the one polynomial root that satisfies r > 3.
double eta_star_from_polynomial();

struct OptimalRegion {
    double eta_star;  // efficiency at maximum power
    double r_star;    // matching width ratio, 3/(1 - eta_star)
};

// Numeric maximum of a Morse power curve expressed as the lower edge of the
// optimal operating region.  Accepts MorseVsRatio and MorseVsEfficiency;
// throws DomainError for the infinite-depth curves.
OptimalRegion optimal_region(PowerCurve c);

}  // namespace qhe
