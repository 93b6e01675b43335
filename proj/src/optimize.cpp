#include "qhe/optimize.hpp"

#include <cmath>
#include <functional>

#include "qhe/numeric.hpp"
#include "qhe/power.hpp"

namespace qhe {

namespace {

std::function<double(double)> curve_function(PowerCurve c) {
    switch (c) {
        case PowerCurve::MorseVsRatio:
            return [](double r) { return pstar_r_morse(r); };
        case PowerCurve::MorseVsEfficiency:
            return [](double eta) { return pstar_eta_morse(eta); };
        case PowerCurve::HoVsRatio:
            return [](double r) { return pstar_r_ho(r); };
        case PowerCurve::HoVsEfficiency:
            return [](double eta) { return pstar_eta_ho(eta); };
    }
    throw DomainError("unknown power curve");
}

constexpr int kScanPoints = 4096;  // interior subdivisions of the bracket

}  // namespace

std::pair<double, double> default_bracket(PowerCurve c) {
    if (c == PowerCurve::MorseVsRatio || c == PowerCurve::HoVsRatio) {
        return {3.0 + 1e-9, 100.0};
    }
    return {0.0, 1.0};
}

OptimizationResult maximize_power_curve(PowerCurve c, double lo, double hi,
                                        double tol) {
    if (!(lo < hi)) {
        throw BracketError("maximization bracket requires lo < hi");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be > 0");
    }
    const auto f = curve_function(c);

    // Coarse scan over interior points; the endpoints themselves are never
    // evaluated so half-open domains stay legal.
    const double h = (hi - lo) / kScanPoints;
    int best = 1;
    double best_value = f(lo + h);
    for (int i = 2; i < kScanPoints; ++i) {
        const double value = f(lo + i * h);
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    if (best == 1 || best == kScanPoints - 1) {
        throw BracketError("no interior maximum on the requested bracket");
    }

    const auto refined = numeric::golden_section_max(
        f, lo + (best - 1) * h, lo + (best + 1) * h, tol);
    return OptimizationResult{refined.argmax, refined.max_value, lo, hi, tol,
                              refined.iterations};
}

OptimizationResult maximize_power_curve(PowerCurve c) {
    const auto [lo, hi] = default_bracket(c);
    return maximize_power_curve(c, lo, hi, kDefaultOptTolerance);
}

double max_power_polynomial(double r) {
    constexpr std::array<double, 9> coeff = {-2.0, 9.0, 15.0, -67.0, 63.0,
                                             -18.0, 0.0, 0.0, 0.0};
    double acc = 0.0;
    for (double c : coeff) {
        acc = acc * r + c;
    }
    return acc;
}

RootSet max_power_polynomial_roots() {
    const double s = std::sqrt(73.0);
    RootSet set;
    set.coefficients = {-2.0, 9.0, 15.0, -67.0, 63.0, -18.0, 0.0, 0.0, 0.0};
    set.roots = {
        PolynomialRoot{-3.0, 1},
        PolynomialRoot{0.0, 3},
        PolynomialRoot{(11.0 - s) / 4.0, 1},
        PolynomialRoot{1.0, 2},
        PolynomialRoot{(11.0 + s) / 4.0, 1},
    };
    return set;
}

double eta_star_from_polynomial() {
    return 1.0 - 12.0 / (11.0 + std::sqrt(73.0));
}

OptimalRegion optimal_region(PowerCurve c) {
    if (c == PowerCurve::HoVsRatio || c == PowerCurve::HoVsEfficiency) {
        throw DomainError(
            "optimal region is reported for the Morse curves only");
    }
    const OptimizationResult opt = maximize_power_curve(c);
    if (c == PowerCurve::MorseVsRatio) {
        const double r_star = opt.argmax;
        return OptimalRegion{1.0 - 3.0 / r_star, r_star};
    }
    const double eta_star = opt.argmax;
    return OptimalRegion{eta_star, 3.0 / (1.0 - eta_star)};
}

}  // namespace qhe
