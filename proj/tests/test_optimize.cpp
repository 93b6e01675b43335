#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qhe/optimize.hpp"
#include "qhe/power.hpp"

using namespace qhe;

namespace {

double curve_value(PowerCurve c, double x) {
    switch (c) {
        case PowerCurve::MorseVsRatio:
            return pstar_r_morse(x);
        case PowerCurve::MorseVsEfficiency:
            return pstar_eta_morse(x);
        case PowerCurve::HoVsRatio:
            return pstar_r_ho(x);
        case PowerCurve::HoVsEfficiency:
            return pstar_eta_ho(x);
    }
    return 0.0;
}

const std::vector<PowerCurve> kCurves = {
    PowerCurve::MorseVsRatio, PowerCurve::MorseVsEfficiency,
    PowerCurve::HoVsRatio, PowerCurve::HoVsEfficiency};

}  // namespace

TEST_CASE("default brackets") {
    const auto ratio = default_bracket(PowerCurve::MorseVsRatio);
    CHECK(ratio.first == 3.0 + 1e-9);
    CHECK(ratio.second == 100.0);
    CHECK(default_bracket(PowerCurve::HoVsRatio) == ratio);
    const auto eta = default_bracket(PowerCurve::MorseVsEfficiency);
    CHECK(eta.first == 0.0);
    CHECK(eta.second == 1.0);
    CHECK(default_bracket(PowerCurve::HoVsEfficiency) == eta);
}

TEST_CASE("maxima of the four curves") {
    // Argmax accuracy is limited by sqrt(eval noise / curvature), which for
    // the flat ratio curves is around 1e-7.
    const OptimizationResult mr =
        maximize_power_curve(PowerCurve::MorseVsRatio);
    CHECK(mr.argmax == doctest::Approx(6.0).epsilon(5e-7));
    CHECK(mr.max_value ==
          doctest::Approx(0.017165817010439213928).epsilon(1e-12));

    const OptimizationResult me =
        maximize_power_curve(PowerCurve::MorseVsEfficiency);
    CHECK(me.argmax ==
          doctest::Approx(0.40357562096102866).epsilon(1e-7));
    CHECK(me.max_value ==
          doctest::Approx(0.26001487781401034).epsilon(1e-12));

    const OptimizationResult hr = maximize_power_curve(PowerCurve::HoVsRatio);
    CHECK(hr.argmax ==
          doctest::Approx(3.0 + std::sqrt(6.0)).epsilon(5e-7));
    CHECK(hr.max_value ==
          doctest::Approx(0.027745594641093807).epsilon(1e-12));

    const OptimizationResult he =
        maximize_power_curve(PowerCurve::HoVsEfficiency);
    CHECK(he.argmax ==
          doctest::Approx(std::sqrt(6.0) - 2.0).epsilon(1e-7));
    CHECK(he.max_value ==
          doctest::Approx(0.10102051443364380361).epsilon(1e-12));
}

TEST_CASE("result records the bracket and tolerance it was given") {
    const OptimizationResult res =
        maximize_power_curve(PowerCurve::MorseVsRatio, 4.0, 9.0, 1e-11);
    CHECK(res.bracket_lo == 4.0);
    CHECK(res.bracket_hi == 9.0);
    CHECK(res.tolerance == 1e-11);
    CHECK(res.iterations > 0);
    CHECK(res.argmax == doctest::Approx(6.0).epsilon(5e-7));
}

TEST_CASE("optimizer agrees with a dense grid scan") {
    for (PowerCurve c : kCurves) {
        auto [lo, hi] = default_bracket(c);
        const OptimizationResult res = maximize_power_curve(c);
        if (c == PowerCurve::MorseVsEfficiency ||
            c == PowerCurve::HoVsEfficiency) {
            hi -= 1e-9;
        }
        const int n = 1000000;
        const double spacing = (hi - lo) / (n - 1);
        const double coarse = oracles::grid_argmax(
            [&](double x) { return curve_value(c, x); }, lo, hi, n);
        CHECK(std::abs(res.argmax - coarse) <= 10.0 * spacing);
    }
}

TEST_CASE("curves fall off monotonically past the maximum") {
    for (PowerCurve c : kCurves) {
        auto [lo, hi] = default_bracket(c);
        if (c == PowerCurve::MorseVsEfficiency ||
            c == PowerCurve::HoVsEfficiency) {
            hi -= 1e-9;
        }
        const double start = maximize_power_curve(c).argmax;
        double prev = curve_value(c, start);
        for (int i = 1; i <= 10000; ++i) {
            const double x = start + (hi - start) * i / 10000.0;
            const double v = curve_value(c, x);
            CHECK(v <= prev + 1e-15 * std::max(1.0, std::abs(prev)));
            prev = v;
        }
    }
}

TEST_CASE("optimizer input validation") {
    CHECK_THROWS_AS(maximize_power_curve(PowerCurve::MorseVsRatio, 7.0, 100.0),
                    BracketError);
    CHECK_THROWS_AS(
        maximize_power_curve(PowerCurve::MorseVsRatio, 3.0 + 1e-9, 4.0),
        BracketError);
    CHECK_THROWS_AS(maximize_power_curve(PowerCurve::MorseVsRatio, 5.0, 5.0),
                    BracketError);
    CHECK_THROWS_AS(maximize_power_curve(PowerCurve::MorseVsRatio, 9.0, 5.0),
                    BracketError);
    CHECK_THROWS_AS(
        maximize_power_curve(PowerCurve::MorseVsRatio, 4.0, 9.0, 0.0),
        DomainError);
    CHECK_THROWS_AS(
        maximize_power_curve(PowerCurve::MorseVsRatio, 4.0, 9.0, -1e-9),
        DomainError);
}

TEST_CASE("maximum-power polynomial evaluation") {
    CHECK(max_power_polynomial(0.0) == 0.0);
    CHECK(max_power_polynomial(1.0) == 0.0);
    CHECK(max_power_polynomial(-3.0) == 0.0);
    CHECK(max_power_polynomial(2.0) == 320.0);
}

TEST_CASE("polynomial coefficients match the factored form") {
    const RootSet set = max_power_polynomial_roots();
    // ascending-order convolution of -r^3, (r-1)^2, (r+3), (2r^2 - 11r + 6)
    std::vector<double> expansion = {1.0};
    const std::vector<std::vector<double>> factors = {
        {0.0, 0.0, 0.0, -1.0},
        {1.0, -2.0, 1.0},
        {3.0, 1.0},
        {6.0, -11.0, 2.0},
    };
    for (const auto& factor : factors) {
        std::vector<double> next(expansion.size() + factor.size() - 1, 0.0);
        for (std::size_t i = 0; i < expansion.size(); ++i) {
            for (std::size_t j = 0; j < factor.size(); ++j) {
                next[i + j] += expansion[i] * factor[j];
            }
        }
        expansion = std::move(next);
    }
    REQUIRE(expansion.size() == set.coefficients.size());
    for (std::size_t k = 0; k < expansion.size(); ++k) {
        CHECK(set.coefficients[8 - k] == expansion[k]);
    }
}

TEST_CASE("polynomial roots") {
    const RootSet set = max_power_polynomial_roots();
    REQUIRE(set.roots.size() == 5);

    double coeff_scale = 0.0;
    for (double c : set.coefficients) {
        coeff_scale = std::max(coeff_scale, std::abs(c));
    }
    int total_multiplicity = 0;
    for (const PolynomialRoot& root : set.roots) {
        const double bound =
            1e-9 * coeff_scale * std::pow(std::max(1.0, std::abs(root.value)), 8);
        CHECK(std::abs(max_power_polynomial(root.value)) <= bound);
        total_multiplicity += root.multiplicity;
    }
    CHECK(total_multiplicity == 8);
    CHECK(std::is_sorted(set.roots.begin(), set.roots.end(),
                         [](const PolynomialRoot& x, const PolynomialRoot& y) {
                             return x.value < y.value;
                         }));

    CHECK(set.roots[0].value == -3.0);
    CHECK(set.roots[0].multiplicity == 1);
    CHECK(set.roots[1].value == 0.0);
    CHECK(set.roots[1].multiplicity == 3);
    CHECK(set.roots[2].value ==
          doctest::Approx(0.61399906367061721).epsilon(1e-15));
    CHECK(set.roots[2].multiplicity == 1);
    CHECK(set.roots[3].value == 1.0);
    CHECK(set.roots[3].multiplicity == 2);
    CHECK(set.roots[4].value ==
          doctest::Approx(4.8860009363293828).epsilon(1e-15));
    CHECK(set.roots[4].multiplicity == 1);

    const std::vector<double> coeffs(set.coefficients.begin(),
                                     set.coefficients.end());
    CHECK(oracles::synthetic_multiplicity(coeffs, 0.0, 1e-12) == 3);
    CHECK(oracles::synthetic_multiplicity(coeffs, 1.0, 1e-12) == 2);
    CHECK(oracles::synthetic_multiplicity(coeffs, -3.0, 1e-12) == 1);
    CHECK(oracles::synthetic_multiplicity(coeffs, set.roots[4].value, 1e-9) ==
          1);
}

TEST_CASE("efficiency at the large polynomial root") {
    CHECK(eta_star_from_polynomial() ==
          doctest::Approx(0.38600093632938279).epsilon(1e-15));
    const RootSet set = max_power_polynomial_roots();
    CHECK(eta_star_from_polynomial() ==
          doctest::Approx(1.0 - 3.0 / set.roots[4].value).epsilon(1e-14));
}

TEST_CASE("optimal operating region") {
    const OptimalRegion eff = optimal_region(PowerCurve::MorseVsEfficiency);
    CHECK(eff.eta_star ==
          doctest::Approx(0.40357562096102866).epsilon(1e-7));
    CHECK(eff.r_star ==
          doctest::Approx(5.0299754762438628).epsilon(1e-7));

    const OptimalRegion ratio = optimal_region(PowerCurve::MorseVsRatio);
    CHECK(ratio.r_star == doctest::Approx(6.0).epsilon(5e-7));
    CHECK(ratio.eta_star == doctest::Approx(0.5).epsilon(1e-7));

    CHECK_THROWS_AS(optimal_region(PowerCurve::HoVsRatio), DomainError);
    CHECK_THROWS_AS(optimal_region(PowerCurve::HoVsEfficiency), DomainError);
}
