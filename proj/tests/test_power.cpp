#include <cmath>
#include <vector>

#include "doctest.h"
#include "qhe/errors.hpp"
#include "qhe/power.hpp"

using namespace qhe;

namespace {

ValidatedParams defaults() {
    return validate_params(EngineParams{});
}

}  // namespace

TEST_CASE("travel distance and cycle time") {
    const ValidatedParams p = defaults();
    CHECK(total_travel(p) == 10.0);
    CHECK(cycle_time(p) == 10.0);
    const ValidatedParams fast =
        validate_params(EngineParams{1, 1, 1, 6, 2});
    CHECK(cycle_time(fast) == 5.0);
}

TEST_CASE("power output at the reference point") {
    const ValidatedParams p = defaults();
    CHECK(power_output(p) ==
          doctest::Approx(0.017165817010439213928).epsilon(1e-15));
    CHECK(power_output(p) ==
          doctest::Approx(power_output_closed_form(p)).epsilon(1e-13));
}

TEST_CASE("power output closed form matches the ratio of work to time") {
    const std::vector<EngineParams> sweep = {
        EngineParams{},
        EngineParams{2.5, 0.8, 4.0, 5.0, 1.5},
        EngineParams{0.3, 7.0, 0.2, 12.0, 2.0},
        EngineParams{1.3, 2.2, 1.7, 3.2, 0.5},
        EngineParams{5.0, 30.0, 0.9, 20.0, 3.0},
    };
    for (const EngineParams& raw : sweep) {
        const ValidatedParams p = validate_params(raw);
        CHECK(power_output(p) ==
              doctest::Approx(power_output_closed_form(p)).epsilon(1e-12));
    }
}

TEST_CASE("dimensionless power versus ratio") {
    CHECK(pstar_r_morse(3.0) == 0.0);
    CHECK(pstar_r_morse(6.0) ==
          doctest::Approx(0.017165817010439213928).epsilon(1e-15));
    const double rm5 = (11.0 + std::sqrt(73.0)) / 4.0;
    CHECK(pstar_r_morse(rm5) ==
          doctest::Approx(0.016273483837355612).epsilon(1e-12));
    CHECK_THROWS_AS(pstar_r_morse(2.9), DomainError);
}

TEST_CASE("two-term and factored forms of the ratio curve agree") {
    for (int i = 0; i <= 200; ++i) {
        const double r = 3.0 + i * (40.0 - 3.0) / 200.0;
        CHECK(pstar_r_morse(r) ==
              doctest::Approx(pstar_r_morse_simplified(r)).epsilon(1e-13));
    }
}

TEST_CASE("dimensionless power versus efficiency") {
    CHECK(pstar_eta_morse(0.0) == 0.0);
    CHECK(pstar_eta_morse(0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(pstar_eta_morse(0.386) ==
          doctest::Approx(0.2600).epsilon(5e-4));
    CHECK_THROWS_AS(pstar_eta_morse(1.0), DomainError);
    CHECK_THROWS_AS(pstar_eta_morse(-0.1), DomainError);
}

TEST_CASE("harmonic-limit power curves") {
    CHECK(pstar_r_ho(3.0) == 0.0);
    CHECK(pstar_r_ho(6.0) ==
          doctest::Approx(0.027465307216702742285).epsilon(1e-15));
    CHECK(pstar_eta_ho(0.5) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(pstar_eta_ho(std::sqrt(6.0) - 2.0) ==
          doctest::Approx(0.10102051443364380361).epsilon(1e-14));
    CHECK_THROWS_AS(pstar_r_ho(2.9), DomainError);
    CHECK_THROWS_AS(pstar_eta_ho(1.0), DomainError);
}

TEST_CASE("the harmonic ratio and efficiency curves are one substitution apart") {
    const double ln3 = std::log(3.0);
    for (int i = 1; i <= 100; ++i) {
        const double r = 3.0 + i * 0.37;
        const double eta = 1.0 - 3.0 / r;
        CHECK(pstar_r_ho(r) * 4.0 / ln3 ==
              doctest::Approx(pstar_eta_ho(eta)).epsilon(1e-13));
    }
}

TEST_CASE("unit parameters reduce the power output to the ratio curve") {
    for (int i = 1; i <= 60; ++i) {
        const double r = 3.0 + i * 0.25;
        const ValidatedParams p =
            validate_params(EngineParams{1, 1, 1, r, 1});
        CHECK(power_output(p) ==
              doctest::Approx(pstar_r_morse(r)).epsilon(1e-12));
    }
}
