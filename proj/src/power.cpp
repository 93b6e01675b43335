#include "qhe/power.hpp"

#include <cmath>
#include <string>

#include "qhe/cycle.hpp"

namespace qhe {

namespace {

constexpr double kLn3 = 1.0986122886681096914;

void require_ratio(double r) {
    if (!(r >= 3.0)) {
        throw DomainError("ratio curve defined for r >= 3, got " +
                          std::to_string(r));
    }
}

void require_eta(double eta) {
    if (!(eta >= 0.0 && eta < 1.0)) {
        throw DomainError("efficiency curve defined for 0 <= eta < 1, got " +
                          std::to_string(eta));
    }
}

}  // namespace

double total_travel(const ValidatedParams& p) {
    return 2.0 * (p.l3() - p.l1());
}

double cycle_time(const ValidatedParams& p) {
    return total_travel(p) / p.vbar();
}

double power_output(const ValidatedParams& p) {
    return cycle_work(p) / cycle_time(p);
}

double power_output_closed_form(const ValidatedParams& p) {
    const double a = p.a();
    const double d0 = p.d0();
    const double l1 = p.l1();
    const double r = p.r();
    const double vbar = p.vbar();
    return a * vbar * kLn3 / (4.0 * l1 * l1) *
           ((r - 3.0) / (r * r - r) +
            (a / (4.0 * d0 * l1)) * (9.0 - r * r) / (r * r * r - r * r));
}

double pstar_r_morse(double r) {
    require_ratio(r);
    if (r == 3.0) {
        return 0.0;
    }
    return (r - 3.0) / (4.0 * (r * r - r)) * kLn3 -
           (9.0 - r * r) / (16.0 * (r * r * r - r * r)) * std::log(1.0 / 3.0);
}

double pstar_r_morse_simplified(double r) {
    require_ratio(r);
    return 3.0 * kLn3 / 16.0 * (r - 3.0) / (r * r);
}

double pstar_eta_morse(double eta) {
    require_eta(eta);
    return (1.0 - eta) * (3.0 * eta - eta * eta) / (2.0 + eta);
}

double pstar_r_ho(double r) {
    require_ratio(r);
    if (r == 3.0) {
        return 0.0;
    }
    return (r - 3.0) / (4.0 * (r * r - r)) * kLn3;
}

double pstar_eta_ho(double eta) {
    require_eta(eta);
    return (1.0 - eta) * eta / (2.0 + eta);
}

}  // namespace qhe
