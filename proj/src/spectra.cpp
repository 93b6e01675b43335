#include "qhe/spectra.hpp"

#include <cmath>
#include <string>

namespace qhe {

ValidatedParams validate_params(const EngineParams& p) {
    if (!(p.a > 0.0)) {
        throw NonPositiveError("a must be > 0, got " + std::to_string(p.a));
    }
    if (!(p.d0 > 0.0)) {
        throw NonPositiveError("d0 must be > 0, got " + std::to_string(p.d0));
    }
    if (!(p.l1 > 0.0)) {
        throw NonPositiveError("l1 must be > 0, got " + std::to_string(p.l1));
    }
    if (!(p.vbar > 0.0)) {
        throw NonPositiveError("vbar must be > 0, got " +
                               std::to_string(p.vbar));
    }
    if (!(p.r > 3.0)) {
        throw RatioTooSmallError("width ratio r must exceed 3, got " +
                                 std::to_string(p.r));
    }
    // Both working levels bound with positive pressure down to L = l1.
    if (!(4.0 * p.d0 * p.l1 > 3.0 * p.a)) {
        throw LevelUnboundError("l1 must exceed 3a/(4 d0) = " +
                                std::to_string(3.0 * p.a / (4.0 * p.d0)));
    }
    return ValidatedParams(p);
}

double morse_potential_value(double x, const WidthParams& wp) {
    const double g = std::exp(-wp.alpha_morse * (x - wp.x0));
    return wp.d0 * g * (g - 2.0);
}

double width_from_depth(const WidthParams& wp) {
    if (!(wp.v0 > 0.0) || !(wp.v0 < wp.d0)) {
        throw DepthOrderError("probe depth must satisfy 0 < v0 < d0");
    }
    const double s = std::sqrt(1.0 - wp.v0 / wp.d0);
    return std::log((1.0 + s) / (1.0 - s)) / wp.alpha_morse;
}

bool level_bound(int n, double L, double a, double d0) {
    return n >= 0 && (n + 0.5) * a < 2.0 * d0 * L;
}

namespace {

void require_bound(int n, double L, const ValidatedParams& p) {
    if (n < 0) {
        throw DomainError("level index must be >= 0");
    }
    if (!level_bound(n, L, p.a(), p.d0())) {
        throw LevelUnboundError("level n = " + std::to_string(n) +
                                " is not bound at L = " + std::to_string(L));
    }
}

}  // namespace

double morse_energy(int n, double L, const ValidatedParams& p) {
    require_bound(n, L, p);
    const double nu = p.a() * (n + 0.5);
    return nu / L - nu * nu / (4.0 * p.d0() * L * L);
}

double morse_pressure(int n, double L, const ValidatedParams& p) {
    require_bound(n, L, p);
    const double nu = p.a() * (n + 0.5);
    return nu / (L * L) - nu * nu / (2.0 * p.d0() * L * L * L);
}

double ho_energy(int n, double L, double a) {
    return a * (n + 0.5) / L;
}

double ho_pressure(int n, double L, double a) {
    return a * (n + 0.5) / (L * L);
}

int max_bound_level(double L, const ValidatedParams& p) {
    const double threshold = 2.0 * p.d0() * L / p.a();  // need n + 1/2 < this
    int n = static_cast<int>(std::floor(threshold - 0.5));
    while (n >= 0 && !level_bound(n, L, p.a(), p.d0())) {
        --n;  // strict inequality at the exact boundary
    }
    if (n < 0) {
        throw NoBoundLevelsError("no bound level at L = " + std::to_string(L));
    }
    return n;
}

}  // namespace qhe
