#pragma once

#include "qhe/errors.hpp"

namespace qhe {

// The five physical inputs of the engine, in natural units.  The spectral
// constant `a` multiplies (n + 1/2)/L in the energy law; hbar and the wall
// mode factors are absorbed into it and never appear separately.
struct EngineParams {
    double a = 1.0;     // spectral constant, energy * length
    double d0 = 1.0;    // well depth
    double l1 = 1.0;    // smallest width of the cycle
    double r = 6.0;     // width ratio L3/L1
    double vbar = 1.0;  // average wall speed
};

// Parameter set that has passed validate_params().  Every cycle-level
// operation accepts only this type, so the validity checks run exactly once.
class ValidatedParams {
public:
    double a() const { return p_.a; }
    double d0() const { return p_.d0; }
    double l1() const { return p_.l1; }
    double r() const { return p_.r; }
    double vbar() const { return p_.vbar; }

    double l2() const { return 3.0 * p_.l1; }
    double l3() const { return p_.r * p_.l1; }
    double l4() const { return p_.r * p_.l1 / 3.0; }

    const EngineParams& raw() const { return p_; }

private:
    friend ValidatedParams validate_params(const EngineParams& p);
    explicit ValidatedParams(const EngineParams& p) : p_(p) {}

    EngineParams p_;
};

// Checks, in order: strict positivity of a, d0, l1, vbar; r > 3; and
// l1 > 3a/(4 d0) so that both working levels stay bound with positive
// pressure over the whole cycle.
//
// Throws NonPositiveError, RatioTooSmallError or LevelUnboundError.
ValidatedParams validate_params(const EngineParams& p);

}  // namespace qhe
