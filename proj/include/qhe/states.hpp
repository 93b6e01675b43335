#pragma once

#include "qhe/params.hpp"

namespace qhe {

// Occupation weights of the two working levels.  w0 + w1 = 1; only squared
// moduli are modeled, the relative phase enters no observable used here.
struct SuperpositionState {
    double w0 = 1.0;  // ground-level weight
    double w1 = 0.0;  // excited-level weight
};

enum class IsoSide { High, Low };

// Reference point of an isoenergetic stroke: the width and level whose
// energy stays fixed along the stroke.
struct IsoRef {
    IsoSide side;
    double width;  // L1 on the high side, L3 on the low side
    int level;     // 0 on the high side, 1 on the low side

    static IsoRef high(const ValidatedParams& p);
    static IsoRef low(const ValidatedParams& p);

    // Constant stroke energy: E_level(width).
    double reference_energy(const ValidatedParams& p) const;

    // Width interval swept by the stroke, [min, max].
    double stroke_min() const;
    double stroke_max() const;
};

// Mixture energy w0*E0(L) + w1*E1(L).  Throws LevelUnboundError if either
// level is unbound at L.
double expectation_energy(const SuperpositionState& s, double L,
                          const ValidatedParams& p);

// Mixture pressure w0*P0(L) + w1*P1(L).
double expectation_pressure(const SuperpositionState& s, double L,
                            const ValidatedParams& p);

// Solves the constant-energy constraint for the ground-level weight:
// w0 = (E1(L) - E_ref) / (E1(L) - E0(L)), the unique weight with
// expectation_energy == reference energy.  Throws OutOfStrokeRangeError
// when the weight would leave [0, 1], i.e. L is outside the stroke.
SuperpositionState isoenergetic_weight(double L, const IsoRef& ref,
                                       const ValidatedParams& p);

}  // namespace qhe
