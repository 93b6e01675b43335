#include "qhe/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhe/spectra.hpp"

namespace qhe {

IsoRef IsoRef::high(const ValidatedParams& p) {
    return IsoRef{IsoSide::High, p.l1(), 0};
}

IsoRef IsoRef::low(const ValidatedParams& p) {
    return IsoRef{IsoSide::Low, p.l3(), 1};
}

double IsoRef::reference_energy(const ValidatedParams& p) const {
    return morse_energy(level, width, p);
}

double IsoRef::stroke_min() const {
    return side == IsoSide::High ? width : width / 3.0;
}

double IsoRef::stroke_max() const {
    return side == IsoSide::High ? 3.0 * width : width;
}

double expectation_energy(const SuperpositionState& s, double L,
                          const ValidatedParams& p) {
    return s.w0 * morse_energy(0, L, p) + s.w1 * morse_energy(1, L, p);
}

double expectation_pressure(const SuperpositionState& s, double L,
                            const ValidatedParams& p) {
    return s.w0 * morse_pressure(0, L, p) + s.w1 * morse_pressure(1, L, p);
}

SuperpositionState isoenergetic_weight(double L, const IsoRef& ref,
                                       const ValidatedParams& p) {
    const double lo = ref.stroke_min();
    const double hi = ref.stroke_max();
    if (!(L >= lo && L <= hi)) {
        throw OutOfStrokeRangeError(
            "width " + std::to_string(L) + " outside stroke range [" +
            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    const double e0 = morse_energy(0, L, p);
    const double e1 = morse_energy(1, L, p);
    double w0 = (e1 - ref.reference_energy(p)) / (e1 - e0);
    // The stroke endpoints are pure states; rounding may land a hair
    // outside [0, 1] there.
    w0 = std::min(1.0, std::max(0.0, w0));
    return SuperpositionState{w0, 1.0 - w0};
}

}  // namespace qhe
