#pragma once

#include "qhe/params.hpp"

namespace qhe {

// Shape parameters of the Morse well V(x) = d0 * g * (g - 2) with
// g = exp(-alpha_morse * (x - x0)).  Only the potential-profile helpers use
// these; the spectrum depends on the widths alone.
struct WidthParams {
    double alpha_morse = 1.0;  // range parameter, 1/length
    double x0 = 0.0;           // equilibrium separation
    double v0 = 0.5;           // probe depth, 0 < v0 < d0
    double d0 = 1.0;           // well depth
};

// Potential profile value at x.  Total function; minimum -d0 at x = x0.
double morse_potential_value(double x, const WidthParams& wp);

// Width of the well at depth -v0: L = (1/alpha) * ln(rho+ / rho-) with
// rho± = 1 ± sqrt(1 - v0/d0).  Throws DepthOrderError unless 0 < v0 < d0.
double width_from_depth(const WidthParams& wp);

// Level n is usable only while (n + 1/2) < 2*d0*L/a; there the spectrum
// increases with n and the level pressure is positive.
bool level_bound(int n, double L, double a, double d0);

// Bound-state energy a(n+1/2)/L - [a(n+1/2)]^2 / (4 d0 L^2).
// Throws LevelUnboundError outside the bound condition.
double morse_energy(int n, double L, const ValidatedParams& p);

// Level pressure a(n+1/2)/L^2 - [a(n+1/2)]^2 / (2 d0 L^3), equal to
// -dE_n/dL exactly.  Throws LevelUnboundError outside the bound condition.
double morse_pressure(int n, double L, const ValidatedParams& p);

// Infinite-depth limits of the two functions above.
double ho_energy(int n, double L, double a);
double ho_pressure(int n, double L, double a);

// Largest admissible level index at width L.  Throws NoBoundLevelsError
// when even n = 0 fails the bound condition.
int max_bound_level(double L, const ValidatedParams& p);

}  // namespace qhe
