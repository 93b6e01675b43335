#pragma once

#include "qhe/params.hpp"

namespace qhe {

// Wall travel over one cycle, L0 = 2 (l3 - l1).
double total_travel(const ValidatedParams& p);

// Cycle duration tau = L0 / vbar.
double cycle_time(const ValidatedParams& p);

// Net work per unit time, cycle_work(Corrected) / cycle_time.
double power_output(const ValidatedParams& p);

// The same quantity written directly in the ratio r; kept separate so the
// identity with power_output can be checked rather than assumed.
double power_output_closed_form(const ValidatedParams& p);

// Dimensionless power curves (a = vbar = d0 = l1 = 1).
//
// The *_r curves accept r >= 3 and vanish at r = 3 (limit point for figure
// grids); below 3 they throw DomainError.  The *_eta curves accept
// 0 <= eta < 1 and throw DomainError outside.

// Morse curve versus the width ratio, as printed:
// (r-3)/(4(r^2-r)) ln3 - (9-r^2)/(16(r^3-r^2)) ln(1/3).
double pstar_r_morse(double r);

// Algebraic simplification (3 ln3 / 16) (r-3)/r^2 of the curve above.
double pstar_r_morse_simplified(double r);

// Morse curve versus efficiency: (1-eta)(3 eta - eta^2)/(2+eta).
double pstar_eta_morse(double eta);

// Infinite-depth curve versus the width ratio: (r-3)/(4(r^2-r)) ln3.
double pstar_r_ho(double r);

// Infinite-depth curve versus efficiency: (1-eta) eta / (2+eta).
double pstar_eta_ho(double eta);

}  // namespace qhe
