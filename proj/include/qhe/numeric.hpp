#pragma once

#include <functional>

namespace qhe::numeric {

// Adaptive Simpson quadrature of f over [lo, hi] (lo < hi) with the given
// absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol = 1e-12);

// Bisection root of f on [lo, hi]; f(lo) and f(hi) must have opposite signs.
// Stops when the bracket width falls below rel_tol * max(1, |mid|).
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double rel_tol = 1e-13);

struct GoldenResult {
    double argmax = 0.0;
    double max_value = 0.0;
    int iterations = 0;
};

// Golden-section maximization on a bracket that contains a single interior
// maximum.  Endpoints are never evaluated.
GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, double tol);

}  // namespace qhe::numeric
