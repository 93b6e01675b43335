#pragma once

// Independent numerical oracles used only by the tests.  Nothing here calls
// into the library's own quadrature or optimizer, so agreement between the
// two is evidence rather than tautology.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

// Central difference derivative.
inline double fd_derivative(const std::function<double(double)>& f, double x,
                            double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Fixed-grid composite Simpson rule with `panels` panels (made even).
inline double composite_simpson(const std::function<double(double)>& f,
                                double lo, double hi, int panels) {
    if (panels % 2 != 0) {
        ++panels;
    }
    const double h = (hi - lo) / panels;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i) {
        acc += f(lo + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return acc * h / 3.0;
}

// Argmax over an n-point closed uniform grid.
inline double grid_argmax(const std::function<double(double)>& f, double lo,
                          double hi, int n) {
    double best_x = lo;
    double best_f = f(lo);
    for (int i = 1; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double v = f(x);
        if (v > best_f) {
            best_f = v;
            best_x = x;
        }
    }
    return best_x;
}

// Multiplicity of `root` in the polynomial with descending `coefficients`:
// synthetic division by (x - root) repeated while the remainder stays below
// tol times the coefficient scale.
inline int synthetic_multiplicity(std::vector<double> coefficients,
                                  double root, double tol) {
    int multiplicity = 0;
    while (coefficients.size() > 1) {
        double scale = 0.0;
        for (double c : coefficients) {
            scale = std::max(scale, std::abs(c));
        }
        std::vector<double> quotient;
        quotient.reserve(coefficients.size() - 1);
        double carry = 0.0;
        for (std::size_t i = 0; i + 1 < coefficients.size(); ++i) {
            carry = coefficients[i] + carry * root;
            quotient.push_back(carry);
        }
        const double remainder = coefficients.back() + carry * root;
        if (std::abs(remainder) > tol * std::max(scale, 1.0)) {
            break;
        }
        ++multiplicity;
        coefficients = std::move(quotient);
    }
    return multiplicity;
}

}  // namespace oracles
