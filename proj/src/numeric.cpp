#include "qhe/numeric.hpp"

#include <cmath>
#include <utility>

#include "qhe/errors.hpp"

namespace qhe::numeric {

namespace {

double simpson_panel(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

double simpson_recurse(const std::function<double(double)>& f, double lo,
                       double hi, double flo, double fmid, double fhi,
                       double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_panel(flo, flm, fmid, mid - lo);
    const double right = simpson_panel(fmid, frm, fhi, hi - mid);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, lo, mid, flo, flm, fmid, left, 0.5 * tol,
                           depth - 1) +
           simpson_recurse(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol,
                           depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol) {
    if (lo == hi) {
        return 0.0;
    }
    double sign = 1.0;
    if (lo > hi) {
        std::swap(lo, hi);
        sign = -1.0;
    }
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo);
    const double fmid = f(mid);
    const double fhi = f(hi);
    const double whole = simpson_panel(flo, fmid, fhi, hi - lo);
    return sign *
           simpson_recurse(f, lo, hi, flo, fmid, fhi, whole, abs_tol, 48);
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double rel_tol) {
    if (!(lo < hi)) {
        throw BracketError("bisection requires lo < hi");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw BracketError("bisection bracket does not straddle a sign change");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
        if (hi - lo <= rel_tol * scale) {
            break;
        }
    }
    return 0.5 * (lo + hi);
}

GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, double tol) {
    if (!(lo < hi)) {
        throw BracketError("golden section requires lo < hi");
    }
    constexpr double kInvPhi = 0.6180339887498949;   // 1/phi
    constexpr double kInvPhi2 = 0.3819660112501051;  // 1/phi^2
    double a = lo;
    double b = hi;
    double c = a + kInvPhi2 * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int iterations = 0;
    while (b - a > tol * std::max({std::abs(a), std::abs(b), 1.0})) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = a + kInvPhi2 * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
        if (++iterations > 400) {
            break;
        }
    }
    const double x = fc > fd ? c : d;
    return GoldenResult{x, f(x), iterations};
}

}  // namespace qhe::numeric
