#include "qhe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

#include "qhe/cycle.hpp"
#include "qhe/format.hpp"
#include "qhe/numeric.hpp"
#include "qhe/optimize.hpp"
#include "qhe/power.hpp"
#include "qhe/spectra.hpp"
#include "qhe/states.hpp"

namespace qhe {

namespace {

enum class DevMode { Rel, Abs };

double rel_of(double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

// Worst observed (lhs, rhs) pair of one check across parameter sets.
struct Probe {
    double dev = -1.0;
    double lhs = 0.0;
    double rhs = 0.0;

    void offer(double l, double r, DevMode m) {
        const double d = m == DevMode::Rel ? rel_of(l, r) : std::abs(l - r);
        if (d > dev) {
            dev = d;
            lhs = l;
            rhs = r;
        }
    }
};

bool allowlisted(const std::string& id) {
    const auto& allow = known_discrepancy_allowlist();
    return std::find(allow.begin(), allow.end(), id) != allow.end();
}

DiscrepancyEntry make_entry(std::string id, std::string description,
                            std::string anchor, double lhs, double rhs,
                            double tolerance, DevMode mode) {
    DiscrepancyEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.paper_anchor = std::move(anchor);
    e.lhs = lhs;
    e.rhs = rhs;
    e.abs_dev = std::abs(lhs - rhs);
    e.rel_dev = rel_of(lhs, rhs);
    e.tolerance = tolerance;
    const double dev = mode == DevMode::Rel ? e.rel_dev : e.abs_dev;
    e.classification = dev <= tolerance
                           ? Classification::Consistent
                           : (allowlisted(e.id)
                                  ? Classification::KnownDiscrepancy
                                  : Classification::Failure);
    return e;
}

std::vector<ValidatedParams> parameter_sets(const ValidatedParams& p,
                                            std::uint64_t seed, int draws) {
    std::vector<ValidatedParams> sets;
    sets.reserve(static_cast<std::size_t>(draws) + 1);
    sets.push_back(p);
    std::mt19937_64 gen(seed);
    const auto unit = [&gen]() {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };
    const auto log_uniform = [&unit](double lo, double hi) {
        return lo * std::exp(unit() * std::log(hi / lo));
    };
    while (sets.size() < static_cast<std::size_t>(draws) + 1) {
        const double a = log_uniform(0.1, 10.0);
        const double d0 = log_uniform(0.5, 50.0);
        const double l1_lo = std::max(0.11, 3.0 * a / (4.0 * d0)) * 1.05;
        if (l1_lo >= 10.0) {
            continue;  // empty width range; redraw the whole tuple
        }
        const double l1 = log_uniform(l1_lo, 10.0);
        const double r = log_uniform(3.1, 30.0);
        sets.push_back(validate_params(EngineParams{a, d0, l1, r, 1.0}));
    }
    return sets;
}

double quadrature_work(const ValidatedParams& p) {
    const WidthQuad w = stroke_endpoints(p);
    const double from[4] = {w.l1, w.l2, w.l3, w.l4};
    const double to[4] = {w.l2, w.l3, w.l4, w.l1};
    double total = 0.0;
    for (std::size_t s = 0; s < kStrokeOrder.size(); ++s) {
        const StrokeKind k = kStrokeOrder[s];
        total += numeric::adaptive_simpson(
            [k, &p](double L) { return stroke_pressure(k, L, p); }, from[s],
            to[s], 1e-12);
    }
    return total;
}

double polynomial_derivative(double r) {
    constexpr double coeff[8] = {-16.0, 63.0, 90.0, -335.0,
                                 252.0, -54.0, 0.0,  0.0};
    double acc = 0.0;
    for (double c : coeff) {
        acc = acc * r + c;
    }
    return acc;
}

}  // namespace

std::string_view classification_name(Classification c) {
    switch (c) {
        case Classification::Consistent:
            return "Consistent";
        case Classification::KnownDiscrepancy:
            return "KnownDiscrepancy";
        case Classification::Failure:
            return "Failure";
    }
    return "Failure";
}

const std::vector<std::string>& known_discrepancy_allowlist() {
    static const std::vector<std::string> allow = {"C4b", "C7a", "C8",
                                                   "C9",  "C11", "C15"};
    return allow;
}

const DiscrepancyEntry* Ledger::find(std::string_view id) const {
    for (const auto& e : entries) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

Ledger run_ledger(const ValidatedParams& p, double tol, std::uint64_t seed,
                  int draws) {
    if (!(tol > 0.0)) {
        throw DomainError("ledger tolerance must be > 0");
    }
    if (draws < 1) {
        throw DomainError("ledger needs at least one parameter draw");
    }

    const std::vector<ValidatedParams> sets = parameter_sets(p, seed, draws);
    Ledger ledger;
    ledger.seed = seed;
    ledger.draws = draws;

    // C1: level pressure against a central finite difference of the energy.
    Probe c1;
    for (const auto& q : sets) {
        const double widths[3] = {q.l1(), std::sqrt(q.l1() * q.l3()), q.l3()};
        for (double L : widths) {
            for (int n = 0; n < 2; ++n) {
                const double h = 1e-5 * std::max(L, 1.0);
                const double fd = (morse_energy(n, L - h, q) -
                                   morse_energy(n, L + h, q)) /
                                  (2.0 * h);
                c1.offer(morse_pressure(n, L, q), fd, DevMode::Rel);
            }
        }
    }
    ledger.entries.push_back(make_entry(
        "C1",
        "level pressure equals minus the width derivative of the level "
        "energy (central difference, step 1e-5*max(L,1))",
        "Eqs. (1), (2)", c1.lhs, c1.rhs, std::max(tol, 1e-6), DevMode::Rel));

    // C2: isoenergetic endpoints recovered by root-solving the constant
    // energy constraint.
    Probe c2;
    for (const auto& q : sets) {
        const double e_high = morse_energy(0, q.l1(), q);
        const double l2 = numeric::bisect_root(
            [&](double L) { return morse_energy(1, L, q) - e_high; }, q.l1(),
            6.0 * q.l1(), 1e-12);
        c2.offer(l2 / q.l1(), 3.0, DevMode::Rel);
        const double e_low = morse_energy(1, q.l3(), q);
        const double l4 = numeric::bisect_root(
            [&](double L) { return morse_energy(0, L, q) - e_low; },
            q.l3() / 6.0, q.l3(), 1e-12);
        c2.offer(l4 / q.l3(), 1.0 / 3.0, DevMode::Rel);
    }
    ledger.entries.push_back(make_entry(
        "C2",
        "isoenergetic endpoints solved from the constant-energy constraint "
        "land on L2/L1 = 3 and L4/L3 = 1/3",
        "Eqs. (4), (9)", c2.lhs, c2.rhs, std::max(tol, 1e-9), DevMode::Rel));

    // C3: the two adiabatic works cancel.
    Probe c3;
    for (const auto& q : sets) {
        c3.offer(stroke_work(StrokeKind::AdiaExpand, q) +
                     stroke_work(StrokeKind::AdiaCompress, q),
                 0.0, DevMode::Abs);
    }
    ledger.entries.push_back(
        make_entry("C3", "adiabatic works cancel over the closed cycle",
                   "Eqs. (7), (12)", c3.lhs, c3.rhs, std::max(tol, 1e-12),
                   DevMode::Abs));

    // C4: closed-form net work against adaptive quadrature of the four
    // stroke pressures, in both variants of the closed form.
    Probe c4a;
    Probe c4b;
    for (const auto& q : sets) {
        const double wq = quadrature_work(q);
        c4a.offer(cycle_work(q, WorkVariant::Corrected), wq, DevMode::Rel);
        c4b.offer(cycle_work(q, WorkVariant::AsPrinted), wq, DevMode::Rel);
    }
    ledger.entries.push_back(make_entry(
        "C4a",
        "net work closed form (9*L1^2 numerator) vs adaptive quadrature of "
        "the stroke pressures",
        "Eq. (13) vs Eqs. (5), (7), (10), (12)", c4a.lhs, c4a.rhs,
        std::max(tol, 1e-8), DevMode::Rel));
    ledger.entries.push_back(make_entry(
        "C4b",
        "net work as printed carries 9*L1^3 in the depth correction, a "
        "dimensional typo; it departs from quadrature whenever L1 != 1",
        "Eq. (13), 9*L1^3 term", c4b.lhs, c4b.rhs, tol, DevMode::Rel));

    // C5: first law across the cycle.
    Probe c5;
    for (const auto& q : sets) {
        c5.offer(cycle_work(q), heat(q, HeatSide::In) - heat(q, HeatSide::Out),
                 DevMode::Rel);
    }
    ledger.entries.push_back(make_entry(
        "C5", "net work equals heat in minus heat out", "Eqs. (13), (14)",
        c5.lhs, c5.rhs, std::max(tol, 1e-12), DevMode::Rel));

    // C6: efficiency against its alpha/beta shorthand.
    Probe c6;
    for (const auto& q : sets) {
        const EfficiencyResult eff = efficiency(q);
        c6.offer(eff.eta, eff.eta_alpha_beta_form, DevMode::Rel);
    }
    ledger.entries.push_back(make_entry(
        "C6", "efficiency equals its alpha/beta shorthand form",
        "Eq. (15), alpha/beta form", c6.lhs, c6.rhs, std::max(tol, 1e-12),
        DevMode::Rel));

    // C7a: energy-ratio efficiency differs from the heat-ratio efficiency
    // at finite depth.
    ledger.entries.push_back(make_entry(
        "C7a",
        "energy-ratio efficiency 1 - E_L/E_H exceeds the heat-ratio "
        "efficiency at finite depth; the two coincide only as d0 -> inf",
        "Eq. (18) vs Eq. (15)", energy_ratio_efficiency(p),
        efficiency(p).eta, tol, DevMode::Rel));

    // C7b: the finite-depth gap to 1 - 3/r closes at rate 1/d0.
    const auto scaled_gap = [&p](double d0) {
        const ValidatedParams q =
            validate_params(EngineParams{1.0, d0, 1.0, p.r(), 1.0});
        return std::abs(efficiency(q).eta - efficiency_ho_limit(q.r())) * d0;
    };
    ledger.entries.push_back(make_entry(
        "C7b",
        "gap between the efficiency and its infinite-depth limit scales as "
        "1/d0 (scaled gaps at d0 = 1e3 and 1e6 agree)",
        "Eq. (16)", scaled_gap(1e3), scaled_gap(1e6), 0.1, DevMode::Rel));

    // C8: printed isoenergetic stroke pressure vs the superposition
    // expectation pressure at an interior width of each stroke.
    Probe c8;
    {
        const double lh = 2.0 * p.l1();
        c8.offer(stroke_pressure(StrokeKind::IsoExpand, lh, p),
                 expectation_pressure(
                     isoenergetic_weight(lh, IsoRef::high(p), p), lh, p),
                 DevMode::Rel);
        const double ll = 2.0 * p.l3() / 3.0;
        c8.offer(stroke_pressure(StrokeKind::IsoCompress, ll, p),
                 expectation_pressure(
                     isoenergetic_weight(ll, IsoRef::low(p), p), ll, p),
                 DevMode::Rel);
    }
    ledger.entries.push_back(make_entry(
        "C8",
        "printed isoenergetic stroke pressure differs from the expectation "
        "pressure of the constrained two-level mixture at interior widths",
        "Eqs. (5), (10)", c8.lhs, c8.rhs, tol, DevMode::Rel));

    // C9: L^2 * P(L) along the adiabatic expansion is not constant at
    // finite depth; C9b: it is constant in the deep-well limit.
    const auto adiabatic_invariant = [](const ValidatedParams& q,
                                        double L) {
        return L * L * stroke_pressure(StrokeKind::AdiaExpand, L, q);
    };
    ledger.entries.push_back(make_entry(
        "C9",
        "claimed adiabatic invariant L^2*P(L) drifts between the stroke "
        "endpoints at finite depth (the depth correction decays as 1/L)",
        "Sec. 2.2, Eq. (7)", adiabatic_invariant(p, p.l2()),
        adiabatic_invariant(p, p.l3()), tol, DevMode::Rel));
    {
        const ValidatedParams deep = validate_params(
            EngineParams{p.a(), 1e12, p.l1(), p.r(), p.vbar()});
        ledger.entries.push_back(make_entry(
            "C9b",
            "the same adiabatic invariant becomes constant in the "
            "deep-well limit (d0 = 1e12)",
            "Sec. 2.2, Eq. (7), HO limit", adiabatic_invariant(deep, deep.l2()),
            adiabatic_invariant(deep, deep.l3()), tol, DevMode::Rel));
    }

    // C10: printed ratio power curve vs its algebraic simplification.
    Probe c10;
    for (const auto& q : sets) {
        c10.offer(pstar_r_morse(q.r()), pstar_r_morse_simplified(q.r()),
                  DevMode::Rel);
    }
    ledger.entries.push_back(make_entry(
        "C10",
        "dimensionless ratio power curve equals (3 ln3/16)(r-3)/r^2",
        "Eq. (21)", c10.lhs, c10.rhs, std::max(tol, 1e-13), DevMode::Rel));

    // C11: numeric argmax of the ratio power curve vs the quoted
    // polynomial root (11+sqrt(73))/4.
    const OptimizationResult opt21 =
        maximize_power_curve(PowerCurve::MorseVsRatio);
    ledger.entries.push_back(make_entry(
        "C11",
        "numeric maximum of the ratio power curve sits at r = 6, not at "
        "the quoted root (11+sqrt(73))/4 of the degree-8 condition",
        "Eq. (21) vs Sec. III r_m^5", opt21.argmax,
        (11.0 + std::sqrt(73.0)) / 4.0, tol, DevMode::Rel));

    // C12: the five quoted roots against bisection on the polynomial (odd
    // multiplicity) or its derivative (the stationary double root at 1).
    {
        const RootSet rs = max_power_polynomial_roots();
        const auto poly = [](double r) { return max_power_polynomial(r); };
        const auto dpoly = [](double r) { return polynomial_derivative(r); };
        const double located[5] = {
            numeric::bisect_root(poly, -10.0, -1.0, 1e-13),
            numeric::bisect_root(poly, -0.4, 0.4, 1e-13),
            numeric::bisect_root(poly, 0.35, 0.9, 1e-13),
            numeric::bisect_root(dpoly, 0.97, 1.03, 1e-13),
            numeric::bisect_root(poly, 1.5, 100.0, 1e-13),
        };
        double worst = -1.0;
        double lhs = 0.0;
        double rhs = 0.0;
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            const double value = rs.roots[i].value;
            const double scale = std::max(1.0, std::abs(value));
            const double dev = std::abs(value - located[i]) / scale;
            if (dev > worst) {
                worst = dev;
                lhs = value;
                rhs = located[i];
            }
        }
        const double scaled_tol =
            std::max(tol, 1e-9) * std::max(1.0, std::abs(lhs));
        ledger.entries.push_back(make_entry(
            "C12",
            "the five quoted real roots of the maximum-power polynomial "
            "match independent bisection",
            "Sec. III, five real solutions", lhs, rhs, scaled_tol,
            DevMode::Abs));
    }

    // C13/C14: maxima of the efficiency power curves vs the quoted values.
    const OptimizationResult opt23 =
        maximize_power_curve(PowerCurve::MorseVsEfficiency);
    ledger.entries.push_back(make_entry(
        "C13",
        "maximum of the efficiency power curve is 0.26001 at eta 0.40358, "
        "matching the quoted 0.26 at 40%",
        "Eq. (23), Sec. IV", opt23.max_value, 0.26, 0.005, DevMode::Abs));
    const OptimizationResult opt25 =
        maximize_power_curve(PowerCurve::HoVsEfficiency);
    ledger.entries.push_back(make_entry(
        "C14",
        "maximum of the infinite-depth efficiency power curve is 0.10102, "
        "matching the quoted 0.10",
        "Eq. (25), Sec. IV", opt25.max_value, 0.10, 0.002, DevMode::Abs));

    // C15: the two dimensionless curves disagree under eta = 1 - 3/r.
    ledger.entries.push_back(make_entry(
        "C15",
        "efficiency power curve at eta = 1/2 vs ratio power curve at r = 6: "
        "the two dimensionless forms use different normalizations and do "
        "not map onto each other under eta = 1 - 3/r",
        "Eq. (23) vs Eq. (21)", pstar_eta_morse(0.5), pstar_r_morse(6.0), tol,
        DevMode::Rel));

    ledger.pass = std::none_of(
        ledger.entries.begin(), ledger.entries.end(),
        [](const DiscrepancyEntry& e) {
            return e.classification == Classification::Failure;
        });
    return ledger;
}

namespace {

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void pad_to(std::string& line, std::size_t column) {
    while (line.size() < column) {
        line += ' ';
    }
}

std::string render_text(const Ledger& ledger) {
    std::string out;
    out += "verification ledger\n";
    out += "seed = " + std::to_string(ledger.seed) + "\n";
    out += "draws = " + std::to_string(ledger.draws) + "\n";
    out += "overall = ";
    out += ledger.pass ? "Pass" : "Fail";
    out += "\n\n";
    std::string header = "id";
    pad_to(header, 6);
    header += "classification";
    pad_to(header, 24);
    header += "lhs";
    pad_to(header, 50);
    header += "rhs";
    pad_to(header, 76);
    header += "abs_dev";
    pad_to(header, 90);
    header += "rel_dev";
    pad_to(header, 104);
    header += "tolerance";
    out += header + "\n";
    for (const auto& e : ledger.entries) {
        std::string line = e.id;
        pad_to(line, 6);
        line += classification_name(e.classification);
        pad_to(line, 24);
        line += format_double(e.lhs);
        pad_to(line, 50);
        line += format_double(e.rhs);
        pad_to(line, 76);
        line += short_number(e.abs_dev);
        pad_to(line, 90);
        line += short_number(e.rel_dev);
        pad_to(line, 104);
        line += short_number(e.tolerance);
        out += line + "\n";
        out += "      [" + e.paper_anchor + "] " + e.description + "\n";
    }
    return out;
}

std::string render_json(const Ledger& ledger) {
    std::string out;
    out += "{\n";
    out += "  \"seed\": " + std::to_string(ledger.seed) + ",\n";
    out += "  \"draws\": " + std::to_string(ledger.draws) + ",\n";
    out += std::string("  \"overall\": \"") + (ledger.pass ? "Pass" : "Fail") +
           "\",\n";
    out += "  \"entries\": [";
    for (std::size_t i = 0; i < ledger.entries.size(); ++i) {
        const auto& e = ledger.entries[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\n";
        out += "      \"id\": \"" + json_escape(e.id) + "\",\n";
        out += "      \"description\": \"" + json_escape(e.description) +
               "\",\n";
        out += "      \"paper_anchor\": \"" + json_escape(e.paper_anchor) +
               "\",\n";
        out += "      \"lhs\": " + format_double(e.lhs) + ",\n";
        out += "      \"rhs\": " + format_double(e.rhs) + ",\n";
        out += "      \"abs_dev\": " + format_double(e.abs_dev) + ",\n";
        out += "      \"rel_dev\": " + format_double(e.rel_dev) + ",\n";
        out += "      \"tolerance\": " + format_double(e.tolerance) + ",\n";
        out += std::string("      \"classification\": \"") +
               std::string(classification_name(e.classification)) + "\"\n";
        out += "    }";
    }
    out += "\n  ]\n}\n";
    return out;
}

}  // namespace

std::string render_report(const Ledger& ledger, ReportFormat format) {
    return format == ReportFormat::Text ? render_text(ledger)
                                        : render_json(ledger);
}

}  // namespace qhe
