#include "qhe/cycle.hpp"

#include <cmath>
#include <string>

#include "qhe/spectra.hpp"

namespace qhe {

namespace {

constexpr double kLn3 = 1.0986122886681096914;

void require_in_stroke(double L, double lo, double hi) {
    // Corners belong to both adjacent strokes.
    if (!(L >= lo && L <= hi)) {
        throw OutOfStrokeRangeError("width " + std::to_string(L) +
                                    " outside stroke range [" +
                                    std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
}

}  // namespace

std::string_view stroke_name(StrokeKind k) {
    switch (k) {
        case StrokeKind::IsoExpand:
            return "iso_expand";
        case StrokeKind::AdiaExpand:
            return "adia_expand";
        case StrokeKind::IsoCompress:
            return "iso_compress";
        case StrokeKind::AdiaCompress:
            return "adia_compress";
    }
    throw DomainError("unknown stroke");
}

WidthQuad stroke_endpoints(const ValidatedParams& p) {
    return WidthQuad{p.l1(), p.l2(), p.l3(), p.l4()};
}

double stroke_pressure(StrokeKind k, double L, const ValidatedParams& p) {
    const double a = p.a();
    const double d0 = p.d0();
    switch (k) {
        case StrokeKind::IsoExpand: {
            const double l1 = p.l1();
            require_in_stroke(L, l1, p.l2());
            return a / (2.0 * l1 * L) - a * a / (8.0 * l1 * l1 * L * d0);
        }
        case StrokeKind::AdiaExpand: {
            require_in_stroke(L, p.l2(), p.l3());
            return 3.0 * a / (2.0 * L * L) -
                   9.0 * a * a / (8.0 * L * L * L * d0);
        }
        case StrokeKind::IsoCompress: {
            const double l3 = p.l3();
            require_in_stroke(L, p.l4(), l3);
            return 3.0 * a / (2.0 * l3 * L) -
                   9.0 * a * a / (8.0 * d0 * l3 * l3 * L);
        }
        case StrokeKind::AdiaCompress: {
            require_in_stroke(L, p.l1(), p.l4());
            return a / (2.0 * L * L) - a * a / (8.0 * L * L * L * d0);
        }
    }
    throw DomainError("unknown stroke");
}

double stroke_work(StrokeKind k, const ValidatedParams& p) {
    const double a = p.a();
    const double d0 = p.d0();
    const double l1 = p.l1();
    const double l3 = p.l3();
    switch (k) {
        case StrokeKind::IsoExpand:
            return (a / (2.0 * l1) - a * a / (8.0 * l1 * l1 * d0)) * kLn3;
        case StrokeKind::AdiaExpand:
            return a / (2.0 * l1) - 3.0 * a / (2.0 * l3) -
                   a * a / (16.0 * d0 * l1 * l1) +
                   9.0 * a * a / (16.0 * d0 * l3 * l3);
        case StrokeKind::IsoCompress:
            return -(3.0 * a / (2.0 * l3) -
                     9.0 * a * a / (8.0 * l3 * l3 * d0)) *
                   kLn3;
        case StrokeKind::AdiaCompress:
            return -(a / (2.0 * l1) - 3.0 * a / (2.0 * l3) -
                     a * a / (16.0 * d0 * l1 * l1) +
                     9.0 * a * a / (16.0 * d0 * l3 * l3));
    }
    throw DomainError("unknown stroke");
}

double cycle_work(const ValidatedParams& p, WorkVariant variant) {
    const double a = p.a();
    const double d0 = p.d0();
    const double l1 = p.l1();
    const double l3 = p.l3();
    const double cube_or_square =
        variant == WorkVariant::AsPrinted ? 9.0 * l1 * l1 * l1
                                          : 9.0 * l1 * l1;
    return 0.5 * a *
           ((l3 - 3.0 * l1) / (l1 * l3) +
            (a / (4.0 * d0)) * (cube_or_square - l3 * l3) /
                (l1 * l1 * l3 * l3)) *
           kLn3;
}

double heat(const ValidatedParams& p, HeatSide side) {
    return side == HeatSide::In
               ? stroke_work(StrokeKind::IsoExpand, p)
               : -stroke_work(StrokeKind::IsoCompress, p);
}

EfficiencyResult efficiency(const ValidatedParams& p) {
    const double q_in = heat(p, HeatSide::In);
    const double q_out = heat(p, HeatSide::Out);
    const double alpha = 3.0 * p.a() / (4.0 * p.l3() * p.d0());
    const double beta = p.a() / (4.0 * p.l1() * p.d0());
    return EfficiencyResult{
        1.0 - q_out / q_in,
        1.0 - (3.0 * p.l1() / p.l3()) * (1.0 - alpha) / (1.0 - beta), alpha,
        beta};
}

double efficiency_ho_limit(double r) {
    if (!(r > 3.0)) {
        throw RatioTooSmallError("width ratio r must exceed 3, got " +
                                 std::to_string(r));
    }
    return 1.0 - 3.0 / r;
}

double energy_ratio_efficiency(const ValidatedParams& p) {
    return 1.0 - morse_energy(1, p.l3(), p) / morse_energy(0, p.l1(), p);
}

CycleResult evaluate_cycle(const ValidatedParams& p) {
    CycleResult res;
    res.widths = stroke_endpoints(p);
    for (std::size_t i = 0; i < kStrokeOrder.size(); ++i) {
        res.work_per_stroke[i] = stroke_work(kStrokeOrder[i], p);
    }
    res.total_work = cycle_work(p);
    res.heat_in = heat(p, HeatSide::In);
    res.heat_out = heat(p, HeatSide::Out);
    const EfficiencyResult eff = efficiency(p);
    res.eta = eff.eta;
    res.eta_ho = efficiency_ho_limit(p.r());
    res.eta_energy_ratio = energy_ratio_efficiency(p);
    res.alpha_shorthand = eff.alpha;
    res.beta_shorthand = eff.beta;
    res.e_high = morse_energy(0, p.l1(), p);
    res.e_low = morse_energy(1, p.l3(), p);
    return res;
}

}  // namespace qhe
