#pragma once

#include <array>
#include <string_view>

#include "qhe/params.hpp"

namespace qhe {

// The four strokes in traversal order.
enum class StrokeKind { IsoExpand, AdiaExpand, IsoCompress, AdiaCompress };

constexpr std::array<StrokeKind, 4> kStrokeOrder = {
    StrokeKind::IsoExpand, StrokeKind::AdiaExpand, StrokeKind::IsoCompress,
    StrokeKind::AdiaCompress};

std::string_view stroke_name(StrokeKind k);

// The four corner widths.  l2 = 3*l1 and l4 = l3/3 always.
struct WidthQuad {
    double l1;
    double l2;
    double l3;
    double l4;
};

// Total-work closed form.  Corrected carries the 9*l1^2 numerator that the
// per-stroke antiderivatives give; AsPrinted carries 9*l1^3 and exists only
// so the discrepancy ledger can measure it.
enum class WorkVariant { Corrected, AsPrinted };

enum class HeatSide { In, Out };

// Cycle efficiency together with the algebraically equivalent shorthand
// form 1 - (3 l1/l3)(1-alpha)/(1-beta).
struct EfficiencyResult {
    double eta;
    double eta_alpha_beta_form;
    double alpha;  // 3a / (4 l3 d0)
    double beta;   // a / (4 l1 d0)
};

struct CycleResult {
    WidthQuad widths;
    std::array<double, 4> work_per_stroke;  // traversal order, signed
    double total_work;
    double heat_in;
    double heat_out;
    double eta;               // 1 - Q_out/Q_in
    double eta_ho;            // 1 - 3/r
    double eta_energy_ratio;  // 1 - E_L/E_H
    double alpha_shorthand;
    double beta_shorthand;
    double e_high;
    double e_low;
};

WidthQuad stroke_endpoints(const ValidatedParams& p);

// Pressure of the printed stroke curve at width L.  Throws
// OutOfStrokeRangeError when L is outside the stroke's interval.
double stroke_pressure(StrokeKind k, double L, const ValidatedParams& p);

// Signed work of one stroke over its traversal direction (closed form).
double stroke_work(StrokeKind k, const ValidatedParams& p);

// Net work of the closed cycle.
double cycle_work(const ValidatedParams& p,
                  WorkVariant variant = WorkVariant::Corrected);

// Heat absorbed (In) during the isoenergetic expansion or rejected (Out)
// during the isoenergetic compression; both positive.
double heat(const ValidatedParams& p, HeatSide side);

EfficiencyResult efficiency(const ValidatedParams& p);

// Infinite-depth limit 1 - 3/r.  Throws RatioTooSmallError for r <= 3.
double efficiency_ho_limit(double r);

// 1 - E_L/E_H with the reference energies of the two isoenergetic strokes.
// Coincides with efficiency() only in the infinite-depth limit.
double energy_ratio_efficiency(const ValidatedParams& p);

CycleResult evaluate_cycle(const ValidatedParams& p);

}  // namespace qhe
