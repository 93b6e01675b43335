#pragma once

#include <string>

#include "qhe/params.hpp"

namespace qhe {

struct GridSpec {
    int samples = 512;   // points per curve (per stroke for the PV diagram)
    double rmax = 20.0;  // right edge of the ratio grid
};

// PV loop of the cycle: header `stroke,L,pressure`, `samples` rows per
// stroke in traversal order, corner widths duplicated across adjacent
// strokes.  Throws GridError for samples < 2.
std::string emit_pv_diagram(const ValidatedParams& p, const GridSpec& g);

// Dimensionless power versus efficiency: header
// `eta,pstar_morse_eq23,pstar_ho_eq25`, eta uniform on [0, 1 - 1/samples].
std::string emit_pstar_vs_eta(const GridSpec& g);

// Dimensionless power versus width ratio: header
// `r,pstar_morse_eq21,pstar_ho_eq24`, r uniform on [3, rmax].
// Throws GridError for samples < 2 or rmax <= 3.
std::string emit_pstar_vs_r(const GridSpec& g);

// Writes fig1_pv.csv, fig2_pstar_eta.csv and fig3_pstar_r.csv into `dir`
// (created if missing).  Output is deterministic byte for byte.
void write_figure_files(const ValidatedParams& p, const GridSpec& g,
                        const std::string& dir);

}  // namespace qhe
