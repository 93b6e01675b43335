#include "qhe/figures.hpp"

#include <filesystem>
#include <fstream>

#include "qhe/cycle.hpp"
#include "qhe/format.hpp"
#include "qhe/power.hpp"

namespace qhe {

namespace {

void require_samples(int samples) {
    if (samples < 2) {
        throw GridError("samples must be >= 2, got " +
                        std::to_string(samples));
    }
}

// j/(samples-1) interpolation with exact endpoints, so corner widths land
// byte-identical in adjacent strokes.
double grid_point(double start, double end, int j, int samples) {
    if (j == 0) {
        return start;
    }
    if (j == samples - 1) {
        return end;
    }
    return start + (end - start) * j / (samples - 1);
}

}  // namespace

std::string emit_pv_diagram(const ValidatedParams& p, const GridSpec& g) {
    require_samples(g.samples);
    const WidthQuad w = stroke_endpoints(p);
    const double starts[4] = {w.l1, w.l2, w.l3, w.l4};
    const double ends[4] = {w.l2, w.l3, w.l4, w.l1};
    std::string out = "stroke,L,pressure\n";
    for (std::size_t s = 0; s < kStrokeOrder.size(); ++s) {
        const StrokeKind kind = kStrokeOrder[s];
        for (int j = 0; j < g.samples; ++j) {
            const double L = grid_point(starts[s], ends[s], j, g.samples);
            out += stroke_name(kind);
            out += ',';
            out += format_double(L);
            out += ',';
            out += format_double(stroke_pressure(kind, L, p));
            out += '\n';
        }
    }
    return out;
}

std::string emit_pstar_vs_eta(const GridSpec& g) {
    std::string out = "eta,pstar_morse_eq23,pstar_ho_eq25\n";
    for (int i = 0; i < g.samples; ++i) {
        const double eta = static_cast<double>(i) / g.samples;
        out += format_double(eta);
        out += ',';
        out += format_double(pstar_eta_morse(eta));
        out += ',';
        out += format_double(pstar_eta_ho(eta));
        out += '\n';
    }
    return out;
}

std::string emit_pstar_vs_r(const GridSpec& g) {
    require_samples(g.samples);
    if (!(g.rmax > 3.0)) {
        throw GridError("rmax must exceed 3, got " + std::to_string(g.rmax));
    }
    std::string out = "r,pstar_morse_eq21,pstar_ho_eq24\n";
    for (int i = 0; i < g.samples; ++i) {
        const double r = grid_point(3.0, g.rmax, i, g.samples);
        out += format_double(r);
        out += ',';
        out += format_double(pstar_r_morse(r));
        out += ',';
        out += format_double(pstar_r_ho(r));
        out += '\n';
    }
    return out;
}

void write_figure_files(const ValidatedParams& p, const GridSpec& g,
                        const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const auto write = [&dir](const char* name, const std::string& text) {
        std::ofstream f(fs::path(dir) / name, std::ios::binary);
        if (!f) {
            throw GridError(std::string("cannot open output file ") + name);
        }
        f << text;
    };
    write("fig1_pv.csv", emit_pv_diagram(p, g));
    write("fig2_pstar_eta.csv", emit_pstar_vs_eta(g));
    write("fig3_pstar_r.csv", emit_pstar_vs_r(g));
}

}  // namespace qhe
