#include "qhe/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhe/cycle.hpp"
#include "qhe/errors.hpp"
#include "qhe/figures.hpp"
#include "qhe/format.hpp"
#include "qhe/optimize.hpp"
#include "qhe/power.hpp"
#include "qhe/spectra.hpp"
#include "qhe/verify.hpp"

namespace qhe::cli {

namespace {

// Plain-text lines carry 7 significant digits; --json carries the full
// 17-digit round-trip form.
std::string plain(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.7g", v);
    return buf;
}

void print_line(std::ostream& out, const char* name, double v) {
    out << name << " = " << plain(v) << "\n";
}

void run_cycle(const EngineParams& raw, bool json, std::ostream& out) {
    const ValidatedParams p = validate_params(raw);
    const CycleResult res = evaluate_cycle(p);
    const double tau = cycle_time(p);
    const double power = power_output(p);
    if (json) {
        out << "{\n";
        out << "  \"params\": {\"a\": " << format_double(p.a())
            << ", \"d0\": " << format_double(p.d0())
            << ", \"l1\": " << format_double(p.l1())
            << ", \"r\": " << format_double(p.r())
            << ", \"vbar\": " << format_double(p.vbar()) << "},\n";
        out << "  \"widths\": {\"l1\": " << format_double(res.widths.l1)
            << ", \"l2\": " << format_double(res.widths.l2)
            << ", \"l3\": " << format_double(res.widths.l3)
            << ", \"l4\": " << format_double(res.widths.l4) << "},\n";
        out << "  \"work_per_stroke\": {";
        for (std::size_t i = 0; i < kStrokeOrder.size(); ++i) {
            out << (i == 0 ? "" : ", ") << '"'
                << stroke_name(kStrokeOrder[i])
                << "\": " << format_double(res.work_per_stroke[i]);
        }
        out << "},\n";
        out << "  \"total_work\": " << format_double(res.total_work) << ",\n";
        out << "  \"heat_in\": " << format_double(res.heat_in) << ",\n";
        out << "  \"heat_out\": " << format_double(res.heat_out) << ",\n";
        out << "  \"eta\": " << format_double(res.eta) << ",\n";
        out << "  \"eta_ho\": " << format_double(res.eta_ho) << ",\n";
        out << "  \"eta_energy_ratio\": "
            << format_double(res.eta_energy_ratio) << ",\n";
        out << "  \"alpha\": " << format_double(res.alpha_shorthand) << ",\n";
        out << "  \"beta\": " << format_double(res.beta_shorthand) << ",\n";
        out << "  \"e_high\": " << format_double(res.e_high) << ",\n";
        out << "  \"e_low\": " << format_double(res.e_low) << ",\n";
        out << "  \"tau\": " << format_double(tau) << ",\n";
        out << "  \"power\": " << format_double(power) << "\n";
        out << "}\n";
        return;
    }
    print_line(out, "a", p.a());
    print_line(out, "d0", p.d0());
    print_line(out, "l1", p.l1());
    print_line(out, "r", p.r());
    print_line(out, "vbar", p.vbar());
    print_line(out, "l2", res.widths.l2);
    print_line(out, "l3", res.widths.l3);
    print_line(out, "l4", res.widths.l4);
    print_line(out, "W_iso_expand", res.work_per_stroke[0]);
    print_line(out, "W_adia_expand", res.work_per_stroke[1]);
    print_line(out, "W_iso_compress", res.work_per_stroke[2]);
    print_line(out, "W_adia_compress", res.work_per_stroke[3]);
    print_line(out, "W", res.total_work);
    print_line(out, "Q_in", res.heat_in);
    print_line(out, "Q_out", res.heat_out);
    print_line(out, "eta", res.eta);
    print_line(out, "eta_ho", res.eta_ho);
    print_line(out, "eta_energy_ratio", res.eta_energy_ratio);
    print_line(out, "alpha", res.alpha_shorthand);
    print_line(out, "beta", res.beta_shorthand);
    print_line(out, "E_high", res.e_high);
    print_line(out, "E_low", res.e_low);
    print_line(out, "tau", tau);
    print_line(out, "p", power);
}

void run_optimize(const std::string& target, double tol, std::ostream& out) {
    out << "target = " << target << "\n";
    if (target == "paper-poly") {
        const RootSet rs = max_power_polynomial_roots();
        out << "coefficients =";
        for (double c : rs.coefficients) {
            out << ' ' << plain(c);
        }
        out << "\n";
        for (const PolynomialRoot& root : rs.roots) {
            out << "root = " << plain(root.value) << " (multiplicity "
                << root.multiplicity << ")\n";
        }
        print_line(out, "eta_star", eta_star_from_polynomial());
        return;
    }
    PowerCurve curve;
    if (target == "eq21") {
        curve = PowerCurve::MorseVsRatio;
    } else if (target == "eq23") {
        curve = PowerCurve::MorseVsEfficiency;
    } else if (target == "eq24") {
        curve = PowerCurve::HoVsRatio;
    } else {
        curve = PowerCurve::HoVsEfficiency;
    }
    const auto [lo, hi] = default_bracket(curve);
    const OptimizationResult res = maximize_power_curve(curve, lo, hi, tol);
    print_line(out, "argmax", res.argmax);
    print_line(out, "max", res.max_value);
    print_line(out, "bracket_lo", res.bracket_lo);
    print_line(out, "bracket_hi", res.bracket_hi);
    print_line(out, "tolerance", res.tolerance);
    out << "iterations = " << res.iterations << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Morse-oscillator quantum Carnot-like engine calculator"};
    app.require_subcommand(1);

    EngineParams cyc_params;
    bool cyc_json = false;
    CLI::App* cyc = app.add_subcommand("cycle", "Evaluate one engine cycle");
    cyc->add_option("--a", cyc_params.a, "Spectral constant A")->required();
    cyc->add_option("--d0", cyc_params.d0, "Well depth D0")->required();
    cyc->add_option("--l1", cyc_params.l1, "Smallest width L1")->required();
    cyc->add_option("--r", cyc_params.r, "Width ratio L3/L1")->required();
    cyc->add_option("--vbar", cyc_params.vbar, "Average wall speed");
    cyc->add_flag("--json", cyc_json, "Emit JSON");

    std::string opt_target;
    double opt_tol = kDefaultOptTolerance;
    CLI::App* opt = app.add_subcommand("optimize",
                                       "Maximize a power curve or report "
                                       "the polynomial roots");
    opt->add_option("--target", opt_target, "Curve to maximize")
        ->required()
        ->check(CLI::IsMember(
            {"eq21", "eq23", "eq24", "eq25", "paper-poly"}));
    opt->add_option("--tol", opt_tol, "Bracket tolerance");

    std::string fig_out;
    GridSpec fig_grid;
    EngineParams fig_params;
    CLI::App* fig = app.add_subcommand("figures", "Write the figure CSVs");
    fig->add_option("--out", fig_out, "Output directory")->required();
    fig->add_option("--samples", fig_grid.samples, "Points per curve");
    fig->add_option("--rmax", fig_grid.rmax, "Right edge of the ratio grid");
    fig->add_option("--a", fig_params.a, "Spectral constant A");
    fig->add_option("--d0", fig_params.d0, "Well depth D0");
    fig->add_option("--l1", fig_params.l1, "Smallest width L1");
    fig->add_option("--r", fig_params.r, "Width ratio L3/L1");

    double ver_tol = 1e-9;
    std::uint64_t ver_seed = 42;
    int ver_draws = 100;
    bool ver_json = false;
    CLI::App* ver =
        app.add_subcommand("verify", "Run the verification ledger");
    ver->add_option("--tol", ver_tol, "Tolerance of the exact identities");
    ver->add_option("--seed", ver_seed, "Sweep seed");
    ver->add_option("--draws", ver_draws, "Random parameter draws");
    ver->add_flag("--json", ver_json, "Emit the JSON report");

    WidthParams width_params;
    CLI::App* wid =
        app.add_subcommand("width", "Well width at a probe depth");
    wid->add_option("--alpha", width_params.alpha_morse, "Range parameter")
        ->required();
    wid->add_option("--v0", width_params.v0, "Probe depth")->required();
    wid->add_option("--d0", width_params.d0, "Well depth")->required();

    WidthParams pot_params;
    double pot_x = 0.0;
    CLI::App* pot =
        app.add_subcommand("potential", "Morse potential profile value");
    pot->add_option("--alpha", pot_params.alpha_morse, "Range parameter")
        ->required();
    pot->add_option("--x0", pot_params.x0, "Equilibrium separation")
        ->required();
    pot->add_option("--d0", pot_params.d0, "Well depth")->required();
    pot->add_option("--x", pot_x, "Evaluation point")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (cyc->parsed()) {
            run_cycle(cyc_params, cyc_json, out);
        } else if (opt->parsed()) {
            run_optimize(opt_target, opt_tol, out);
        } else if (fig->parsed()) {
            const ValidatedParams p = validate_params(fig_params);
            if (fig_grid.samples < 2) {
                throw GridError("samples must be >= 2");
            }
            if (!(fig_grid.rmax > 3.0)) {
                throw GridError("rmax must exceed 3");
            }
            write_figure_files(p, fig_grid, fig_out);
            namespace fs = std::filesystem;
            out << "wrote "
                << (fs::path(fig_out) / "fig1_pv.csv").string() << "\n";
            out << "wrote "
                << (fs::path(fig_out) / "fig2_pstar_eta.csv").string()
                << "\n";
            out << "wrote "
                << (fs::path(fig_out) / "fig3_pstar_r.csv").string() << "\n";
        } else if (ver->parsed()) {
            const ValidatedParams p = validate_params(EngineParams{});
            const Ledger ledger = run_ledger(p, ver_tol, ver_seed, ver_draws);
            out << render_report(ledger, ver_json ? ReportFormat::Json
                                                  : ReportFormat::Text);
            return ledger.pass ? 0 : 3;
        } else if (wid->parsed()) {
            if (!(width_params.alpha_morse > 0.0)) {
                throw NonPositiveError("alpha must be > 0");
            }
            print_line(out, "L", width_from_depth(width_params));
        } else if (pot->parsed()) {
            print_line(out, "V", morse_potential_value(pot_x, pot_params));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace qhe::cli
