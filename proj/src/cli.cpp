#include "softgrip/cli.hpp"

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "softgrip/calibration.hpp"
#include "softgrip/config.hpp"
#include "softgrip/contact.hpp"
#include "softgrip/csv.hpp"
#include "softgrip/errors.hpp"
#include "softgrip/grasp.hpp"
#include "softgrip/sweep.hpp"
#include "softgrip/units.hpp"

namespace softgrip {

namespace {

constexpr int kExitModel = 1;
constexpr int kExitUsage = 2;

void put(std::ostream& out, const char* key, double v) {
    out << key << " = " << format_double(v) << '\n';
}

struct MuArgs {
    std::string config;
    double pressure_kpa = 0.0;
    double force_n = 0.0;
};

int run_mu(const MuArgs& a, std::ostream& out) {
    const MembraneSpec spec = load_membrane_spec(a.config);
    const double p = units::kpa_to_pa(a.pressure_kpa);
    const double mu = friction_coefficient(spec, p, a.force_n);
    const ContactSolution c = contact_solve(spec, p, a.force_n);
    out << "regime = " << regime_name(c.regime) << '\n';
    put(out, "mu", mu);
    put(out, "contact_area_mm2", units::m2_to_mm2(c.contact_area_A));
    return 0;
}

struct BulgeArgs {
    std::string config;
    double pressure_kpa = 0.0;
    bool exact = false;
    bool linear = false;
};

int run_bulge(const BulgeArgs& a, std::ostream& out) {
    MembraneSpec spec = load_membrane_spec(a.config);
    if (a.linear) spec.height_model = HeightModel::Linear;
    if (a.exact) spec.height_model = HeightModel::Exact;
    const double p = units::kpa_to_pa(a.pressure_kpa);
    const double h = bulge_height(spec, p);
    out << "height_model = " << (spec.height_model == HeightModel::Linear ? "linear" : "exact")
        << '\n';
    put(out, "h_mm", units::m_to_mm(h));
    if (h > 0.0) put(out, "R_mm", units::m_to_mm(curvature_radius(spec, h)));
    else out << "R_mm = inf\n";
    put(out, "s_mm", units::m_to_mm(protrusion(spec, h)));
    put(out, "E_star_kpa", units::pa_to_kpa(effective_modulus(spec, p)));
    return 0;
}

struct GraspArgs {
    std::string config;
    double mass_kg = 0.0;
    double pressure_kpa = 0.0;
    std::optional<double> force_n;
    bool min_force = false;
    int fingers = 2;
    double gravity = units::kStandardGravity;
    double search_max_n = 100.0;
};

int run_grasp(const GraspArgs& a, std::ostream& out, std::ostream& err) {
    if (a.force_n.has_value() == a.min_force) {
        err << "grasp: exactly one of --force-n or --min-force is required\n";
        return kExitUsage;
    }
    const MembraneSpec spec = load_membrane_spec(a.config);
    const double p = units::kpa_to_pa(a.pressure_kpa);
    if (a.min_force) {
        const double n_min = min_normal_force(spec, a.mass_kg, p, a.fingers, a.search_max_n, a.gravity);
        put(out, "min_force_n", n_min);
        return 0;
    }
    GraspScenario sc;
    sc.mass_m = a.mass_kg;
    sc.gravity_g = a.gravity;
    sc.finger_count_n = a.fingers;
    sc.normal_force_N = *a.force_n;
    sc.pressure_p = p;
    const GraspOutcome g = grasp_feasible(spec, sc);
    out << "feasible = " << (g.feasible ? "true" : "false") << '\n';
    put(out, "margin_n", g.margin);
    put(out, "mu_available", g.mu_available);
    put(out, "mu_required", g.mu_required);
    return 0;
}

struct SweepArgs {
    std::string config;
    std::string sweep;
    std::string out;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

int run_sweep_cmd(const SweepArgs& a, std::ostream& err) {
    const MembraneSpec spec = load_membrane_spec(a.config);
    SweepConfig cfg = load_sweep_config(a.sweep);
    if (a.seed) cfg.noise.seed = *a.seed;
    const auto cells = run_sweep(spec, cfg, a.threads);
    write_text_file(a.out, format_sweep_csv(std::span<const SweepCell>(cells)));
    std::size_t errors = 0;
    for (const SweepCell& c : cells) errors += c.regime ? 0 : 1;
    if (errors > 0) err << "sweep: " << errors << " cell(s) failed to evaluate\n";
    return 0;
}

struct CalibrateArgs {
    std::string config;
    std::string data;
    std::string out;
    std::string fit;
};

int run_calibrate(const CalibrateArgs& a, std::ostream& err) {
    const MembraneSpec spec = load_membrane_spec(a.config);
    const auto samples = parse_friction_samples_csv(read_text_file(a.data));
    const FitMask mask = a.fit.empty() ? FitMask{} : parse_fit_mask(a.fit);
    const auto results = fit_by_material(spec, samples, mask);
    write_text_file(a.out, format_fit_report(results));
    for (const FitResult& r : results) {
        if (!r.converged) err << "calibrate: fit for '" << r.material_label << "' did not converge\n";
    }
    return 0;
}

struct ExtractArgs {
    std::string trace;
    double threshold_n = kDefaultContactThreshold;
};

int run_extract(const ExtractArgs& a, std::ostream& out) {
    const ForceTrace trace = parse_force_trace_csv(read_text_file(a.trace));
    put(out, "mu", extract_mu(trace, a.threshold_n));
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pressure-modulated friction finger model"};
    app.require_subcommand(1);

    MuArgs mu;
    auto* mu_cmd = app.add_subcommand("mu", "Contact regime, friction coefficient and area");
    mu_cmd->add_option("--config", mu.config, "Membrane config file")->required();
    mu_cmd->add_option("--pressure-kpa", mu.pressure_kpa)->required();
    mu_cmd->add_option("--force-n", mu.force_n)->required();

    BulgeArgs bulge;
    auto* bulge_cmd = app.add_subcommand("bulge", "Bulge height, cap radius, protrusion, modulus");
    bulge_cmd->add_option("--config", bulge.config)->required();
    bulge_cmd->add_option("--pressure-kpa", bulge.pressure_kpa)->required();
    auto* exact_flag = bulge_cmd->add_flag("--exact", bulge.exact, "Invert the full pressure law");
    auto* linear_flag = bulge_cmd->add_flag("--linear", bulge.linear, "Use h = min(k_h p, h_max)");
    exact_flag->excludes(linear_flag);

    GraspArgs grasp;
    auto* grasp_cmd = app.add_subcommand("grasp", "Grasp feasibility or minimum normal force");
    grasp_cmd->add_option("--config", grasp.config)->required();
    grasp_cmd->add_option("--mass-kg", grasp.mass_kg)->required();
    grasp_cmd->add_option("--pressure-kpa", grasp.pressure_kpa)->required();
    auto* force_opt = grasp_cmd->add_option("--force-n", grasp.force_n, "Per-finger normal force");
    auto* min_flag = grasp_cmd->add_flag("--min-force", grasp.min_force);
    force_opt->excludes(min_flag);
    grasp_cmd->add_option("--fingers", grasp.fingers)->capture_default_str();
    grasp_cmd->add_option("--gravity", grasp.gravity)->capture_default_str();
    grasp_cmd->add_option("--search-max-n", grasp.search_max_n)->capture_default_str();

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate an (N, p) grid to CSV");
    sweep_cmd->add_option("--config", sweep.config)->required();
    sweep_cmd->add_option("--sweep", sweep.sweep, "Sweep definition file")->required();
    sweep_cmd->add_option("--out", sweep.out, "Output CSV")->required();
    sweep_cmd->add_option("--seed", sweep.seed, "Override the sweep file's seed");
    sweep_cmd->add_option("--threads", sweep.threads)->capture_default_str();

    CalibrateArgs cal;
    auto* cal_cmd = app.add_subcommand("calibrate", "Fit model parameters to friction samples");
    cal_cmd->add_option("--config", cal.config)->required();
    cal_cmd->add_option("--data", cal.data, "Friction sample CSV")->required();
    cal_cmd->add_option("--out", cal.out, "Fit report file")->required();
    cal_cmd->add_option("--fit", cal.fit, "Comma list from sigma0,eta,tau_s,mu_rim,E0");

    ExtractArgs ex;
    auto* ex_cmd = app.add_subcommand("extract-mu", "Friction coefficient from a force trace");
    ex_cmd->add_option("--trace", ex.trace, "Force trace CSV")->required();
    ex_cmd->add_option("--threshold-n", ex.threshold_n)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*mu_cmd) return run_mu(mu, out);
        if (*bulge_cmd) return run_bulge(bulge, out);
        if (*grasp_cmd) return run_grasp(grasp, out, err);
        if (*sweep_cmd) return run_sweep_cmd(sweep, err);
        if (*cal_cmd) return run_calibrate(cal, err);
        if (*ex_cmd) return run_extract(ex, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << " (best margin " << format_double(e.best_margin())
            << " N)\n";
        return kExitModel;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitModel;
    }
    return kExitUsage;
}

}  // namespace softgrip
