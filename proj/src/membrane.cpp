#include "softgrip/membrane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "softgrip/errors.hpp"
#include "softgrip/root_finding.hpp"

namespace softgrip {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("MembraneSpec: ") + what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate(const MembraneSpec& s) {
    require(finite(s.width_W) && finite(s.length_L) && finite(s.thickness_t) &&
                finite(s.rim_gap_g) && finite(s.residual_stress_sigma0) &&
                finite(s.youngs_modulus_E) && finite(s.poisson_nu) &&
                finite(s.zero_pressure_modulus_E0) &&
                finite(s.stiffness_pressure_factor_eta) && finite(s.max_bulge_h_max) &&
                finite(s.shear_strength_tau_s) && finite(s.rim_friction_mu_rim),
            "all fields must be finite");
    require(s.width_W > 0.0, "width_W must be positive");
    require(s.width_W < s.length_L, "width_W must be smaller than length_L");
    require(s.thickness_t > 0.0, "thickness_t must be positive");
    require(s.rim_gap_g >= 0.0, "rim_gap_g must be non-negative");
    require(s.residual_stress_sigma0 > 0.0, "residual_stress_sigma0 must be positive");
    require(s.youngs_modulus_E > 0.0, "youngs_modulus_E must be positive");
    require(s.poisson_nu >= 0.0 && s.poisson_nu < 0.5, "poisson_nu must lie in [0, 0.5)");
    require(s.zero_pressure_modulus_E0 > 0.0, "zero_pressure_modulus_E0 must be positive");
    require(s.stiffness_pressure_factor_eta >= 0.0,
            "stiffness_pressure_factor_eta must be non-negative");
    require(s.max_bulge_h_max > 0.0, "max_bulge_h_max must be positive");
    require(s.shear_strength_tau_s > 0.0, "shear_strength_tau_s must be positive");
    require(s.rim_friction_mu_rim >= 0.0, "rim_friction_mu_rim must be non-negative");
    require(s.parallel_contacts >= 1, "parallel_contacts must be at least 1");
}

double bulge_gain(const MembraneSpec& spec) {
    const double a = spec.half_span();
    return a * a / (2.0 * spec.residual_stress_sigma0 * spec.thickness_t);
}

namespace {

// p(h) = c1 h + c3 h^3
struct PressureLaw {
    double c1;
    double c3;

    explicit PressureLaw(const MembraneSpec& s) {
        const double a = s.half_span();
        const double a2 = a * a;
        c1 = 2.0 * s.residual_stress_sigma0 * s.thickness_t / a2;
        c3 = (4.0 / 3.0) * s.youngs_modulus_E * s.thickness_t /
             ((1.0 - s.poisson_nu * s.poisson_nu) * a2 * a2);
    }

    double value(double h) const { return c1 * h + c3 * h * h * h; }
    double slope(double h) const { return c1 + 3.0 * c3 * h * h; }
};

}  // namespace

double bulge_pressure(const MembraneSpec& spec, double h) {
    if (!(h >= 0.0 && h <= spec.max_bulge_h_max)) {
        throw DomainError("bulge_pressure: h outside [0, max_bulge_h_max]");
    }
    return PressureLaw(spec).value(h);
}

double bulge_pressure_slope(const MembraneSpec& spec, double h) {
    return PressureLaw(spec).slope(h);
}

double bulge_height_exact(const MembraneSpec& spec, double p) {
    if (!(p >= 0.0)) throw DomainError("bulge_height_exact: pressure must be non-negative");
    if (p == 0.0) return 0.0;

    const PressureLaw law(spec);
    const double h_max = spec.max_bulge_h_max;
    if (p >= law.value(h_max)) return h_max;

    RootOptions opts;
    opts.residual_tol = 1e-10 * std::max(p, 1.0);
    opts.x_tol = 4.0 * std::numeric_limits<double>::epsilon() * h_max;
    opts.max_iterations = 200;

    // Bracket slightly past h_max so the root is strictly interior.
    const double hi = h_max * (1.0 + 1e-3);
    return solve_increasing(
        [&](double h) { return std::pair{law.value(h) - p, law.slope(h)}; }, 0.0, hi, opts);
}

double bulge_height_linear(const MembraneSpec& spec, double p) {
    if (!(p >= 0.0)) throw DomainError("bulge_height_linear: pressure must be non-negative");
    return std::min(bulge_gain(spec) * p, spec.max_bulge_h_max);
}

double bulge_height(const MembraneSpec& spec, double p) {
    return spec.height_model == HeightModel::Linear ? bulge_height_linear(spec, p)
                                                    : bulge_height_exact(spec, p);
}

double curvature_radius(const MembraneSpec& spec, double h) {
    if (!(h > 0.0)) throw DomainError("curvature_radius: flat membrane (h <= 0) has no cap radius");
    const double a = spec.half_span();
    return (a * a + h * h) / (2.0 * h);
}

double protrusion(const MembraneSpec& spec, double h) {
    if (!(h >= 0.0)) throw DomainError("protrusion: h must be non-negative");
    return h > spec.rim_gap_g ? h - spec.rim_gap_g : 0.0;
}

double effective_modulus(const MembraneSpec& spec, double p) {
    if (!(p >= 0.0)) throw DomainError("effective_modulus: pressure must be non-negative");
    return spec.zero_pressure_modulus_E0 * (1.0 + spec.stiffness_pressure_factor_eta * p);
}

}  // namespace softgrip
