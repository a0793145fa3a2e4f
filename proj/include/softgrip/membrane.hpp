#pragma once

// Kinematics of the pressurised silicone membrane: bulge-test pressure law,
// spherical-cap geometry, protrusion past the rim, and the pressure-stiffened
// contact modulus.

namespace softgrip {

/// How bulge height is obtained from pressure.
enum class HeightModel {
    Exact,   ///< invert the full cubic pressure law, capped at max_bulge_h_max
    Linear,  ///< h = min(k_h p, max_bulge_h_max)
};

/**
 * Geometry and material of one finger's shell opening and silicone pocket.
 * All fields are SI. The half-span a = width_W / 2 is derived on demand.
 */
struct MembraneSpec {
    double width_W = 0.0;                        // m
    double length_L = 0.0;                       // m
    double thickness_t = 0.0;                    // m
    double rim_gap_g = 0.0;                      // m
    double residual_stress_sigma0 = 0.0;         // Pa
    double youngs_modulus_E = 0.0;               // Pa
    double poisson_nu = 0.0;
    double zero_pressure_modulus_E0 = 0.0;       // Pa
    double stiffness_pressure_factor_eta = 0.0;  // 1/Pa
    double max_bulge_h_max = 0.0;                // m
    double shear_strength_tau_s = 0.0;           // Pa
    double rim_friction_mu_rim = 0.0;

    /// Number of identical bulges sharing the normal load. 1 = single effective contact.
    int parallel_contacts = 1;
    HeightModel height_model = HeightModel::Exact;

    double half_span() const { return 0.5 * width_W; }

    friend bool operator==(const MembraneSpec&, const MembraneSpec&) = default;
};

/// Throws DomainError naming the first violated invariant.
void validate(const MembraneSpec& spec);

/// Small-deflection compliance k_h = a^2 / (2 sigma0 t), in m/Pa.
double bulge_gain(const MembraneSpec& spec);

/// Bulge-test pressure for apex height h in [0, h_max].
double bulge_pressure(const MembraneSpec& spec, double h);

/// d(bulge_pressure)/dh.
double bulge_pressure_slope(const MembraneSpec& spec, double h);

/// Unique h >= 0 with bulge_pressure(h) == p, clamped to h_max.
double bulge_height_exact(const MembraneSpec& spec, double p);

/// min(k_h p, h_max).
double bulge_height_linear(const MembraneSpec& spec, double p);

/// Dispatches on spec.height_model.
double bulge_height(const MembraneSpec& spec, double p);

/// Spherical-cap radius (a^2 + h^2) / (2h). h must be positive.
double curvature_radius(const MembraneSpec& spec, double h);

/// Height of the cap above the rim plane; zero while the membrane is recessed.
double protrusion(const MembraneSpec& spec, double h);

/// E*(p) = E0 (1 + eta p).
double effective_modulus(const MembraneSpec& spec, double p);

}  // namespace softgrip
