#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softgrip/membrane.hpp"

namespace softgrip {

struct ForceSample {
    double time = 0.0;  // s
    double fy = 0.0;    // N, tangential
    double fz = 0.0;    // N, normal
};

struct ForceTrace {
    std::vector<ForceSample> samples;
};

/// Throws DomainError unless times strictly increase and all values are finite.
void validate(const ForceTrace& trace);

inline constexpr double kDefaultContactThreshold = 0.05;  // N

/**
 * Friction coefficient of a sliding run: the largest |F_y| / |F_z| among
 * samples whose |F_z| reaches the contact threshold.
 * Throws NoContactError if no sample qualifies.
 */
double extract_mu(const ForceTrace& trace, double contact_threshold = kDefaultContactThreshold);

struct FrictionSample {
    double pressure = 0.0;      // Pa
    double normal_force = 0.0;  // N
    double mu_measured = 0.0;
    std::string material_label;
};

void validate(const FrictionSample& sample);

/// friction_coefficient along a pressure sweep at fixed normal force.
std::vector<double> predict_mu_curve(const MembraneSpec& spec, std::span<const double> pressures,
                                     double normal_force);

/// Which MembraneSpec fields a fit is allowed to move.
struct FitMask {
    bool sigma0 = true;  // residual_stress_sigma0
    bool eta = true;     // stiffness_pressure_factor_eta
    bool tau_s = true;   // shear_strength_tau_s
    bool mu_rim = true;  // rim_friction_mu_rim
    bool e0 = false;     // zero_pressure_modulus_E0

    static FitMask none() { return {false, false, false, false, false}; }
    int count() const { return sigma0 + eta + tau_s + mu_rim + e0; }

    friend bool operator==(const FitMask&, const FitMask&) = default;
};

/// Parses "sigma0,eta,tau_s,mu_rim,E0" (any subset, comma separated). Throws ParseError.
FitMask parse_fit_mask(std::string_view text);

struct FitOptions {
    int max_iterations = 500;
    double rel_cost_tol = 1e-10;
    double grad_tol = 1e-8;
    double fd_relative_step = 1e-6;
};

struct FitResult {
    MembraneSpec spec;  ///< template with fitted fields replaced
    FitMask mask;
    std::string material_label;
    double rms_residual = 0.0;
    double initial_cost = 0.0;  ///< sum of squared residuals at the template
    double final_cost = 0.0;
    int iterations = 0;
    bool converged = false;
};

/**
 * Least-squares fit of the masked parameters to measured friction samples.
 *
 * Positive parameters are optimised in log space and mu_rim in logit space
 * over (0, 2), so every returned spec satisfies the MembraneSpec invariants.
 * The Jacobian is taken by central differences; where a difference straddles
 * a contact-regime switch for some sample, that sample falls back to a
 * one-sided difference on the side matching the current regime.
 *
 * Throws ArityError for fewer samples than parameters or fewer than two
 * distinct pressures.
 */
FitResult fit_parameters(const MembraneSpec& initial, std::span<const FrictionSample> samples,
                         const FitMask& mask = {}, const FitOptions& options = {});

/// One independent fit per material label, in order of first appearance.
std::vector<FitResult> fit_by_material(const MembraneSpec& initial,
                                       std::span<const FrictionSample> samples,
                                       const FitMask& mask = {}, const FitOptions& options = {});

}  // namespace softgrip
