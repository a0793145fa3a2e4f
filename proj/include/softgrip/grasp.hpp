#pragma once

#include <cstdint>

#include "softgrip/contact.hpp"
#include "softgrip/membrane.hpp"
#include "softgrip/units.hpp"

namespace softgrip {

/// Antipodal grasp of a payload by n identical fingers.
struct GraspScenario {
    double mass_m = 0.0;                         // kg
    double gravity_g = units::kStandardGravity;  // m/s^2
    int finger_count_n = 2;
    double normal_force_N = 0.0;                 // N, per finger
    double pressure_p = 0.0;                     // Pa

    double weight() const { return mass_m * gravity_g; }
};

void validate(const GraspScenario& scenario);

struct GraspOutcome {
    bool feasible = false;
    double margin = 0.0;        // n F_f - m g, N
    double mu_available = 0.0;
    double mu_required = 0.0;
};

/// Trial-to-trial variability applied to tau_s and payload mass.
struct NoiseModel {
    double tau_s_rel_sigma = 0.0;
    double mass_rel_sigma = 0.0;
    std::uint64_t seed = 0;
};

void validate(const NoiseModel& noise);

/// m g / (n N). Throws DomainError when N == 0.
double required_friction(const GraspScenario& scenario);

GraspOutcome grasp_feasible(const MembraneSpec& spec, const GraspScenario& scenario);

/**
 * Smallest per-finger normal force in (0, search_max_N] that holds mass_m
 * at pressure_p, to 1e-6 N.
 *
 * Friction force is nondecreasing in N, so a bisection on the feasibility
 * predicate suffices. With rim_friction_mu_rim == 0 the friction force can
 * saturate in the partial regime; that case is handled by a grid scan
 * followed by local refinement.
 *
 * Throws InfeasibleError (carrying the margin at search_max_N) when no force
 * in the window is enough.
 */
double min_normal_force(const MembraneSpec& spec, double mass_m, double pressure_p, int n,
                        double search_max_N, double gravity_g = units::kStandardGravity);

/// Multiplicative factor ~ N(1, rel_sigma) truncated to +-3 sigma and floored at 0.01.
double noise_factor(double rel_sigma, std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t trial, std::uint64_t component);

/**
 * Fraction of `trials` perturbed grasps that are feasible.
 *
 * Trial i draws its factors from (noise.seed, stream, i) only, so the result
 * is identical for any evaluation order. A sweep passes its cell index as
 * `stream`.
 */
double success_rate(const MembraneSpec& spec, const GraspScenario& scenario,
                    const NoiseModel& noise, int trials, std::uint64_t stream = 0);

}  // namespace softgrip
