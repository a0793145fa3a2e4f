#include "softgrip/grasp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "softgrip/errors.hpp"
#include "softgrip/random.hpp"
#include "softgrip/root_finding.hpp"

namespace softgrip {

void validate(const GraspScenario& s) {
    if (!(s.mass_m >= 0.0)) throw DomainError("GraspScenario: mass_m must be non-negative");
    if (!(s.gravity_g > 0.0)) throw DomainError("GraspScenario: gravity_g must be positive");
    if (s.finger_count_n < 1) throw DomainError("GraspScenario: finger_count_n must be >= 1");
    if (!(s.normal_force_N >= 0.0)) {
        throw DomainError("GraspScenario: normal_force_N must be non-negative");
    }
    if (!(s.pressure_p >= 0.0)) throw DomainError("GraspScenario: pressure_p must be non-negative");
}

void validate(const NoiseModel& n) {
    if (!(n.tau_s_rel_sigma >= 0.0) || !(n.mass_rel_sigma >= 0.0)) {
        throw DomainError("NoiseModel: sigmas must be non-negative");
    }
}

double required_friction(const GraspScenario& s) {
    validate(s);
    if (!(s.normal_force_N > 0.0)) {
        throw DomainError("required_friction: normal force must be positive");
    }
    return s.weight() / (s.finger_count_n * s.normal_force_N);
}

GraspOutcome grasp_feasible(const MembraneSpec& spec, const GraspScenario& s) {
    validate(s);
    const ContactSolution c = contact_solve(spec, s.pressure_p, s.normal_force_N);
    GraspOutcome out;
    out.margin = s.finger_count_n * c.friction_force_F_f - s.weight();
    out.feasible = out.margin >= 0.0;
    out.mu_available = c.mu_eff;
    if (s.normal_force_N > 0.0) {
        out.mu_required = s.weight() / (s.finger_count_n * s.normal_force_N);
    } else {
        out.mu_required = s.weight() > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return out;
}

double min_normal_force(const MembraneSpec& spec, double mass_m, double pressure_p, int n,
                        double search_max_N, double gravity_g) {
    if (!(mass_m > 0.0)) throw DomainError("min_normal_force: mass must be positive");
    if (!(search_max_N > 0.0)) throw DomainError("min_normal_force: search window must be positive");
    if (n < 1) throw DomainError("min_normal_force: finger count must be >= 1");
    if (!(gravity_g > 0.0)) throw DomainError("min_normal_force: gravity must be positive");
    if (!(pressure_p >= 0.0)) throw DomainError("min_normal_force: pressure must be non-negative");

    const double weight = mass_m * gravity_g;
    auto margin = [&](double N) {
        return n * contact_solve(spec, pressure_p, N).friction_force_F_f - weight;
    };
    auto holds = [&](double N) { return margin(N) >= 0.0; };

    constexpr double kTolerance = 1e-9;

    if (spec.rim_friction_mu_rim > 0.0) {
        const double best = margin(search_max_N);
        if (best < 0.0) {
            throw InfeasibleError("min_normal_force: payload cannot be held within " +
                                      std::to_string(search_max_N) + " N",
                                  best);
        }
        return bisect_threshold(holds, 0.0, search_max_N, kTolerance);
    }

    // Without rim friction the silicone term can plateau; scan, then refine.
    constexpr int kGrid = 100000;
    double best = -std::numeric_limits<double>::infinity();
    double prev = 0.0;
    for (int i = 1; i <= kGrid; ++i) {
        const double N = search_max_N * i / kGrid;
        const double m = margin(N);
        if (m >= 0.0) return bisect_threshold(holds, prev, N, kTolerance);
        best = std::max(best, m);
        prev = N;
    }
    throw InfeasibleError("min_normal_force: payload cannot be held within " +
                              std::to_string(search_max_N) + " N",
                          best);
}

double noise_factor(double rel_sigma, std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t trial, std::uint64_t component) {
    if (rel_sigma == 0.0) return 1.0;
    const std::uint64_t base = rng::key(seed, stream, trial);
    double z = 0.0;
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        const std::uint64_t sub = (component << 8) | (attempt << 1);
        z = rng::standard_normal(rng::mix64(base ^ rng::mix64(sub)),
                                 rng::mix64(base ^ rng::mix64(sub | 1u)));
        if (std::abs(z) <= 3.0) break;
    }
    z = std::clamp(z, -3.0, 3.0);
    return std::max(1.0 + rel_sigma * z, 0.01);
}

double success_rate(const MembraneSpec& spec, const GraspScenario& scenario,
                    const NoiseModel& noise, int trials, std::uint64_t stream) {
    if (trials < 1) throw DomainError("success_rate: trials must be >= 1");
    validate(noise);
    validate(scenario);

    enum : std::uint64_t { kTauComponent = 0, kMassComponent = 1 };

    int successes = 0;
    for (int i = 0; i < trials; ++i) {
        const auto trial = static_cast<std::uint64_t>(i);
        MembraneSpec perturbed = spec;
        perturbed.shear_strength_tau_s *=
            noise_factor(noise.tau_s_rel_sigma, noise.seed, stream, trial, kTauComponent);
        GraspScenario sc = scenario;
        sc.mass_m *= noise_factor(noise.mass_rel_sigma, noise.seed, stream, trial, kMassComponent);
        if (grasp_feasible(perturbed, sc).feasible) ++successes;
    }
    return static_cast<double>(successes) / trials;
}

}  // namespace softgrip
