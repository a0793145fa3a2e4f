#pragma once

#include <optional>
#include <string>
#include <vector>

#include "softgrip/contact.hpp"
#include "softgrip/grasp.hpp"
#include "softgrip/membrane.hpp"

namespace softgrip {

/// (N, p) grid plus the payload and noise shared by every cell.
struct SweepConfig {
    std::vector<double> force_grid;     // N
    std::vector<double> pressure_grid;  // Pa
    GraspScenario scenario_base;        // normal_force_N / pressure_p ignored
    NoiseModel noise;
    int trials = 10;
};

void validate(const SweepConfig& config);

struct SweepCell {
    double normal_force = 0.0;  // N
    double pressure = 0.0;      // Pa
    /// Empty when the cell's evaluation raised a model error.
    std::optional<ContactRegime> regime;
    double mu_eff = 0.0;
    double contact_area = 0.0;  // m^2
    bool feasible = false;
    double success_rate = 0.0;
    std::string error;
};

/// Evaluate one cell; `index` selects the random stream.
SweepCell evaluate_cell(const MembraneSpec& spec, const SweepConfig& config, double force,
                        double pressure, std::size_t index);

/**
 * One cell per (force, pressure), row-major by force then pressure.
 * Cells are spread over `threads` workers; output does not depend on it.
 */
std::vector<SweepCell> run_sweep(const MembraneSpec& spec, const SweepConfig& config,
                                 unsigned threads = 1);

struct RimMeasurement {
    double d_min = 0.0;
    double d_max = 0.0;
};

/// d_min / d_max of a grasped cup rim; 1 is perfectly round.
double roundness_ratio(const RimMeasurement& rim);

}  // namespace softgrip
