#include "softgrip/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <exception>
#include <thread>

#include "softgrip/errors.hpp"

namespace softgrip {

namespace {

void check_grid(const std::vector<double>& grid, const char* name) {
    if (grid.empty()) throw DomainError(std::string("SweepConfig: ") + name + " is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) {
            throw DomainError(std::string("SweepConfig: ") + name + " must be non-negative");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw DomainError(std::string("SweepConfig: ") + name + " must be strictly increasing");
        }
    }
}

}  // namespace

void validate(const SweepConfig& c) {
    check_grid(c.force_grid, "force grid");
    check_grid(c.pressure_grid, "pressure grid");
    if (c.trials < 1) throw DomainError("SweepConfig: trials must be >= 1");
    validate(c.noise);
    validate(c.scenario_base);
}

SweepCell evaluate_cell(const MembraneSpec& spec, const SweepConfig& config, double force,
                        double pressure, std::size_t index) {
    SweepCell cell;
    cell.normal_force = force;
    cell.pressure = pressure;
    try {
        const ContactSolution c = contact_solve(spec, pressure, force);
        GraspScenario sc = config.scenario_base;
        sc.normal_force_N = force;
        sc.pressure_p = pressure;
        cell.regime = c.regime;
        cell.mu_eff = c.mu_eff;
        cell.contact_area = c.contact_area_A;
        cell.feasible = grasp_feasible(spec, sc).feasible;
        cell.success_rate = success_rate(spec, sc, config.noise, config.trials, index);
    } catch (const std::exception& e) {
        cell.regime.reset();
        cell.error = e.what();
    }
    return cell;
}

std::vector<SweepCell> run_sweep(const MembraneSpec& spec, const SweepConfig& config,
                                 unsigned threads) {
    validate(spec);
    validate(config);

    const std::size_t n_p = config.pressure_grid.size();
    const std::size_t total = config.force_grid.size() * n_p;
    std::vector<SweepCell> cells(total);

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < total; i += stride) {
            cells[i] = evaluate_cell(spec, config, config.force_grid[i / n_p],
                                     config.pressure_grid[i % n_p], i);
        }
    };

    const unsigned workers = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(total));
    if (workers == 1) {
        work(0, 1);
        return cells;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    pool.clear();  // joins
    return cells;
}

double roundness_ratio(const RimMeasurement& rim) {
    if (!(rim.d_min > 0.0) || !(rim.d_min <= rim.d_max) || !std::isfinite(rim.d_max)) {
        throw DomainError("roundness_ratio: require 0 < d_min <= d_max");
    }
    return rim.d_min / rim.d_max;
}

}  // namespace softgrip
