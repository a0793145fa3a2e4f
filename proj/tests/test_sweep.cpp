#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "softgrip/csv.hpp"
#include "softgrip/errors.hpp"
#include "softgrip/sweep.hpp"

using namespace softgrip;
using softgrip::testing::synthetic_finger;

namespace {

SweepConfig paper_grid(double sigma, int trials = 200) {
    SweepConfig c;
    c.force_grid = {3.0, 3.5, 4.0};
    c.pressure_grid = {0.0, 25e3, 50e3, 75e3, 100e3, 125e3};
    c.scenario_base.mass_m = 0.2;
    c.noise = NoiseModel{sigma, sigma, 2024};
    c.trials = trials;
    return c;
}

GraspScenario at(const SweepConfig& c, double N, double p) {
    GraspScenario s = c.scenario_base;
    s.normal_force_N = N;
    s.pressure_p = p;
    return s;
}

}  // namespace

TEST(RunSweep, SingleCellMatchesDirectCalls) {
    const MembraneSpec s = synthetic_finger();
    SweepConfig c = paper_grid(0.1);
    c.force_grid = {3.0};
    c.pressure_grid = {50e3};
    const auto cells = run_sweep(s, c);
    ASSERT_EQ(cells.size(), 1u);
    const ContactSolution direct = contact_solve(s, 50e3, 3.0);
    EXPECT_EQ(*cells[0].regime, direct.regime);
    EXPECT_EQ(cells[0].mu_eff, direct.mu_eff);
    EXPECT_EQ(cells[0].contact_area, direct.contact_area_A);
    EXPECT_EQ(cells[0].feasible, grasp_feasible(s, at(c, 3.0, 50e3)).feasible);
    EXPECT_EQ(cells[0].success_rate, success_rate(s, at(c, 3.0, 50e3), c.noise, c.trials));
}

TEST(RunSweep, RowMajorByForce) {
    const auto cells = run_sweep(synthetic_finger(), paper_grid(0.0, 1));
    ASSERT_EQ(cells.size(), 18u);
    EXPECT_EQ(cells[0].normal_force, 3.0);
    EXPECT_EQ(cells[5].pressure, 125e3);
    EXPECT_EQ(cells[6].normal_force, 3.5);
    EXPECT_EQ(cells[6].pressure, 0.0);
}

TEST(RunSweep, ZeroNoiseRatesAreIndicators) {
    const MembraneSpec s = synthetic_finger();
    const auto cells = run_sweep(s, paper_grid(0.0, 25));
    for (const SweepCell& c : cells) {
        EXPECT_EQ(c.success_rate, c.feasible ? 1.0 : 0.0);
    }
}

TEST(RunSweep, PaperGridRowsRiseWithPressure) {
    const MembraneSpec s = synthetic_finger();
    const SweepConfig quiet = paper_grid(0.0, 1);
    const auto exact = run_sweep(s, quiet);
    const SweepConfig noisy = paper_grid(0.1, 1000);
    const auto rates = run_sweep(s, noisy);
    const std::size_t np = quiet.pressure_grid.size();
    for (std::size_t row = 0; row < quiet.force_grid.size(); ++row) {
        for (std::size_t j = 1; j < np; ++j) {
            EXPECT_GE(exact[row * np + j].success_rate, exact[row * np + j - 1].success_rate);
            EXPECT_GE(rates[row * np + j].success_rate, rates[row * np + j - 1].success_rate - 0.03);
        }
    }
}

TEST(RunSweep, CellsMatchIndependentEvaluation) {
    const MembraneSpec s = synthetic_finger();
    SweepConfig c = paper_grid(0.1, 100);
    c.pressure_grid.clear();
    for (int i = 0; i < 30; ++i) c.pressure_grid.push_back(125e3 * i / 29.0);
    const auto cells = run_sweep(s, c, 3);
    std::mt19937 gen(11);
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    for (int k = 0; k < 10; ++k) {
        const std::size_t i = pick(gen);
        const SweepCell& cell = cells[i];
        const ContactSolution d = contact_solve(s, cell.pressure, cell.normal_force);
        EXPECT_EQ(cell.mu_eff, d.mu_eff);
        EXPECT_EQ(cell.contact_area, d.contact_area_A);
        EXPECT_EQ(*cell.regime, d.regime);
        EXPECT_EQ(cell.success_rate,
                  success_rate(s, at(c, cell.normal_force, cell.pressure), c.noise, c.trials, i));
    }
}

TEST(RunSweep, ThreadCountDoesNotChangeOutput) {
    const MembraneSpec s = synthetic_finger();
    const SweepConfig c = paper_grid(0.1, 300);
    const std::string reference = format_sweep_csv(std::span<const SweepCell>(run_sweep(s, c, 1)));
    for (unsigned t : {2u, 3u, 4u, 8u, 64u}) {
        EXPECT_EQ(format_sweep_csv(std::span<const SweepCell>(run_sweep(s, c, t))), reference);
    }
}

TEST(RunSweep, RejectsBadGrids) {
    const MembraneSpec s = synthetic_finger();
    SweepConfig c = paper_grid(0.0);
    c.force_grid = {3.0, 3.0};
    EXPECT_THROW(run_sweep(s, c), DomainError);
    c = paper_grid(0.0);
    c.pressure_grid = {};
    EXPECT_THROW(run_sweep(s, c), DomainError);
    c = paper_grid(0.0);
    c.trials = 0;
    EXPECT_THROW(run_sweep(s, c), DomainError);
}

TEST(EvaluateCell, ModelErrorsBecomeErrorCells) {
    const SweepCell cell = evaluate_cell(synthetic_finger(), paper_grid(0.0), -1.0, 10e3, 0);
    EXPECT_FALSE(cell.regime.has_value());
    EXPECT_FALSE(cell.error.empty());
    const SweepRow row = to_row(cell);
    EXPECT_EQ(row.regime, "error");
    const std::string csv = format_sweep_csv(std::span<const SweepRow>(&row, 1));
    EXPECT_EQ(csv, std::string(kSweepHeader) + "\n-1,10,error,,,,\n");
}

TEST(SweepCsv, ReemitIsByteIdentical) {
    const auto cells = run_sweep(synthetic_finger(), paper_grid(0.1, 50));
    std::string text = format_sweep_csv(std::span<const SweepCell>(cells));
    text += "4.5,12.5,error,,,,\n";
    const auto rows = parse_sweep_csv(text);
    EXPECT_EQ(rows.size(), cells.size() + 1);
    EXPECT_EQ(format_sweep_csv(std::span<const SweepRow>(rows)), text);
}

TEST(SweepCsv, RejectsMalformed) {
    EXPECT_THROW(parse_sweep_csv("force,pressure\n"), ParseError);
    const std::string head = std::string(kSweepHeader) + "\n";
    EXPECT_THROW(parse_sweep_csv(head + "3,0,rim,0.2,0,false\n"), ParseError);
    EXPECT_THROW(parse_sweep_csv(head + "3,0,sideways,0.2,0,false,0\n"), ParseError);
    EXPECT_THROW(parse_sweep_csv(head + "3,0,rim,0.2,0,maybe,0\n"), ParseError);
    EXPECT_THROW(parse_sweep_csv(head + "3,x,rim,0.2,0,true,0\n"), ParseError);
}

TEST(RoundnessRatio, ReportedBestCases) {
    EXPECT_EQ(roundness_ratio({47.0, 50.0}), 0.94);
    EXPECT_EQ(roundness_ratio({39.0, 50.0}), 0.78);
    EXPECT_EQ(roundness_ratio({50.0, 50.0}), 1.0);
}

TEST(RoundnessRatio, ScaleInvariant) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> d(1.0, 100.0), c(1e-4, 1e4);
    for (int i = 0; i < 1000; ++i) {
        double a = d(gen), b = d(gen);
        if (a > b) std::swap(a, b);
        const double k = c(gen);
        const double r = roundness_ratio({a, b});
        EXPECT_NEAR(roundness_ratio({k * a, k * b}), r, 4e-16);
        EXPECT_EQ(roundness_ratio({a * 8.0, b * 8.0}), r);
        EXPECT_GT(r, 0.0);
        EXPECT_LE(r, 1.0);
    }
}

TEST(RoundnessRatio, RejectsInvalid) {
    EXPECT_THROW(roundness_ratio({0.0, 50.0}), DomainError);
    EXPECT_THROW(roundness_ratio({51.0, 50.0}), DomainError);
    EXPECT_THROW(roundness_ratio({-1.0, 50.0}), DomainError);
}
