#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softgrip/calibration.hpp"
#include "softgrip/sweep.hpp"

namespace softgrip {

inline constexpr std::string_view kSweepHeader =
    "force_n,pressure_kpa,regime,mu_eff,contact_area_mm2,feasible,success_rate";
inline constexpr std::string_view kFrictionSampleHeader = "material,pressure_kpa,normal_force_n,mu";
inline constexpr std::string_view kForceTraceHeader = "time_s,fy_n,fz_n";

/// One sweep CSV line in file units. Error rows have regime "error" and no numbers.
struct SweepRow {
    double force_n = 0.0;
    double pressure_kpa = 0.0;
    std::string regime;
    std::optional<double> mu_eff;
    std::optional<double> contact_area_mm2;
    std::optional<bool> feasible;
    std::optional<double> success_rate;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

SweepRow to_row(const SweepCell& cell);

/// Header plus one LF-terminated line per row; floats in shortest round-trip form.
std::string format_sweep_csv(std::span<const SweepRow> rows);
std::string format_sweep_csv(std::span<const SweepCell> cells);
std::vector<SweepRow> parse_sweep_csv(std::string_view text);

std::vector<FrictionSample> parse_friction_samples_csv(std::string_view text);
std::string format_friction_samples_csv(std::span<const FrictionSample> samples);

ForceTrace parse_force_trace_csv(std::string_view text);

}  // namespace softgrip
