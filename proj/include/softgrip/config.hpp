#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softgrip/calibration.hpp"
#include "softgrip/membrane.hpp"

namespace softgrip {

struct SweepConfig;

/// One `key = value` line. Blank lines and `#` comments are skipped.
struct KeyValue {
    std::string key;
    std::string value;
    int line = 0;
};

/// Throws ParseError on malformed lines or duplicate keys.
std::vector<KeyValue> parse_key_values(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/**
 * MembraneSpec from key-value text. Keys are the MembraneSpec field names;
 * values may carry a unit suffix (mm, m for lengths; Pa, kPa, MPa for
 * stresses). Optional keys: parallel_contacts (default 1) and height_model
 * (exact | linear, default exact). Unknown or missing keys are a ParseError.
 */
MembraneSpec parse_membrane_spec(std::string_view text);
MembraneSpec load_membrane_spec(const std::filesystem::path& path);

/// SI key-value text that parse_membrane_spec reads back exactly.
std::string format_membrane_spec(const MembraneSpec& spec);

/**
 * Sweep definition. Keys: forces_n, pressures_kpa (comma-separated lists),
 * mass_kg, gravity (default 9.81), finger_count (default 2),
 * tau_s_rel_sigma, mass_rel_sigma (default 0), seed (default 0),
 * trials (default 10).
 */
SweepConfig parse_sweep_config(std::string_view text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Key-value report of fitted parameters (SI), one block per result.
std::string format_fit_report(const std::vector<FitResult>& results);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Whole-string decimal parse. Throws ParseError.
double parse_double(std::string_view text);

}  // namespace softgrip
