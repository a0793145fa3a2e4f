#include "softgrip/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "softgrip/errors.hpp"
#include "softgrip/sweep.hpp"
#include "softgrip/units.hpp"

namespace softgrip {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string where(const KeyValue& kv) {
    return "line " + std::to_string(kv.line) + " ('" + kv.key + "')";
}

enum class Dimension { Length, Stress, Plain };

double parse_quantity(const KeyValue& kv, Dimension dim) {
    std::string_view v = kv.value;
    double number = 0.0;
    const char* begin = v.data();
    const char* end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(begin, end, number);
    if (ec != std::errc() || ptr == begin) {
        throw ParseError(where(kv) + ": expected a number, got '" + kv.value + "'");
    }
    const std::string_view unit = trim(std::string_view(ptr, static_cast<std::size_t>(end - ptr)));
    if (unit.empty()) return number;
    if (dim == Dimension::Length) {
        if (unit == "mm") return units::mm_to_m(number);
        if (unit == "m") return number;
    } else if (dim == Dimension::Stress) {
        if (unit == "Pa") return number;
        if (unit == "kPa") return units::kpa_to_pa(number);
        if (unit == "MPa") return units::mpa_to_pa(number);
    }
    throw ParseError(where(kv) + ": unit '" + std::string(unit) + "' not valid here");
}

int parse_int(const KeyValue& kv) {
    int value = 0;
    const char* begin = kv.value.data();
    const char* end = begin + kv.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(where(kv) + ": expected an integer, got '" + kv.value + "'");
    }
    return value;
}

std::uint64_t parse_u64(const KeyValue& kv) {
    std::uint64_t value = 0;
    const char* begin = kv.value.data();
    const char* end = begin + kv.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(where(kv) + ": expected a non-negative integer, got '" + kv.value + "'");
    }
    return value;
}

std::vector<double> parse_list(const KeyValue& kv) {
    std::vector<double> out;
    std::stringstream ss(kv.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_double(trim(item)));
        } catch (const ParseError&) {
            throw ParseError(where(kv) + ": bad list entry '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError(where(kv) + ": empty list");
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw ParseError("expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

std::vector<KeyValue> parse_key_values(std::string_view text) {
    std::vector<KeyValue> out;
    std::map<std::string, int, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        KeyValue kv{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                    line_no};
        if (kv.key.empty() || kv.value.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty key or value");
        }
        if (auto [it, inserted] = seen.emplace(kv.key, line_no); !inserted) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + kv.key +
                             "' (first on line " + std::to_string(it->second) + ")");
        }
        out.push_back(std::move(kv));
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw ParseError("write failed for '" + path.string() + "'");
}

MembraneSpec parse_membrane_spec(std::string_view text) {
    struct Slot {
        double MembraneSpec::*field;
        Dimension dim;
    };
    static const std::map<std::string, Slot, std::less<>> kSlots = {
        {"width_W", {&MembraneSpec::width_W, Dimension::Length}},
        {"length_L", {&MembraneSpec::length_L, Dimension::Length}},
        {"thickness_t", {&MembraneSpec::thickness_t, Dimension::Length}},
        {"rim_gap_g", {&MembraneSpec::rim_gap_g, Dimension::Length}},
        {"residual_stress_sigma0", {&MembraneSpec::residual_stress_sigma0, Dimension::Stress}},
        {"youngs_modulus_E", {&MembraneSpec::youngs_modulus_E, Dimension::Stress}},
        {"poisson_nu", {&MembraneSpec::poisson_nu, Dimension::Plain}},
        {"zero_pressure_modulus_E0", {&MembraneSpec::zero_pressure_modulus_E0, Dimension::Stress}},
        {"stiffness_pressure_factor_eta",
         {&MembraneSpec::stiffness_pressure_factor_eta, Dimension::Plain}},
        {"max_bulge_h_max", {&MembraneSpec::max_bulge_h_max, Dimension::Length}},
        {"shear_strength_tau_s", {&MembraneSpec::shear_strength_tau_s, Dimension::Stress}},
        {"rim_friction_mu_rim", {&MembraneSpec::rim_friction_mu_rim, Dimension::Plain}},
    };

    MembraneSpec spec;
    std::map<std::string, bool, std::less<>> found;
    for (const KeyValue& kv : parse_key_values(text)) {
        if (auto it = kSlots.find(kv.key); it != kSlots.end()) {
            spec.*(it->second.field) = parse_quantity(kv, it->second.dim);
            found[kv.key] = true;
        } else if (kv.key == "parallel_contacts") {
            spec.parallel_contacts = parse_int(kv);
        } else if (kv.key == "height_model") {
            if (kv.value == "exact") spec.height_model = HeightModel::Exact;
            else if (kv.value == "linear") spec.height_model = HeightModel::Linear;
            else throw ParseError(where(kv) + ": height_model must be 'exact' or 'linear'");
        } else {
            throw ParseError(where(kv) + ": unknown key");
        }
    }
    for (const auto& [name, slot] : kSlots) {
        if (!found.count(name)) throw ParseError("missing key '" + name + "'");
    }
    try {
        validate(spec);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return spec;
}

MembraneSpec load_membrane_spec(const std::filesystem::path& path) {
    try {
        return parse_membrane_spec(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string format_membrane_spec(const MembraneSpec& s) {
    std::ostringstream out;
    auto put = [&](const char* key, double v) { out << key << " = " << format_double(v) << '\n'; };
    put("width_W", s.width_W);
    put("length_L", s.length_L);
    put("thickness_t", s.thickness_t);
    put("rim_gap_g", s.rim_gap_g);
    put("residual_stress_sigma0", s.residual_stress_sigma0);
    put("youngs_modulus_E", s.youngs_modulus_E);
    put("poisson_nu", s.poisson_nu);
    put("zero_pressure_modulus_E0", s.zero_pressure_modulus_E0);
    put("stiffness_pressure_factor_eta", s.stiffness_pressure_factor_eta);
    put("max_bulge_h_max", s.max_bulge_h_max);
    put("shear_strength_tau_s", s.shear_strength_tau_s);
    put("rim_friction_mu_rim", s.rim_friction_mu_rim);
    out << "parallel_contacts = " << s.parallel_contacts << '\n';
    out << "height_model = " << (s.height_model == HeightModel::Linear ? "linear" : "exact")
        << '\n';
    return out.str();
}

SweepConfig parse_sweep_config(std::string_view text) {
    SweepConfig cfg;
    bool have_forces = false, have_pressures = false, have_mass = false;
    for (const KeyValue& kv : parse_key_values(text)) {
        if (kv.key == "forces_n") {
            cfg.force_grid = parse_list(kv);
            have_forces = true;
        } else if (kv.key == "pressures_kpa") {
            cfg.pressure_grid.clear();
            for (double kpa : parse_list(kv)) cfg.pressure_grid.push_back(units::kpa_to_pa(kpa));
            have_pressures = true;
        } else if (kv.key == "mass_kg") {
            cfg.scenario_base.mass_m = parse_quantity(kv, Dimension::Plain);
            have_mass = true;
        } else if (kv.key == "gravity") {
            cfg.scenario_base.gravity_g = parse_quantity(kv, Dimension::Plain);
        } else if (kv.key == "finger_count") {
            cfg.scenario_base.finger_count_n = parse_int(kv);
        } else if (kv.key == "tau_s_rel_sigma") {
            cfg.noise.tau_s_rel_sigma = parse_quantity(kv, Dimension::Plain);
        } else if (kv.key == "mass_rel_sigma") {
            cfg.noise.mass_rel_sigma = parse_quantity(kv, Dimension::Plain);
        } else if (kv.key == "seed") {
            cfg.noise.seed = parse_u64(kv);
        } else if (kv.key == "trials") {
            cfg.trials = parse_int(kv);
        } else {
            throw ParseError(where(kv) + ": unknown key");
        }
    }
    if (!have_forces) throw ParseError("missing key 'forces_n'");
    if (!have_pressures) throw ParseError("missing key 'pressures_kpa'");
    if (!have_mass) throw ParseError("missing key 'mass_kg'");
    try {
        validate(cfg);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    try {
        return parse_sweep_config(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string format_fit_report(const std::vector<FitResult>& results) {
    std::ostringstream out;
    bool first = true;
    for (const FitResult& r : results) {
        if (!first) out << '\n';
        first = false;
        out << "material = " << r.material_label << '\n';
        auto put = [&](const char* key, double v) {
            out << key << " = " << format_double(v) << '\n';
        };
        if (r.mask.sigma0) put("residual_stress_sigma0", r.spec.residual_stress_sigma0);
        if (r.mask.eta) put("stiffness_pressure_factor_eta", r.spec.stiffness_pressure_factor_eta);
        if (r.mask.tau_s) put("shear_strength_tau_s", r.spec.shear_strength_tau_s);
        if (r.mask.mu_rim) put("rim_friction_mu_rim", r.spec.rim_friction_mu_rim);
        if (r.mask.e0) put("zero_pressure_modulus_E0", r.spec.zero_pressure_modulus_E0);
        put("rms_residual", r.rms_residual);
        out << "iterations = " << r.iterations << '\n';
        out << "converged = " << (r.converged ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace softgrip
