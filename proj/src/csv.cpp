#include "softgrip/csv.hpp"

#include "softgrip/config.hpp"
#include "softgrip/errors.hpp"
#include "softgrip/units.hpp"

namespace softgrip {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

// Lines after the header, each split into exactly `columns` fields.
std::vector<std::vector<std::string_view>> read_table(std::string_view text,
                                                      std::string_view header,
                                                      std::size_t columns) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != header) {
        throw ParseError("CSV header must be exactly '" + std::string(header) + "'");
    }
    std::vector<std::vector<std::string_view>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_fields(lines[i]);
        if (fields.size() != columns) {
            throw ParseError("CSV line " + std::to_string(i + 1) + ": expected " +
                             std::to_string(columns) + " fields");
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

double field_double(std::string_view f, std::size_t line) {
    try {
        return parse_double(f);
    } catch (const ParseError& e) {
        throw ParseError("CSV line " + std::to_string(line) + ": " + e.what());
    }
}

std::optional<double> optional_double(std::string_view f, std::size_t line) {
    if (f.empty()) return std::nullopt;
    return field_double(f, line);
}

}  // namespace

SweepRow to_row(const SweepCell& cell) {
    SweepRow row;
    row.force_n = cell.normal_force;
    row.pressure_kpa = units::pa_to_kpa(cell.pressure);
    if (!cell.regime) {
        row.regime = "error";
        return row;
    }
    row.regime = std::string(regime_token(*cell.regime));
    row.mu_eff = cell.mu_eff;
    row.contact_area_mm2 = units::m2_to_mm2(cell.contact_area);
    row.feasible = cell.feasible;
    row.success_rate = cell.success_rate;
    return row;
}

std::string format_sweep_csv(std::span<const SweepRow> rows) {
    std::string out(kSweepHeader);
    out += '\n';
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    for (const SweepRow& r : rows) {
        out += format_double(r.force_n);
        out += ',';
        out += format_double(r.pressure_kpa);
        out += ',';
        out += r.regime;
        out += ',';
        out += opt(r.mu_eff);
        out += ',';
        out += opt(r.contact_area_mm2);
        out += ',';
        if (r.feasible) out += *r.feasible ? "true" : "false";
        out += ',';
        out += opt(r.success_rate);
        out += '\n';
    }
    return out;
}

std::string format_sweep_csv(std::span<const SweepCell> cells) {
    std::vector<SweepRow> rows;
    rows.reserve(cells.size());
    for (const SweepCell& c : cells) rows.push_back(to_row(c));
    return format_sweep_csv(std::span<const SweepRow>(rows));
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
    std::vector<SweepRow> rows;
    std::size_t line = 1;
    for (const auto& f : read_table(text, kSweepHeader, 7)) {
        ++line;
        SweepRow r;
        r.force_n = field_double(f[0], line);
        r.pressure_kpa = field_double(f[1], line);
        r.regime = std::string(f[2]);
        if (r.regime != "rim" && r.regime != "partial" && r.regime != "full" &&
            r.regime != "error") {
            throw ParseError("CSV line " + std::to_string(line) + ": unknown regime '" +
                             r.regime + "'");
        }
        r.mu_eff = optional_double(f[3], line);
        r.contact_area_mm2 = optional_double(f[4], line);
        if (f[5] == "true") r.feasible = true;
        else if (f[5] == "false") r.feasible = false;
        else if (!f[5].empty()) {
            throw ParseError("CSV line " + std::to_string(line) + ": feasible must be true/false");
        }
        r.success_rate = optional_double(f[6], line);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<FrictionSample> parse_friction_samples_csv(std::string_view text) {
    std::vector<FrictionSample> out;
    std::size_t line = 1;
    for (const auto& f : read_table(text, kFrictionSampleHeader, 4)) {
        ++line;
        FrictionSample s;
        s.material_label = std::string(f[0]);
        s.pressure = units::kpa_to_pa(field_double(f[1], line));
        s.normal_force = field_double(f[2], line);
        s.mu_measured = field_double(f[3], line);
        try {
            validate(s);
        } catch (const DomainError& e) {
            throw ParseError("CSV line " + std::to_string(line) + ": " + e.what());
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string format_friction_samples_csv(std::span<const FrictionSample> samples) {
    std::string out(kFrictionSampleHeader);
    out += '\n';
    for (const FrictionSample& s : samples) {
        out += s.material_label + ',' + format_double(units::pa_to_kpa(s.pressure)) + ',' +
               format_double(s.normal_force) + ',' + format_double(s.mu_measured) + '\n';
    }
    return out;
}

ForceTrace parse_force_trace_csv(std::string_view text) {
    ForceTrace trace;
    std::size_t line = 1;
    for (const auto& f : read_table(text, kForceTraceHeader, 3)) {
        ++line;
        trace.samples.push_back(
            {field_double(f[0], line), field_double(f[1], line), field_double(f[2], line)});
    }
    try {
        validate(trace);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return trace;
}

}  // namespace softgrip
