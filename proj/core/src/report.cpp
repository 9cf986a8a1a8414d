#include "autoeq/report.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace autoeq {

namespace {

void ensure_ok(std::ostream& sink) {
    if (!sink) throw std::ios_base::failure("write to output stream failed");
}

void write_row(const CsvRow& row, std::ostream& sink) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) sink << ',';
        sink << format_number(row[i]);
    }
    sink << '\n';
}

std::string format_optional(const std::optional<double>& value) {
    return value ? format_number(*value) : std::string("none");
}

nlohmann::ordered_json point_object(const EquilibriumPoint& point) {
    static constexpr std::array<std::string_view, 8> kNames{"a_auto", "l_star", "wage",  "f_star",
                                                            "profit", "k_old",  "k_auto", "pct_capital_auto"};
    const CsvRow row = csv_fields(point);
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[std::string(kNames[i])] = row[i];
    return obj;
}

nlohmann::ordered_json optional_value(const std::optional<double>& value) {
    return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return {buf.data(), ptr};
}

CsvRow csv_fields(const EquilibriumPoint& point) {
    const double capital = point.split.k_old + point.split.k_auto;
    const double pct_auto = capital > 0.0 ? 100.0 * point.split.k_auto / capital : 0.0;
    return {point.a_auto, point.l_star,      point.wage,         point.f_star,
            point.profit, point.split.k_old, point.split.k_auto, pct_auto};
}

void write_sweep_csv(const SweepResult& result, std::ostream& sink) {
    sink << kSweepCsvHeader << '\n';
    for (const auto& point : result.points) write_row(csv_fields(point), sink);
    sink << "# transition_onset = " << format_optional(result.transition_onset) << '\n'
         << "# displacement_complete = " << format_optional(result.displacement_complete) << '\n'
         << "# f_pre = " << format_number(result.f_pre) << '\n'
         << "# f_min = " << format_number(result.f_min) << '\n'
         << "# drop_fraction = " << format_number(result.drop_fraction) << '\n'
         << "# recovery_a_auto = " << format_optional(result.recovery_a_auto) << '\n';
    ensure_ok(sink);
}

void write_point_csv(const EquilibriumPoint& point, std::ostream& sink) {
    sink << kSweepCsvHeader << '\n';
    write_row(csv_fields(point), sink);
    ensure_ok(sink);
}

std::vector<CsvRow> read_sweep_csv(std::istream& source) {
    std::vector<CsvRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(source, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (header) {
            if (line != kSweepCsvHeader) throw std::runtime_error("unexpected CSV header: " + line);
            header = false;
            continue;
        }
        CsvRow row{};
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto [next, ec] = std::from_chars(p, end, row[i]);
            if (ec != std::errc{}) throw std::runtime_error("bad CSV number in line: " + line);
            p = next;
            if (i + 1 < row.size()) {
                if (p == end || *p != ',') throw std::runtime_error("short CSV row: " + line);
                ++p;
            }
        }
        if (p != end) throw std::runtime_error("trailing data in CSV row: " + line);
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_json(const SweepResult& result, std::ostream& sink) {
    nlohmann::ordered_json doc;
    doc["points"] = nlohmann::ordered_json::array();
    for (const auto& point : result.points) doc["points"].push_back(point_object(point));
    doc["stats"] = {
        {"transition_onset", optional_value(result.transition_onset)},
        {"displacement_complete", optional_value(result.displacement_complete)},
        {"f_pre", result.f_pre},
        {"f_min", result.f_min},
        {"drop_fraction", result.drop_fraction},
        {"recovery_a_auto", optional_value(result.recovery_a_auto)},
    };
    sink << doc.dump(2) << '\n';
    ensure_ok(sink);
}

void write_point_json(const EquilibriumPoint& point, std::ostream& sink) {
    sink << point_object(point).dump(2) << '\n';
    ensure_ok(sink);
}

}  // namespace autoeq
