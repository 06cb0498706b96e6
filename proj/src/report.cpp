#include "citemetrics/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "citemetrics/errors.hpp"

namespace citemetrics {

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

std::string render_fixed(std::int64_t numerator, std::int64_t denominator, int precision) {
    if (denominator <= 0) throw std::invalid_argument("render_fixed: denominator must be positive");
    if (precision < 0 || precision > 12) throw std::invalid_argument("render_fixed: precision out of range");
    const bool negative = numerator < 0;
    Wide scale = 1;
    for (int p = 0; p < precision; ++p) scale *= 10;
    const Wide scaled = static_cast<Wide>(negative ? -numerator : numerator) * scale;
    Wide q = scaled / denominator;
    const Wide twice_rem = 2 * (scaled % denominator);
    if (twice_rem > denominator || (twice_rem == denominator && q % 2 == 1)) ++q;

    std::string digits;
    for (Wide v = q; v > 0; v /= 10) digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    while (digits.size() <= static_cast<std::size_t>(precision)) digits.push_back('0');
    std::reverse(digits.begin(), digits.end());
    if (precision > 0) digits.insert(digits.end() - precision, '.');
    return (negative && q != 0 ? "-" : "") + digits;
}

std::vector<ReportRow> build_report(const MatrixFixture& f) {
    if (!f.synchronous || !f.diachronous)
        throw FixtureError(
            "report needs both unique_new_sync and unique_new_diach; run 'ingest' on raw citation data "
            "or supply an augmented fixture");
    const auto& m = f.matrix;
    const auto& sync = *f.synchronous;
    const auto& diach = *f.diachronous;
    const Year first = std::min(m.pub_years().first, m.cite_years().first);
    const Year last = std::max(m.pub_years().last, m.cite_years().last);

    auto attempt = [](auto&& compute) -> std::optional<MetricValue> {
        try {
            return compute();
        } catch (const UndefinedMetric&) {
            return std::nullopt;
        }
    };

    std::vector<ReportRow> rows;
    for (Year y = first; y <= last; ++y) {
        ReportRow row{y, {}};
        row.cells[0] = attempt([&] { return garfield_if(m, y); });
        row.cells[1] = attempt([&] { return sync_if(m, y, Window::years(2), false); });
        row.cells[2] = attempt([&] { return diach_if(m, y, Window::years(2), 1, false); });
        row.cells[3] = attempt([&] { return sync_rdf(sync, y, Window::max()); });
        row.cells[4] = attempt([&] { return diach_rdf(diach, y, Window::max()); });
        row.cells[5] = attempt([&] { return sync_jdf(sync, y, Window::max()); });
        row.cells[6] = attempt([&] { return diach_jdf(diach, y, Window::max()); });
        rows.push_back(std::move(row));
    }
    return rows;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "table") return ReportFormat::table;
    if (name == "csv") return ReportFormat::csv;
    if (name == "structured" || name == "json") return ReportFormat::structured;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

namespace {

std::string cell_text(const std::optional<MetricValue>& v, int precision) {
    return v ? render(*v, precision) : std::string(kUndefinedMarker);
}

int column_precision(const ReportColumn& c, std::optional<int> precision) { return precision.value_or(c.precision); }

}  // namespace

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format,
                  std::optional<int> precision) {
    switch (format) {
        case ReportFormat::csv: {
            out << "year";
            for (const auto& c : kReportColumns) out << ',' << c.name;
            out << '\n';
            for (const auto& row : rows) {
                out << row.year;
                for (std::size_t c = 0; c < kReportColumns.size(); ++c)
                    out << ',' << cell_text(row.cells[c], column_precision(kReportColumns[c], precision));
                out << '\n';
            }
            return;
        }
        case ReportFormat::table: {
            std::vector<std::size_t> widths;
            for (const auto& c : kReportColumns) widths.push_back(std::max<std::size_t>(c.title.size(), 6));
            out << std::left << std::setw(6) << "Year";
            for (std::size_t c = 0; c < kReportColumns.size(); ++c)
                out << "  " << std::right << std::setw(static_cast<int>(widths[c])) << kReportColumns[c].title;
            out << '\n';
            for (const auto& row : rows) {
                out << std::left << std::setw(6) << row.year;
                for (std::size_t c = 0; c < kReportColumns.size(); ++c)
                    out << "  " << std::right << std::setw(static_cast<int>(widths[c]))
                        << cell_text(row.cells[c], column_precision(kReportColumns[c], precision));
                out << '\n';
            }
            out << std::left;
            return;
        }
        case ReportFormat::structured: {
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json r;
                r["year"] = row.year;
                for (std::size_t c = 0; c < kReportColumns.size(); ++c) {
                    const auto& cell = row.cells[c];
                    if (!cell) {
                        r[std::string(kReportColumns[c].name)] = kUndefinedMarker;
                        continue;
                    }
                    r[std::string(kReportColumns[c].name)] = {
                        {"rendered", render(*cell, column_precision(kReportColumns[c], precision))},
                        {"numerator", cell->numerator},
                        {"denominator", cell->denominator},
                        {"value", cell->value()},
                    };
                }
                doc.push_back(std::move(r));
            }
            out << doc.dump(2) << '\n';
            return;
        }
    }
}

}  // namespace citemetrics
