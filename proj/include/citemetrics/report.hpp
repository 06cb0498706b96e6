#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/fixture.hpp"
#include "citemetrics/metrics.hpp"

namespace citemetrics {

/// Decimal rendering of num/den with round-half-to-even at `precision`
/// places, done in integer arithmetic. Trailing zeros are kept.
std::string render_fixed(std::int64_t numerator, std::int64_t denominator, int precision);
inline std::string render(const MetricValue& v, int precision) {
    return render_fixed(v.numerator, v.denominator, precision);
}

inline constexpr std::string_view kUndefinedMarker = "x";

struct ReportColumn {
    std::string_view name;
    std::string_view title;
    int precision;
};

/// Yearly report columns, in display order:
///   garfield_if   two prior publication years, strict window
///   sync_if2      n = 2, strict window
///   diach_if2s1   n = 2, shift 1, strict window
///   sync_rdf_max / diach_rdf_max / sync_jdf_max / diach_jdf_max
///                 largest window the data allows, clipped at the boundary
inline constexpr std::array<ReportColumn, 7> kReportColumns{{
    {"garfield_if", "Garfield IF", 2},
    {"sync_if2", "Sync IF2", 2},
    {"diach_if2s1", "Diach IMP2", 2},
    {"sync_rdf_max", "Sync RDF", 2},
    {"diach_rdf_max", "Diach RDF", 2},
    {"sync_jdf_max", "Sync JDF", 3},
    {"diach_jdf_max", "Diach JDF", 2},
}};

struct ReportRow {
    Year year;
    std::array<std::optional<MetricValue>, kReportColumns.size()> cells;
};

/// One row per year from the first to the last year of pub_years and
/// cite_years. Throws FixtureError if either unique-new block is missing.
std::vector<ReportRow> build_report(const MatrixFixture& fixture);

enum class ReportFormat { table, csv, structured };
ReportFormat parse_report_format(std::string_view name);

/// `precision` overrides every column's default when set.
void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format,
                  std::optional<int> precision = std::nullopt);

}  // namespace citemetrics
