#pragma once

#include <vector>

#include "citemetrics/years.hpp"

namespace citemetrics {

/// One indicator per year, e.g. a column of the yearly report.
struct Series {
    std::vector<Year> labels;
    std::vector<double> values;

    /// Throws std::invalid_argument unless labels are strictly increasing and
    /// both vectors have the same length.
    Series(std::vector<Year> labels, std::vector<double> values);
};

/// Product-moment correlation. Both series need identical labels, at least two
/// points, and non-zero variance (UndefinedCorrelation otherwise). With five
/// points the coefficient is descriptive only; no significance is attached.
double pearson(const Series& x, const Series& y);

/// Pearson over ranks; ties get the average of the ranks they span.
double spearman(const Series& x, const Series& y);

/// 1-based average ranks.
std::vector<double> average_ranks(const std::vector<double>& values);

}  // namespace citemetrics
