#include "citemetrics/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "citemetrics/errors.hpp"

namespace citemetrics {

Series::Series(std::vector<Year> l, std::vector<double> v) : labels(std::move(l)), values(std::move(v)) {
    if (labels.size() != values.size()) throw std::invalid_argument("series labels and values differ in length");
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i] <= labels[i - 1]) throw std::invalid_argument("series labels must be strictly increasing");
}

namespace {

void check_pair(const Series& x, const Series& y) {
    if (x.labels != y.labels) throw std::invalid_argument("series cover different years");
    if (x.values.size() < 2) throw UndefinedCorrelation("correlation needs at least two points");
}

double product_moment(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0;
    double sxx = 0;
    double syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0 || syy == 0) throw UndefinedCorrelation("correlation of a constant series");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

std::vector<double> average_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t lo = 0; lo < order.size();) {
        std::size_t hi = lo;
        while (hi + 1 < order.size() && values[order[hi + 1]] == values[order[lo]]) ++hi;
        const double rank = (static_cast<double>(lo + hi) / 2.0) + 1.0;
        for (std::size_t j = lo; j <= hi; ++j) ranks[order[j]] = rank;
        lo = hi + 1;
    }
    return ranks;
}

double pearson(const Series& x, const Series& y) {
    check_pair(x, y);
    return product_moment(x.values, y.values);
}

double spearman(const Series& x, const Series& y) {
    check_pair(x, y);
    return product_moment(average_ranks(x.values), average_ranks(y.values));
}

}  // namespace citemetrics
