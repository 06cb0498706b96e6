#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "citemetrics/errors.hpp"
#include "citemetrics/stats.hpp"

using namespace citemetrics;

namespace {

const std::vector<Year> kYears{2004, 2005, 2006, 2007, 2008};

// Textbook two-pass formula, kept separate from the library's.
double reference_pearson(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

}  // namespace

TEST_CASE("pearson: self and anti correlation") {
    const Series x(kYears, {1, 4, 2, 8, 5});
    const Series neg(kYears, {-1, -4, -2, -8, -5});
    CHECK(pearson(x, x) == doctest::Approx(1.0));
    CHECK(pearson(x, neg) == doctest::Approx(-1.0));
}

TEST_CASE("pearson: citation totals against diachronous RDF is negative") {
    const Series totals(kYears, {409, 249, 253, 99, 72});
    const Series rdf(kYears, {0.62, 0.74, 0.81, 0.81, 0.88});
    const double r = pearson(totals, rdf);
    CHECK(r < 0);
    CHECK(r == doctest::Approx(reference_pearson(totals.values, rdf.values)));
}

TEST_CASE("pearson: errors") {
    CHECK_THROWS_AS(pearson(Series(kYears, {1, 1, 1, 1, 1}), Series(kYears, {1, 2, 3, 4, 5})), UndefinedCorrelation);
    CHECK_THROWS_AS(pearson(Series({2004}, {1}), Series({2004}, {2})), UndefinedCorrelation);
    CHECK_THROWS_AS(pearson(Series({2004, 2005}, {1, 2}), Series({2005, 2006}, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(Series({2005, 2004}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Series({2004, 2005}, {1}), std::invalid_argument);
}

TEST_CASE("spearman: monotone agreement and ties") {
    CHECK(spearman(Series(kYears, {1, 2, 3, 4, 5}), Series(kYears, {10, 20, 25, 90, 91})) == doctest::Approx(1.0));
    CHECK(average_ranks({3, 1, 1, 2}) == std::vector<double>{4, 1.5, 1.5, 3});
    CHECK(average_ranks({5, 5, 5}) == std::vector<double>{2, 2, 2});
}

TEST_CASE("spearman: synchronous JDF against synchronous IF 2006-2009 is reported") {
    const std::vector<Year> years{2006, 2007, 2008, 2009};
    const double rho = spearman(Series(years, {0.24, 0.33, 0.27, 0.45}), Series(years, {0.42, 0.55, 0.36, 0.37}));
    CHECK(rho >= -1.0);
    CHECK(rho <= 1.0);
    MESSAGE("spearman(sync JDF, sync IF2) over 2006-2009 = " << rho);
}

TEST_CASE("randomized: symmetry, bounds and transform invariance") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + t % 9;
        std::vector<Year> years;
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i) {
            years.push_back(2000 + static_cast<Year>(i));
            x.push_back(gauss(rng));
            y.push_back(gauss(rng));
        }
        const Series sx(years, x), sy(years, y);
        const double r = pearson(sx, sy);
        REQUIRE(r >= -1.0);
        REQUIRE(r <= 1.0);
        REQUIRE(r == doctest::Approx(pearson(sy, sx)));
        REQUIRE(r == doctest::Approx(reference_pearson(x, y)).epsilon(1e-9));

        std::vector<double> affine, cubed;
        for (double v : x) {
            affine.push_back(3.5 * v + 2.0);
            cubed.push_back(v * v * v);
        }
        REQUIRE(pearson(Series(years, affine), sy) == doctest::Approx(r));
        const double rho = spearman(sx, sy);
        REQUIRE(spearman(Series(years, cubed), sy) == doctest::Approx(rho));
        REQUIRE(rho == doctest::Approx(spearman(sy, sx)));
    }
}
