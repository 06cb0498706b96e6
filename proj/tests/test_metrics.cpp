#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "citemetrics/errors.hpp"
#include "citemetrics/fixture.hpp"
#include "citemetrics/metrics.hpp"
#include "support.hpp"

using namespace citemetrics;
using test::event;

namespace {

const MatrixFixture& mjm() {
    static const MatrixFixture f = load_fixture(CITEMETRICS_TEST_DATA "/mjm_fixture.json");
    return f;
}

void check_exact(const MetricValue& v, std::int64_t num, std::int64_t den) {
    CHECK(v.numerator == num);
    CHECK(v.denominator == den);
}

}  // namespace

TEST_CASE("garfield_if on the MJM matrix") {
    check_exact(garfield_if(mjm().matrix, 2009), 52 + 35, 100 + 135);
    check_exact(garfield_if(mjm().matrix, 2006), 76 + 26, 139 + 102);
    CHECK_THROWS_AS(garfield_if(mjm().matrix, 2004), UndefinedMetric);
    CHECK_THROWS_AS(garfield_if(mjm().matrix, 2005), UndefinedMetric);
    CHECK_THROWS_AS(garfield_if(mjm().matrix, 2010), UndefinedMetric);

    PubCitMatrix zero({2004, 2008}, {2004, 2010}, test::flat_ledger({2004, 2008}));
    const auto v = garfield_if(zero, 2007);
    CHECK(v.numerator == 0);
    CHECK(v.denominator > 0);
}

TEST_CASE("sync_if") {
    const auto& m = mjm().matrix;
    check_exact(sync_if(m, 2009, Window::years(3)), 87 + 52 + 35, 104 + 100 + 135);
    check_exact(sync_if(m, 2009, Window::years(2)), 87, 235);
    CHECK(sync_if(m, 2009, Window::years(3)).effective_window ==
          std::vector<Cell>{{2009, 2008}, {2009, 2007}, {2009, 2006}});

    PubCitMatrix one({2004, 2008}, {2004, 2010}, mjm().matrix.ledger());
    one.set_citations(2005, 2004, 37);
    check_exact(sync_if(one, 2005, Window::years(1)), 37, 139);

    // Clipping: 2010 reaches back to 2009, which has no publications.
    check_exact(sync_if(m, 2010, Window::years(2)), 30, 135);
    CHECK_THROWS_AS(sync_if(m, 2010, Window::years(2), false), UndefinedMetric);
    CHECK_THROWS_AS(sync_if(m, 2004, Window::years(2)), UndefinedMetric);
    CHECK_THROWS_AS(sync_if(m, 2011, Window::years(2)), UndefinedMetric);
}

TEST_CASE("diach_if with shift") {
    const auto& m = mjm().matrix;
    check_exact(diach_if(m, 2006, Window::years(2), 1), 58 + 60, 104);
    check_exact(diach_if(m, 2006, Window::years(2), 0), 7 + 58, 104);
    check_exact(diach_if(m, 2008, Window::years(2), 1), 35 + 30, 135);
    check_exact(diach_if(m, 2008, Window::years(5), 1), 35 + 30, 135);  // clipped at 2010
    CHECK_THROWS_AS(diach_if(m, 2008, Window::years(5), 1, false), UndefinedMetric);
    CHECK_THROWS_AS(diach_if(m, 2009, Window::years(2), 1), UndefinedMetric);

    std::map<Year, std::int64_t> counts{{2004, 0}, {2005, 3}};
    PubCitMatrix empty_year({2004, 2005}, {2004, 2006}, PublicationLedger(counts));
    CHECK_THROWS_AS(diach_if(empty_year, 2004, Window::years(2), 1), UndefinedMetric);
}

TEST_CASE("sync_jdf and sync_rdf") {
    const auto& a = *mjm().synchronous;
    check_exact(sync_jdf(a, 2006, Window::years(3)), 4 + 18 + 61, 104 + 102 + 139);
    check_exact(sync_jdf(a, 2004, Window::max()), 8, 139);
    check_exact(sync_jdf(a, 2010, Window::max()), 25 + 23 + 35 + 25 + 38, 580);
    check_exact(sync_rdf(a, 2006, Window::years(3)), 83, 7 + 26 + 76);
    check_exact(sync_rdf(a, 2004, Window::max()), 8, 8);
    CHECK_THROWS_AS(sync_jdf(a, 2010, Window::max(), false), UndefinedMetric);
    CHECK_THROWS_AS(sync_jdf(*mjm().diachronous, 2006, Window::years(3)), std::invalid_argument);
}

TEST_CASE("diach_jdf and diach_rdf") {
    const auto& a = *mjm().diachronous;
    check_exact(diach_jdf(a, 2006, Window::years(3)), 6 + 44 + 46, 104);
    check_exact(diach_jdf(a, 2004, Window::max()), 255, 139);
    check_exact(diach_jdf(a, 2008, Window::max()), 3 + 32 + 28, 135);
    check_exact(diach_rdf(a, 2006, Window::years(5)), 6 + 44 + 46 + 74 + 36, 7 + 58 + 60 + 87 + 41);
    check_exact(diach_rdf(a, 2004, Window::years(7)), 255, 409);
    check_exact(diach_rdf(a, 2005, Window::years(6)), 184, 249);
    CHECK_THROWS_AS(diach_rdf(a, 2009, Window::max()), UndefinedMetric);
    CHECK_THROWS_AS(diach_rdf(*mjm().synchronous, 2006, Window::max()), std::invalid_argument);

    PubCitMatrix quiet({2004, 2005}, {2004, 2006}, test::flat_ledger({2004, 2005}));
    CHECK_THROWS_AS(diach_rdf(AugmentedMatrix(AugmentVariant::diachronous, quiet), 2004, Window::max()),
                    UndefinedMetric);
}

TEST_CASE("rowlands_jdf") {
    const YearRange pub{2004, 2008};
    const YearRange cite{2004, 2010};
    SUBCASE("single publication year equals 100 x diachronous RDF on MJM-consistent events") {
        std::uint32_t next_journal = 0;
        const auto events = test::column_events(2006, {7, 58, 60, 87, 41}, {6, 44, 46, 74, 36}, next_journal);
        const auto m = build_pc_matrix(events, test::flat_ledger(pub), pub, cite).matrix;
        const auto v = rowlands_jdf(events, m, YearRange::single(2006), {2006, 2010});
        check_exact(v, 100 * 206, 253);
        CHECK(v.value() == doctest::Approx(81.42).epsilon(1e-3));
    }
    SUBCASE("one journal") {
        const std::vector one{event(0, 2005, 2006)};
        const auto m = build_pc_matrix(one, test::flat_ledger(pub), pub, cite).matrix;
        CHECK(rowlands_jdf(one, m, pub, cite).value() == 100.0);

        std::vector<CitationEvent> four;
        for (int c = 0; c < 4; ++c) four.push_back(event(0, 2005, 2006 + c, "c"));
        const auto m4 = build_pc_matrix(four, test::flat_ledger(pub), pub, cite).matrix;
        CHECK(rowlands_jdf(four, m4, pub, cite).value() == 25.0);
        CHECK_THROWS_AS(rowlands_jdf(four, m4, YearRange::single(2004), cite), UndefinedMetric);
        CHECK_THROWS_AS(rowlands_jdf(four, m4, {2003, 2005}, cite), UndefinedMetric);
    }
}

TEST_CASE("evaluate dispatches and validates sources") {
    MetricSources s;
    s.matrix = &mjm().matrix;
    s.synchronous = &*mjm().synchronous;
    MetricRequest r;
    r.kind = MetricKind::sync_jdf;
    r.anchor_year = 2006;
    r.window = Window::years(3);
    check_exact(evaluate(r, s), 83, 345);
    r.kind = MetricKind::diach_jdf;
    CHECK_THROWS_AS(evaluate(r, s), std::invalid_argument);
    r.kind = MetricKind::rowlands_jdf;
    CHECK_THROWS_AS(evaluate(r, s), std::invalid_argument);

    CHECK(parse_metric_kind("diach_rdf") == MetricKind::diach_rdf);
    CHECK_THROWS_AS(parse_metric_kind("h_index"), std::invalid_argument);
    CHECK(Window::parse("max").is_max());
    CHECK(Window::parse("3").length() == 3);
    CHECK_THROWS_AS(Window::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Window::parse("3y"), std::invalid_argument);
}

TEST_CASE("garfield_if equals sync_if with n = 2 wherever defined") {
    const auto& m = mjm().matrix;
    for (Year y : m.cite_years().years()) {
        std::optional<MetricValue> g;
        try {
            g = garfield_if(m, y);
        } catch (const UndefinedMetric&) {
            continue;
        }
        const auto s = sync_if(m, y, Window::years(2));
        CHECK(g->numerator == s.numerator);
        CHECK(g->denominator == s.denominator);
    }
}

TEST_CASE("randomized invariants: RDF bounds, monotone diachronous JDF, Rowlands consistency") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const auto s = test::random_event_set(rng, 30, 6, 500);
        const auto m = build_pc_matrix(s.events, test::flat_ledger(s.pub_years, 5), s.pub_years, s.cite_years).matrix;
        const auto sync = augment_synchronous(m, s.events);
        const auto diach = augment_diachronous(m, s.events);
        for (Year y : s.cite_years.years()) {
            try {
                const auto v = sync_rdf(sync, y, Window::max());
                REQUIRE(v.numerator > 0);
                REQUIRE(v.numerator <= v.denominator);
            } catch (const UndefinedMetric&) {
            }
        }
        for (Year y : s.pub_years.years()) {
            std::int64_t prev = -1;
            for (int n = 1; y + n - 1 <= s.cite_years.last; ++n) {
                const auto v = diach_jdf(diach, y, Window::years(n));
                REQUIRE(v.numerator >= prev);
                prev = v.numerator;
                try {
                    const auto rdf = diach_rdf(diach, y, Window::years(n));
                    REQUIRE(rdf.numerator > 0);
                    REQUIRE(rdf.numerator <= rdf.denominator);
                    const auto row = rowlands_jdf(s.events, m, YearRange::single(y), {y, y + n - 1});
                    REQUIRE(row.numerator * rdf.denominator == 100 * rdf.numerator * row.denominator);
                } catch (const UndefinedMetric&) {
                }
            }
            REQUIRE(prev == static_cast<std::int64_t>(
                                distinct_journals_block(s.events, YearRange::single(y), {y, s.cite_years.last})));
        }
    }
}
