#include "citemetrics/metrics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "citemetrics/errors.hpp"

namespace citemetrics {

namespace {

constexpr std::array<std::pair<MetricKind, std::string_view>, 8> kKindNames{{
    {MetricKind::garfield_if, "garfield_if"},
    {MetricKind::sync_if, "sync_if"},
    {MetricKind::diach_if, "diach_if"},
    {MetricKind::sync_jdf, "sync_jdf"},
    {MetricKind::diach_jdf, "diach_jdf"},
    {MetricKind::sync_rdf, "sync_rdf"},
    {MetricKind::diach_rdf, "diach_rdf"},
    {MetricKind::rowlands_jdf, "rowlands_jdf"},
}};

std::string join_years(const std::vector<Year>& years) {
    std::string out;
    for (Year y : years) out += (out.empty() ? "" : ", ") + std::to_string(y);
    return out;
}

/// Years of a window after clipping. Throws UndefinedMetric if clipping is
/// off and something is missing, or if nothing survives.
std::vector<Year> select_years(const std::vector<Year>& wanted, const YearRange& available, bool clip,
                               std::string_view what, std::string_view metric) {
    std::vector<Year> kept;
    std::vector<Year> missing;
    for (Year y : wanted) (available.contains(y) ? kept : missing).push_back(y);
    if (!clip && !missing.empty())
        throw UndefinedMetric(std::string(metric) + ": " + std::string(what) + " " + join_years(missing) +
                              " outside data range " + available.to_string());
    if (kept.empty())
        throw UndefinedMetric(std::string(metric) + ": no " + std::string(what) + " of the window (" +
                              join_years(wanted) + ") lies in data range " + available.to_string());
    return kept;
}

std::vector<Year> backward_years(Year start, int count) {
    std::vector<Year> out;
    for (int j = 0; j < count; ++j) out.push_back(start - j);
    return out;
}

std::vector<Year> forward_years(Year start, int count) {
    std::vector<Year> out;
    for (int j = 0; j < count; ++j) out.push_back(start + j);
    return out;
}

void require_cite_year(const PubCitMatrix& m, Year y, std::string_view metric) {
    if (!m.cite_years().contains(y))
        throw UndefinedMetric(std::string(metric) + ": citation year " + std::to_string(y) + " outside " +
                              m.cite_years().to_string());
}

void require_pub_year(const PubCitMatrix& m, Year y, std::string_view metric) {
    if (!m.pub_years().contains(y))
        throw UndefinedMetric(std::string(metric) + ": publication year " + std::to_string(y) + " outside " +
                              m.pub_years().to_string());
}

void require_variant(const AugmentedMatrix& a, AugmentVariant v, std::string_view metric) {
    if (a.variant() != v)
        throw std::invalid_argument(std::string(metric) + " needs the " + std::string(to_string(v)) +
                                    " augmented matrix, got " + std::string(to_string(a.variant())));
}

MetricValue finish(std::int64_t num, std::int64_t den, std::vector<Cell> cells, std::string_view metric,
                   std::string_view den_name) {
    if (den <= 0)
        throw UndefinedMetric(std::string(metric) + ": " + std::string(den_name) + " over the window is zero");
    return {num, den, std::move(cells)};
}

// Synchronous window: row `year`, publication years year-offset .. year-offset-len+1.
std::vector<Year> sync_pub_years(const PubCitMatrix& m, Year year, Window n, int offset, bool clip,
                                 std::string_view metric) {
    require_cite_year(m, year, metric);
    const Year start = year - offset;
    const int len = n.is_max() ? start - m.pub_years().first + 1 : n.length();
    if (len <= 0)
        throw UndefinedMetric(std::string(metric) + ": no publication years before " + std::to_string(year) +
                              " in " + m.pub_years().to_string());
    return select_years(backward_years(start, len), m.pub_years(), clip, "publication years", metric);
}

// Diachronous window: column `year`, citation years year+offset .. year+offset+len-1.
std::vector<Year> diach_cite_years(const PubCitMatrix& m, Year year, Window n, int offset, bool clip,
                                   std::string_view metric) {
    require_pub_year(m, year, metric);
    const Year start = year + offset;
    const int len = n.is_max() ? m.cite_years().last - start + 1 : n.length();
    if (len <= 0)
        throw UndefinedMetric(std::string(metric) + ": no citation years from " + std::to_string(start) +
                              " in " + m.cite_years().to_string());
    return select_years(forward_years(start, len), m.cite_years(), clip, "citation years", metric);
}

enum class Denominator { publications, citations };

MetricValue sync_diffusion(const AugmentedMatrix& a, Year year, Window n, bool clip, Denominator d,
                           std::string_view metric) {
    require_variant(a, AugmentVariant::synchronous, metric);
    const auto& m = a.base();
    std::int64_t num = 0;
    std::int64_t den = 0;
    std::vector<Cell> cells;
    for (Year i : sync_pub_years(m, year, n, 0, clip, metric)) {
        num += a.unique_new(year, i);
        den += d == Denominator::publications ? m.publications(i) : m.citations(year, i);
        cells.push_back({year, i});
    }
    return finish(num, den, std::move(cells), metric,
                  d == Denominator::publications ? "publication count" : "citation count");
}

MetricValue diach_diffusion(const AugmentedMatrix& a, Year year, Window n, bool clip, Denominator d,
                            std::string_view metric) {
    require_variant(a, AugmentVariant::diachronous, metric);
    const auto& m = a.base();
    std::int64_t num = 0;
    std::int64_t cites = 0;
    std::vector<Cell> cells;
    for (Year k : diach_cite_years(m, year, n, 0, clip, metric)) {
        num += a.unique_new(k, year);
        cites += m.citations(k, year);
        cells.push_back({k, year});
    }
    if (d == Denominator::publications)
        return finish(num, m.publications(year), std::move(cells), metric, "publication count");
    return finish(num, cites, std::move(cells), metric, "citation count");
}

}  // namespace

std::string_view to_string(MetricKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown metric kind '" + std::string(name) + "'");
}

Window Window::years(int n) {
    if (n < 1) throw std::invalid_argument("window must be a positive number of years");
    Window w;
    w.length_ = n;
    return w;
}

Window Window::parse(std::string_view text) {
    if (text == "max" || text == "MAX") return max();
    int n = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("window must be a positive integer or 'max', got '" + std::string(text) + "'");
    return years(n);
}

// -------------------------------------------------------------------------
//     Impact factors
// -------------------------------------------------------------------------

MetricValue garfield_if(const PubCitMatrix& m, Year year) {
    try {
        return sync_if(m, year, Window::years(2), false);
    } catch (const UndefinedMetric& e) {
        throw UndefinedMetric(std::string("garfield_if needs two prior publication years: ") + e.what());
    }
}

MetricValue sync_if(const PubCitMatrix& m, Year year, Window n, bool clip) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    std::vector<Cell> cells;
    for (Year i : sync_pub_years(m, year, n, 1, clip, "sync_if")) {
        num += m.citations(year, i);
        den += m.publications(i);
        cells.push_back({year, i});
    }
    return finish(num, den, std::move(cells), "sync_if", "publication count");
}

MetricValue diach_if(const PubCitMatrix& m, Year year, Window n, int shift, bool clip) {
    if (shift < 0) throw std::invalid_argument("shift must be non-negative");
    std::int64_t num = 0;
    std::vector<Cell> cells;
    for (Year k : diach_cite_years(m, year, n, shift, clip, "diach_if")) {
        num += m.citations(k, year);
        cells.push_back({k, year});
    }
    return finish(num, m.publications(year), std::move(cells), "diach_if", "publication count");
}

// -------------------------------------------------------------------------
//     Diffusion factors
// -------------------------------------------------------------------------

MetricValue sync_jdf(const AugmentedMatrix& a, Year year, Window n, bool clip) {
    return sync_diffusion(a, year, n, clip, Denominator::publications, "sync_jdf");
}

MetricValue sync_rdf(const AugmentedMatrix& a, Year year, Window n, bool clip) {
    return sync_diffusion(a, year, n, clip, Denominator::citations, "sync_rdf");
}

MetricValue diach_jdf(const AugmentedMatrix& a, Year year, Window n, bool clip) {
    return diach_diffusion(a, year, n, clip, Denominator::publications, "diach_jdf");
}

MetricValue diach_rdf(const AugmentedMatrix& a, Year year, Window n, bool clip) {
    return diach_diffusion(a, year, n, clip, Denominator::citations, "diach_rdf");
}

MetricValue rowlands_jdf(std::span<const CitationEvent> events, const PubCitMatrix& m, YearRange pub_window,
                         YearRange cite_window) {
    if (!m.pub_years().contains(pub_window) || !m.cite_years().contains(cite_window))
        throw UndefinedMetric("rowlands_jdf: block " + pub_window.to_string() + " x " + cite_window.to_string() +
                              " exceeds matrix " + m.pub_years().to_string() + " x " + m.cite_years().to_string());
    std::int64_t cites = 0;
    std::vector<Cell> cells;
    for (Year k : cite_window.years())
        for (Year i : pub_window.years()) {
            cites += m.citations(k, i);
            cells.push_back({k, i});
        }
    const auto distinct = static_cast<std::int64_t>(distinct_journals_block(events, pub_window, cite_window));
    return finish(100 * distinct, cites, std::move(cells), "rowlands_jdf", "citation count");
}

// -------------------------------------------------------------------------
//     Dispatch
// -------------------------------------------------------------------------

MetricValue evaluate(const MetricRequest& r, const MetricSources& s) {
    auto need = [](const auto* p, std::string_view what) -> const auto& {
        if (p == nullptr) throw std::invalid_argument("metric needs " + std::string(what));
        return *p;
    };
    switch (r.kind) {
        case MetricKind::garfield_if: return garfield_if(need(s.matrix, "a matrix"), r.anchor_year);
        case MetricKind::sync_if: return sync_if(need(s.matrix, "a matrix"), r.anchor_year, r.window, r.clip);
        case MetricKind::diach_if:
            return diach_if(need(s.matrix, "a matrix"), r.anchor_year, r.window, r.shift, r.clip);
        case MetricKind::sync_jdf:
            return sync_jdf(need(s.synchronous, "synchronous unique-new counts"), r.anchor_year, r.window, r.clip);
        case MetricKind::sync_rdf:
            return sync_rdf(need(s.synchronous, "synchronous unique-new counts"), r.anchor_year, r.window, r.clip);
        case MetricKind::diach_jdf:
            return diach_jdf(need(s.diachronous, "diachronous unique-new counts"), r.anchor_year, r.window, r.clip);
        case MetricKind::diach_rdf:
            return diach_rdf(need(s.diachronous, "diachronous unique-new counts"), r.anchor_year, r.window, r.clip);
        case MetricKind::rowlands_jdf: {
            const auto& m = need(s.matrix, "a matrix");
            const auto& events = need(s.events, "citation events (a matrix fixture is not enough)");
            if (r.pub_span < 1) throw std::invalid_argument("publication span must be positive");
            const int cite_len =
                r.window.is_max() ? m.cite_years().last - r.anchor_year + 1 : r.window.length();
            auto pubs = select_years(forward_years(r.anchor_year, r.pub_span), m.pub_years(), r.clip,
                                     "publication years", "rowlands_jdf");
            auto cites = select_years(forward_years(r.anchor_year, std::max(0, cite_len)), m.cite_years(),
                                      r.clip, "citation years", "rowlands_jdf");
            return rowlands_jdf(events, m, {pubs.front(), pubs.back()}, {cites.front(), cites.back()});
        }
    }
    throw std::invalid_argument("unhandled metric kind");
}

}  // namespace citemetrics
