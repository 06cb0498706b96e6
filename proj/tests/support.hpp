#pragma once

// Shared test helpers: event construction, synthetic generators and
// definition-level brute-force counts for the augmented matrices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "citemetrics/ingest.hpp"
#include "citemetrics/matrix.hpp"

namespace citemetrics::test {

inline CitationEvent event(std::uint32_t journal, Year pub_year, Year cite_year,
                           std::optional<std::string> citing_article = std::nullopt,
                           std::string cited_article = "a") {
    return CitationEvent{std::move(cited_article), pub_year, JournalRef{journal}, cite_year,
                         std::move(citing_article)};
}

inline PublicationLedger flat_ledger(YearRange years, std::int64_t per_year = 10) {
    std::map<Year, std::int64_t> counts;
    for (Year y : years.years()) counts[y] = per_year;
    return PublicationLedger(counts);
}

struct RandomSet {
    YearRange pub_years;
    YearRange cite_years;
    std::vector<CitationEvent> events;  // deduplicated
};

/// Random event set with citing_year >= cited_pub_year. Citing article ids
/// are unique per event so no two events collapse.
inline RandomSet random_event_set(std::mt19937_64& rng, int max_journals = 50, int max_years = 8,
                                  int max_events = 2000) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const Year first = 2000;
    const int n_pub = pick(1, max_years);
    const int n_cite = pick(n_pub, max_years);
    const int journals = pick(1, max_journals);
    const int n_events = pick(0, max_events);
    RandomSet out{{first, first + n_pub - 1}, {first, first + n_cite - 1}, {}};
    for (int e = 0; e < n_events; ++e) {
        const Year i = pick(first, out.pub_years.last);
        const Year k = pick(i, out.cite_years.last);
        out.events.push_back(event(static_cast<std::uint32_t>(pick(0, journals - 1)), i, k, "c" + std::to_string(e)));
    }
    std::sort(out.events.begin(), out.events.end());
    return out;
}

/// Journals counted in synchronous cell (k, i) straight from the definition:
/// they cite pub year i in year k and no pub year in (i, k] in year k.
inline std::int64_t brute_sync_cell(const std::vector<CitationEvent>& events, Year k, Year i) {
    std::set<JournalRef> here, newer;
    for (const auto& e : events) {
        if (e.citing_year != k) continue;
        if (e.cited_pub_year == i) here.insert(e.citing_journal);
        if (e.cited_pub_year > i && e.cited_pub_year <= k) newer.insert(e.citing_journal);
    }
    if (i > k) return 0;
    std::int64_t n = 0;
    for (auto j : here) n += newer.contains(j) ? 0 : 1;
    return n;
}

/// Diachronous cell (k, i): journals citing pub year i in year k that did not
/// cite pub year i in any of the years i..k-1.
inline std::int64_t brute_diach_cell(const std::vector<CitationEvent>& events, Year k, Year i) {
    std::set<JournalRef> here, earlier;
    for (const auto& e : events) {
        if (e.cited_pub_year != i) continue;
        if (e.citing_year == k) here.insert(e.citing_journal);
        if (e.citing_year >= i && e.citing_year < k) earlier.insert(e.citing_journal);
    }
    if (i > k) return 0;
    std::int64_t n = 0;
    for (auto j : here) n += earlier.contains(j) ? 0 : 1;
    return n;
}

/// Events for a single publication-year column that reproduce the given
/// per-row citation counts and diachronous unique-new counts. Journal ids start
/// at `first_journal`; returns the events and advances `first_journal`.
inline std::vector<CitationEvent> column_events(Year pub_year, const std::vector<std::int64_t>& citations,
                                                const std::vector<std::int64_t>& unique_new,
                                                std::uint32_t& first_journal) {
    std::vector<CitationEvent> out;
    std::vector<std::uint32_t> seen;
    int serial = 0;
    for (std::size_t r = 0; r < citations.size(); ++r) {
        const Year k = pub_year + static_cast<Year>(r);
        auto cite = [&](std::uint32_t j) { out.push_back(event(j, pub_year, k, "s" + std::to_string(serial++))); };
        std::vector<std::uint32_t> fresh;
        for (std::int64_t u = 0; u < unique_new[r]; ++u) fresh.push_back(first_journal++);
        for (auto j : fresh) cite(j);
        // Remaining citations come from journals already seen in this column,
        // or from this row's new journals when nothing was seen before.
        const auto& pool = seen.empty() ? fresh : seen;
        for (std::int64_t c = unique_new[r]; c < citations[r]; ++c) cite(pool[static_cast<std::size_t>(c) % pool.size()]);
        seen.insert(seen.end(), fresh.begin(), fresh.end());
    }
    return out;
}

}  // namespace citemetrics::test
