#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/years.hpp"

namespace citemetrics {

// -------------------------------------------------------------------------
//     Records and events
// -------------------------------------------------------------------------

struct RawCitationRecord {
    std::string cited_article_id;
    Year cited_pub_year = 0;
    std::string citing_journal_raw;
    Year citing_year = 0;
    std::optional<std::string> citing_article_id;
    std::size_t source_line = 0;
};

/// Index into a JournalCatalog. Catalog order is sorted by canonical name, so
/// the same input always yields the same references.
struct JournalRef {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(const JournalRef&, const JournalRef&) = default;
};

struct JournalId {
    std::string canonical_name;
    std::set<std::string> aliases;
};

struct CitationEvent {
    std::string cited_article_id;
    Year cited_pub_year = 0;
    JournalRef citing_journal;
    Year citing_year = 0;
    std::optional<std::string> citing_article_id;

    friend auto operator<=>(const CitationEvent&, const CitationEvent&) = default;
    friend bool operator==(const CitationEvent&, const CitationEvent&) = default;
};

/// Article counts per publication year over a contiguous window. Years inside
/// the window with no articles carry an explicit zero.
class PublicationLedger {
public:
    PublicationLedger() = default;
    explicit PublicationLedger(std::map<Year, std::int64_t> counts);

    const std::map<Year, std::int64_t>& counts() const noexcept { return counts_; }
    bool empty() const noexcept { return counts_.empty(); }
    std::optional<YearRange> window() const;
    bool covers(const YearRange& r) const;
    /// Throws std::out_of_range for years outside the ledger.
    std::int64_t at(Year y) const;

    friend bool operator==(const PublicationLedger&, const PublicationLedger&) = default;

private:
    std::map<Year, std::int64_t> counts_;
};

// -------------------------------------------------------------------------
//     Parsing
// -------------------------------------------------------------------------

struct ParsedRecords {
    PublicationLedger ledger;
    std::vector<RawCitationRecord> records;
};

/// Publications file, either `year,count` or `article_id,year` form.
PublicationLedger parse_publications(std::istream& in, const std::string& source = "publications");

/// Citations file with header
/// `cited_article_id,cited_pub_year,citing_journal,citing_year[,citing_article_id]`.
std::vector<RawCitationRecord> parse_citations(std::istream& in, const std::string& source = "citations");

ParsedRecords parse_records(std::istream& pubs, std::istream& cites);

/// Two-column `raw,canonical` CSV. Keys and values are normalized on load; an
/// alias that resolves to two different canonical names is a ConfigError.
using AliasTable = std::map<std::string, std::string>;
AliasTable parse_alias_table(std::istream& in, const std::string& source = "aliases");

/// Splits one CSV line, honouring double-quoted fields. Exposed for tests.
std::vector<std::string> split_csv_line(std::string_view line);

// -------------------------------------------------------------------------
//     Normalization and deduplication
// -------------------------------------------------------------------------

/// Trim, ASCII case-fold, collapse internal whitespace, strip punctuation at
/// both ends. Idempotent.
std::string normalize_journal_name(std::string_view raw);

struct NormalizedEvents {
    std::vector<JournalId> journals;  // sorted by canonical_name
    std::vector<CitationEvent> events;  // same order as the input records

    const JournalId& journal(JournalRef r) const { return journals.at(r.index); }
};

NormalizedEvents normalize_journal_names(const std::vector<RawCitationRecord>& records,
                                         const AliasTable& aliases = {});

struct DedupResult {
    std::vector<CitationEvent> events;  // sorted, unique
    std::size_t removed = 0;
};

DedupResult deduplicate_events(std::vector<CitationEvent> events);

/// Records whose citing year precedes the cited publication year. These stay
/// in the data set; the caller reports them.
std::vector<std::size_t> backdated_lines(const std::vector<RawCitationRecord>& records);

}  // namespace citemetrics
