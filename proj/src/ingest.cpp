#include "citemetrics/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "citemetrics/errors.hpp"

namespace citemetrics {

namespace {

std::string_view trim_view(std::string_view s) {
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

/// Line reader that strips a UTF-8 BOM, CR before LF and skips blank lines
/// while keeping the physical line number.
class CsvReader {
public:
    CsvReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (line_no_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (trim_view(line).empty()) continue;
            fields = split_csv_line(line);
            for (auto& f : fields) f = std::string(trim_view(f));
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return line_no_; }
    const std::string& source() const noexcept { return source_; }

    [[noreturn]] void fail(const std::string& column, const std::string& what) const {
        throw ParseError(source_, line_no_, column, what);
    }

private:
    std::istream& in_;
    std::string source_;
    std::size_t line_no_ = 0;
};

Year year_field(const CsvReader& r, const std::string& value, const std::string& column) {
    Year y = 0;
    if (!parse_year(value, y)) r.fail(column, "expected a 4-digit year, got '" + value + "'");
    return y;
}

std::int64_t count_field(const CsvReader& r, const std::string& value, const std::string& column) {
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || n < 0)
        r.fail(column, "expected a non-negative integer, got '" + value + "'");
    return n;
}

}  // namespace

// -------------------------------------------------------------------------
//     PublicationLedger
// -------------------------------------------------------------------------

PublicationLedger::PublicationLedger(std::map<Year, std::int64_t> counts) : counts_(std::move(counts)) {
    for (const auto& [year, n] : counts_)
        if (n < 0) throw std::invalid_argument("negative publication count for " + std::to_string(year));
    if (counts_.empty()) return;
    const Year lo = counts_.begin()->first;
    const Year hi = counts_.rbegin()->first;
    for (Year y = lo; y <= hi; ++y) counts_.try_emplace(y, 0);
}

std::optional<YearRange> PublicationLedger::window() const {
    if (counts_.empty()) return std::nullopt;
    return YearRange{counts_.begin()->first, counts_.rbegin()->first};
}

bool PublicationLedger::covers(const YearRange& r) const {
    const auto w = window();
    return w && w->contains(r);
}

std::int64_t PublicationLedger::at(Year y) const {
    auto it = counts_.find(y);
    if (it == counts_.end()) throw std::out_of_range("no publication count for " + std::to_string(y));
    return it->second;
}

// -------------------------------------------------------------------------
//     Parsing
// -------------------------------------------------------------------------

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

PublicationLedger parse_publications(std::istream& in, const std::string& source) {
    CsvReader reader(in, source);
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw ParseError(source, 1, "", "missing header");

    const bool counts_form = fields == std::vector<std::string>{"year", "count"};
    const bool article_form = fields == std::vector<std::string>{"article_id", "year"};
    if (!counts_form && !article_form)
        reader.fail("", "header must be 'year,count' or 'article_id,year'");

    std::map<Year, std::int64_t> counts;
    while (reader.next(fields)) {
        if (fields.size() != 2) reader.fail(fields.size() < 2 ? (counts_form ? "count" : "year") : "",
                                            "expected 2 fields, got " + std::to_string(fields.size()));
        if (counts_form) {
            const Year y = year_field(reader, fields[0], "year");
            const auto n = count_field(reader, fields[1], "count");
            if (!counts.emplace(y, n).second) reader.fail("year", "duplicate year " + std::to_string(y));
        } else {
            if (fields[0].empty()) reader.fail("article_id", "empty article id");
            ++counts[year_field(reader, fields[1], "year")];
        }
    }
    return PublicationLedger(std::move(counts));
}

std::vector<RawCitationRecord> parse_citations(std::istream& in, const std::string& source) {
    static const std::vector<std::string> kColumns{"cited_article_id", "cited_pub_year", "citing_journal",
                                                   "citing_year", "citing_article_id"};
    CsvReader reader(in, source);
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw ParseError(source, 1, "", "missing header");
    const bool has_article_id = fields.size() == 5;
    if ((fields.size() != 4 && !has_article_id) ||
        !std::equal(fields.begin(), fields.end(), kColumns.begin()))
        reader.fail("", "header must be 'cited_article_id,cited_pub_year,citing_journal,citing_year"
                        "[,citing_article_id]'");
    const std::size_t width = fields.size();

    std::vector<RawCitationRecord> records;
    while (reader.next(fields)) {
        if (fields.size() < width) reader.fail(kColumns[fields.size()], "missing field");
        if (fields.size() > width) reader.fail("", "too many fields (" + std::to_string(fields.size()) + ")");

        RawCitationRecord rec;
        rec.source_line = reader.line();
        rec.cited_article_id = fields[0];
        if (rec.cited_article_id.empty()) reader.fail(kColumns[0], "empty cited article id");
        rec.cited_pub_year = year_field(reader, fields[1], kColumns[1]);
        rec.citing_journal_raw = fields[2];
        if (rec.citing_journal_raw.empty()) reader.fail(kColumns[2], "empty citing journal");
        rec.citing_year = year_field(reader, fields[3], kColumns[3]);
        if (has_article_id && !fields[4].empty()) rec.citing_article_id = fields[4];
        records.push_back(std::move(rec));
    }
    return records;
}

ParsedRecords parse_records(std::istream& pubs, std::istream& cites) {
    return {parse_publications(pubs), parse_citations(cites)};
}

AliasTable parse_alias_table(std::istream& in, const std::string& source) {
    CsvReader reader(in, source);
    std::vector<std::string> fields;
    if (!reader.next(fields)) return {};
    if (fields != std::vector<std::string>{"raw", "canonical"}) reader.fail("", "header must be 'raw,canonical'");

    AliasTable table;
    while (reader.next(fields)) {
        if (fields.size() != 2) reader.fail(fields.size() < 2 ? "canonical" : "", "expected 2 fields");
        auto raw = normalize_journal_name(fields[0]);
        auto canonical = normalize_journal_name(fields[1]);
        if (raw.empty()) reader.fail("raw", "empty alias");
        if (canonical.empty()) reader.fail("canonical", "empty canonical name");
        auto [it, inserted] = table.emplace(raw, canonical);
        if (!inserted && it->second != canonical)
            throw ConfigError(source + ":" + std::to_string(reader.line()) + ": alias '" + raw +
                              "' maps to both '" + it->second + "' and '" + canonical + "'");
    }
    return table;
}

// -------------------------------------------------------------------------
//     Normalization and deduplication
// -------------------------------------------------------------------------

std::string normalize_journal_name(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char c : raw) {
        if (std::isspace(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    auto terminal = [](unsigned char c) { return std::ispunct(c) || c == ' '; };
    std::size_t lo = 0;
    std::size_t hi = out.size();
    while (lo < hi && terminal(out[lo])) ++lo;
    while (hi > lo && terminal(out[hi - 1])) --hi;
    return out.substr(lo, hi - lo);
}

NormalizedEvents normalize_journal_names(const std::vector<RawCitationRecord>& records,
                                         const AliasTable& aliases) {
    // canonical -> raw spellings
    std::map<std::string, std::set<std::string>> by_canonical;
    std::vector<std::string> canonical_of(records.size());
    for (std::size_t r = 0; r < records.size(); ++r) {
        auto name = normalize_journal_name(records[r].citing_journal_raw);
        if (name.empty())
            throw ParseError("citations", records[r].source_line, "citing_journal",
                             "journal name is empty after normalization");
        if (auto it = aliases.find(name); it != aliases.end()) name = it->second;
        by_canonical[name].insert(records[r].citing_journal_raw);
        canonical_of[r] = std::move(name);
    }

    NormalizedEvents out;
    std::map<std::string, JournalRef> refs;
    for (auto& [name, raws] : by_canonical) {
        refs.emplace(name, JournalRef{static_cast<std::uint32_t>(out.journals.size())});
        out.journals.push_back(JournalId{name, std::move(raws)});
    }
    out.events.reserve(records.size());
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& rec = records[r];
        out.events.push_back(CitationEvent{rec.cited_article_id, rec.cited_pub_year, refs.at(canonical_of[r]),
                                           rec.citing_year, rec.citing_article_id});
    }
    return out;
}

DedupResult deduplicate_events(std::vector<CitationEvent> events) {
    std::sort(events.begin(), events.end());
    const auto before = events.size();
    events.erase(std::unique(events.begin(), events.end()), events.end());
    const auto removed = before - events.size();
    return {std::move(events), removed};
}

std::vector<std::size_t> backdated_lines(const std::vector<RawCitationRecord>& records) {
    std::vector<std::size_t> lines;
    for (const auto& r : records)
        if (r.citing_year < r.cited_pub_year) lines.push_back(r.source_line);
    return lines;
}

}  // namespace citemetrics
