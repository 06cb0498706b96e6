#include "citemetrics/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace citemetrics {

IngestResult run_ingest(std::istream& pubs, std::istream& cites, std::istream* aliases,
                        const IngestOptions& options) {
    auto ledger = parse_publications(pubs);
    auto records = parse_citations(cites);
    const AliasTable alias_table = aliases ? parse_alias_table(*aliases) : AliasTable{};

    const auto window = ledger.window();
    if (!window && !options.pub_years) throw std::invalid_argument("publications file lists no years");
    const YearRange pub_years = options.pub_years.value_or(*window);
    YearRange cite_years;
    if (options.cite_years) {
        cite_years = *options.cite_years;
    } else {
        Year last = pub_years.last;
        for (const auto& r : records) last = std::max(last, r.citing_year);
        cite_years = {pub_years.first, last};
    }

    IngestWarnings warnings;
    warnings.records = records.size();
    warnings.backdated_lines = backdated_lines(records);

    auto normalized = normalize_journal_names(records, alias_table);
    auto dedup = deduplicate_events(std::move(normalized.events));
    warnings.duplicates_removed = dedup.removed;

    auto built = build_pc_matrix(dedup.events, ledger, pub_years, cite_years);
    warnings.clipped = built.clipped;
    auto sync = augment_synchronous(built.matrix, dedup.events);
    auto diach = augment_diachronous(built.matrix, dedup.events);

    return IngestResult{MatrixFixture{std::move(built.matrix), std::move(sync), std::move(diach)},
                        std::move(normalized.journals), std::move(dedup.events), std::move(warnings)};
}

void write_warnings(std::ostream& out, const IngestWarnings& w) {
    out << "records read: " << w.records << '\n'
        << "duplicate citations removed: " << w.duplicates_removed << '\n'
        << "citations outside matrix ranges: " << w.clipped << '\n'
        << "citations dated before the cited publication year: " << w.backdated_lines.size() << '\n';
    if (!w.backdated_lines.empty()) {
        out << "  lines:";
        for (auto l : w.backdated_lines) out << ' ' << l;
        out << '\n';
    }
}

}  // namespace citemetrics
