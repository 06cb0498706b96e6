#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "citemetrics/fixture.hpp"
#include "citemetrics/ingest.hpp"

namespace citemetrics {

struct IngestOptions {
    std::optional<YearRange> pub_years;   // default: the publications ledger window
    std::optional<YearRange> cite_years;  // default: first publication year to last citing year
};

struct IngestWarnings {
    std::size_t records = 0;
    std::size_t duplicates_removed = 0;
    std::size_t clipped = 0;                  // events outside the matrix ranges
    std::vector<std::size_t> backdated_lines;  // citing year before cited publication year
};

struct IngestResult {
    MatrixFixture fixture;  // carries both augmented matrices
    std::vector<JournalId> journals;
    std::vector<CitationEvent> events;  // deduplicated, sorted
    IngestWarnings warnings;
};

/// parse -> normalize -> deduplicate -> matrix -> both augmented matrices.
/// Output does not depend on the order of citation rows.
IngestResult run_ingest(std::istream& pubs, std::istream& cites, std::istream* aliases = nullptr,
                        const IngestOptions& options = {});

void write_warnings(std::ostream& out, const IngestWarnings& w);

}  // namespace citemetrics
