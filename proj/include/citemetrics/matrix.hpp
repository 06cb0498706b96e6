#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "citemetrics/ingest.hpp"
#include "citemetrics/years.hpp"

namespace citemetrics {

/// Publication-citation matrix: citation years are rows (k), publication
/// years are columns (i). Immutable once built.
class PubCitMatrix {
public:
    PubCitMatrix(YearRange pub_years, YearRange cite_years, PublicationLedger publications);

    const YearRange& pub_years() const noexcept { return pub_years_; }
    const YearRange& cite_years() const noexcept { return cite_years_; }
    const PublicationLedger& ledger() const noexcept { return publications_; }

    std::int64_t publications(Year i) const { return publications_.at(i); }
    /// Throws std::out_of_range outside cite_years x pub_years.
    std::int64_t citations(Year k, Year i) const { return cells_[index(k, i)]; }
    bool in_range(Year k, Year i) const noexcept { return cite_years_.contains(k) && pub_years_.contains(i); }

    void set_citations(Year k, Year i, std::int64_t count);
    void add_citation(Year k, Year i) { ++cells_[index(k, i)]; }

    friend bool operator==(const PubCitMatrix&, const PubCitMatrix&) = default;

private:
    std::size_t index(Year k, Year i) const;

    YearRange pub_years_;
    YearRange cite_years_;
    PublicationLedger publications_;
    std::vector<std::int64_t> cells_;
};

enum class AugmentVariant { synchronous, diachronous };

std::string_view to_string(AugmentVariant v);

/// Per-cell counts of "unique new" citing journals on top of a base matrix.
/// Synchronous: within a citation-year row each journal is counted once, at the
/// newest publication year it cites. Diachronous: within a publication-year
/// column each journal is counted once, at the earliest year it cites.
class AugmentedMatrix {
public:
    AugmentedMatrix(AugmentVariant variant, PubCitMatrix base);

    AugmentVariant variant() const noexcept { return variant_; }
    const PubCitMatrix& base() const noexcept { return base_; }
    std::int64_t unique_new(Year k, Year i) const { return cells_[index(k, i)]; }

    /// Throws std::invalid_argument when the count exceeds the base cell.
    void set_unique_new(Year k, Year i, std::int64_t count);

    friend bool operator==(const AugmentedMatrix&, const AugmentedMatrix&) = default;

private:
    std::size_t index(Year k, Year i) const;

    AugmentVariant variant_;
    PubCitMatrix base_;
    std::vector<std::int64_t> cells_;
};

struct MatrixBuild {
    PubCitMatrix matrix;
    std::size_t clipped = 0;  // events outside the requested ranges
};

/// Exact per-cell event counts. Throws std::invalid_argument when the ledger
/// does not cover pub_years.
MatrixBuild build_pc_matrix(std::span<const CitationEvent> events, const PublicationLedger& ledger,
                            YearRange pub_years, YearRange cite_years);

/// Both builders throw InconsistentEvents if `events` would not reproduce the
/// citation counts of `m`.
AugmentedMatrix augment_synchronous(const PubCitMatrix& m, std::span<const CitationEvent> events);
AugmentedMatrix augment_diachronous(const PubCitMatrix& m, std::span<const CitationEvent> events);

/// Number of distinct citing journals with at least one event in the block
/// pub_years x cite_years. Brute-force set union; serves as the reference for
/// both augmented variants.
std::size_t distinct_journals_block(std::span<const CitationEvent> events, YearRange pub_years,
                                    YearRange cite_years);

}  // namespace citemetrics
