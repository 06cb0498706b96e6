#include "citemetrics/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "citemetrics/errors.hpp"

namespace citemetrics {

namespace {

std::string cell_name(Year k, Year i) {
    return "(" + std::to_string(k) + ", " + std::to_string(i) + ")";
}

std::size_t grid_index(const YearRange& rows, const YearRange& cols, Year k, Year i) {
    if (!rows.contains(k) || !cols.contains(i)) throw std::out_of_range("cell " + cell_name(k, i) + " outside matrix");
    return static_cast<std::size_t>(k - rows.first) * cols.size() + static_cast<std::size_t>(i - cols.first);
}

void check_consistent(const PubCitMatrix& m, std::span<const CitationEvent> events) {
    PubCitMatrix counted(m.pub_years(), m.cite_years(), m.ledger());
    for (const auto& e : events)
        if (counted.in_range(e.citing_year, e.cited_pub_year)) counted.add_citation(e.citing_year, e.cited_pub_year);
    for (Year k : m.cite_years().years())
        for (Year i : m.pub_years().years())
            if (counted.citations(k, i) != m.citations(k, i))
                throw InconsistentEvents("event set has " + std::to_string(counted.citations(k, i)) +
                                         " citations in cell " + cell_name(k, i) + ", matrix has " +
                                         std::to_string(m.citations(k, i)));
}

}  // namespace

// -------------------------------------------------------------------------
//     PubCitMatrix
// -------------------------------------------------------------------------

PubCitMatrix::PubCitMatrix(YearRange pub_years, YearRange cite_years, PublicationLedger publications)
    : pub_years_(pub_years), cite_years_(cite_years), publications_(std::move(publications)),
      cells_(pub_years.size() * cite_years.size(), 0) {
    if (!publications_.covers(pub_years_))
        throw std::invalid_argument("publication ledger does not cover " + pub_years_.to_string());
}

std::size_t PubCitMatrix::index(Year k, Year i) const { return grid_index(cite_years_, pub_years_, k, i); }

void PubCitMatrix::set_citations(Year k, Year i, std::int64_t count) {
    if (count < 0) throw std::invalid_argument("negative citation count in cell " + cell_name(k, i));
    cells_[index(k, i)] = count;
}

// -------------------------------------------------------------------------
//     AugmentedMatrix
// -------------------------------------------------------------------------

std::string_view to_string(AugmentVariant v) {
    return v == AugmentVariant::synchronous ? "synchronous" : "diachronous";
}

AugmentedMatrix::AugmentedMatrix(AugmentVariant variant, PubCitMatrix base)
    : variant_(variant), base_(std::move(base)),
      cells_(base_.pub_years().size() * base_.cite_years().size(), 0) {}

std::size_t AugmentedMatrix::index(Year k, Year i) const {
    return grid_index(base_.cite_years(), base_.pub_years(), k, i);
}

void AugmentedMatrix::set_unique_new(Year k, Year i, std::int64_t count) {
    if (count < 0) throw std::invalid_argument("negative unique-new count in cell " + cell_name(k, i));
    if (count > base_.citations(k, i))
        throw std::invalid_argument("unique-new count " + std::to_string(count) + " exceeds citations " +
                                    std::to_string(base_.citations(k, i)) + " in cell " + cell_name(k, i));
    cells_[index(k, i)] = count;
}

// -------------------------------------------------------------------------
//     Builders
// -------------------------------------------------------------------------

MatrixBuild build_pc_matrix(std::span<const CitationEvent> events, const PublicationLedger& ledger,
                            YearRange pub_years, YearRange cite_years) {
    MatrixBuild out{PubCitMatrix(pub_years, cite_years, ledger), 0};
    for (const auto& e : events) {
        if (out.matrix.in_range(e.citing_year, e.cited_pub_year))
            out.matrix.add_citation(e.citing_year, e.cited_pub_year);
        else
            ++out.clipped;
    }
    return out;
}

AugmentedMatrix augment_synchronous(const PubCitMatrix& m, std::span<const CitationEvent> events) {
    check_consistent(m, events);
    // Per citation year: journal -> newest publication year it cites in that year.
    const auto& rows = m.cite_years();
    std::vector<std::unordered_map<std::uint32_t, Year>> newest(rows.size());
    for (const auto& e : events) {
        if (!m.in_range(e.citing_year, e.cited_pub_year) || e.citing_year < e.cited_pub_year) continue;
        auto& row = newest[static_cast<std::size_t>(e.citing_year - rows.first)];
        auto [it, inserted] = row.try_emplace(e.citing_journal.index, e.cited_pub_year);
        if (!inserted && it->second < e.cited_pub_year) it->second = e.cited_pub_year;
    }

    AugmentedMatrix out(AugmentVariant::synchronous, m);
    std::vector<std::int64_t> counts(m.pub_years().size());
    for (Year k : rows.years()) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& [journal, year] : newest[static_cast<std::size_t>(k - rows.first)])
            ++counts[static_cast<std::size_t>(year - m.pub_years().first)];
        for (Year i : m.pub_years().years())
            out.set_unique_new(k, i, counts[static_cast<std::size_t>(i - m.pub_years().first)]);
    }
    return out;
}

AugmentedMatrix augment_diachronous(const PubCitMatrix& m, std::span<const CitationEvent> events) {
    check_consistent(m, events);
    // Per publication year: journal -> earliest citation year citing it.
    const auto& cols = m.pub_years();
    std::vector<std::unordered_map<std::uint32_t, Year>> earliest(cols.size());
    for (const auto& e : events) {
        if (!m.in_range(e.citing_year, e.cited_pub_year) || e.citing_year < e.cited_pub_year) continue;
        auto& col = earliest[static_cast<std::size_t>(e.cited_pub_year - cols.first)];
        auto [it, inserted] = col.try_emplace(e.citing_journal.index, e.citing_year);
        if (!inserted && it->second > e.citing_year) it->second = e.citing_year;
    }

    AugmentedMatrix out(AugmentVariant::diachronous, m);
    std::vector<std::int64_t> counts(m.cite_years().size());
    for (Year i : cols.years()) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& [journal, year] : earliest[static_cast<std::size_t>(i - cols.first)])
            ++counts[static_cast<std::size_t>(year - m.cite_years().first)];
        for (Year k : m.cite_years().years())
            out.set_unique_new(k, i, counts[static_cast<std::size_t>(k - m.cite_years().first)]);
    }
    return out;
}

std::size_t distinct_journals_block(std::span<const CitationEvent> events, YearRange pub_years,
                                    YearRange cite_years) {
    std::set<JournalRef> journals;
    for (const auto& e : events)
        if (pub_years.contains(e.cited_pub_year) && cite_years.contains(e.citing_year))
            journals.insert(e.citing_journal);
    return journals.size();
}

}  // namespace citemetrics
