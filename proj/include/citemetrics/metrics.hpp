#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/ingest.hpp"
#include "citemetrics/matrix.hpp"
#include "citemetrics/years.hpp"

namespace citemetrics {

enum class MetricKind { garfield_if, sync_if, diach_if, sync_jdf, diach_jdf, sync_rdf, diach_rdf, rowlands_jdf };

std::string_view to_string(MetricKind kind);
/// Throws std::invalid_argument for unknown names.
MetricKind parse_metric_kind(std::string_view name);

/// Window length in years, or "as large as the matrix allows".
class Window {
public:
    static constexpr Window max() { return Window(); }
    static Window years(int n);

    constexpr bool is_max() const noexcept { return length_ == 0; }
    constexpr int length() const noexcept { return length_; }
    std::string to_string() const { return is_max() ? "max" : std::to_string(length_); }
    /// "max" or a positive integer.
    static Window parse(std::string_view text);

    friend constexpr bool operator==(const Window&, const Window&) = default;

private:
    constexpr Window() = default;
    int length_ = 0;
};

struct Cell {
    Year citation_year;
    Year publication_year;
    friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

/// Exact indicator value. numerator/denominator are kept unreduced, the way
/// the terms were summed.
struct MetricValue {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;
    std::vector<Cell> effective_window;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    /// Rational equality, independent of reduction.
    bool same_ratio(const MetricValue& other) const noexcept {
        return numerator * other.denominator == other.numerator * denominator;
    }
};

struct MetricRequest {
    MetricKind kind = MetricKind::sync_if;
    Year anchor_year = 0;
    Window window = Window::max();
    int shift = 1;      // diach_if only
    bool clip = true;
    int pub_span = 1;   // rowlands_jdf: publication years anchor..anchor+pub_span-1
};

// Citations arrive in the same year Y from publication years Y-1..Y-n.
MetricValue garfield_if(const PubCitMatrix& m, Year year);
MetricValue sync_if(const PubCitMatrix& m, Year year, Window n, bool clip = true);
// Publication year Y cited in Y+s..Y+s+n-1.
MetricValue diach_if(const PubCitMatrix& m, Year year, Window n, int shift = 1, bool clip = true);

// Diffusion factors read unique-new counts. Passing the wrong augmented
// variant throws std::invalid_argument.
MetricValue sync_jdf(const AugmentedMatrix& a, Year year, Window n, bool clip = true);
MetricValue diach_jdf(const AugmentedMatrix& a, Year year, Window n, bool clip = true);
MetricValue sync_rdf(const AugmentedMatrix& a, Year year, Window n, bool clip = true);
MetricValue diach_rdf(const AugmentedMatrix& a, Year year, Window n, bool clip = true);

/// Citing journals per 100 citations over a publication x citation block.
/// Distinct journals come from the events: a 2-D block cannot be recovered
/// from either augmented scan.
MetricValue rowlands_jdf(std::span<const CitationEvent> events, const PubCitMatrix& m, YearRange pub_window,
                         YearRange cite_window);

/// Inputs for evaluate(); the augmented matrices and events are only needed by
/// the kinds that read them.
struct MetricSources {
    const PubCitMatrix* matrix = nullptr;
    const AugmentedMatrix* synchronous = nullptr;
    const AugmentedMatrix* diachronous = nullptr;
    const std::vector<CitationEvent>* events = nullptr;
};

/// Dispatches on request.kind. Missing sources throw std::invalid_argument.
MetricValue evaluate(const MetricRequest& request, const MetricSources& sources);

}  // namespace citemetrics
