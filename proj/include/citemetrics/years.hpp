#pragma once

#include <cstddef>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>

namespace citemetrics {

using Year = int;

/// Closed, contiguous range of calendar years [first, last].
struct YearRange {
    Year first = 0;
    Year last = -1;

    constexpr YearRange() = default;
    constexpr YearRange(Year f, Year l) : first(f), last(l) {
        if (l < f) throw std::invalid_argument("empty year range");
    }
    static constexpr YearRange single(Year y) { return {y, y}; }

    constexpr bool contains(Year y) const noexcept { return y >= first && y <= last; }
    constexpr bool contains(const YearRange& r) const noexcept {
        return r.first >= first && r.last <= last;
    }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(last - first + 1); }
    constexpr auto years() const { return std::views::iota(first, last + 1); }

    friend constexpr bool operator==(const YearRange&, const YearRange&) = default;

    /// Accepts "2004:2010" or a single year "2004".
    static YearRange parse(std::string_view text);
    std::string to_string() const;
};

/// Strict four-digit calendar year; returns false on anything else.
bool parse_year(std::string_view text, Year& out);

}  // namespace citemetrics
