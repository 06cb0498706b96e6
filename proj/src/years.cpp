#include "citemetrics/years.hpp"

#include <charconv>

namespace citemetrics {

bool parse_year(std::string_view text, Year& out) {
    if (text.size() != 4) return false;
    for (char c : text)
        if (c < '0' || c > '9') return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

YearRange YearRange::parse(std::string_view text) {
    Year a = 0;
    Year b = 0;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        if (!parse_year(text, a)) throw std::invalid_argument("bad year: " + std::string(text));
        return single(a);
    }
    if (!parse_year(text.substr(0, colon), a) || !parse_year(text.substr(colon + 1), b))
        throw std::invalid_argument("bad year range: " + std::string(text));
    return {a, b};
}

std::string YearRange::to_string() const {
    return first == last ? std::to_string(first) : std::to_string(first) + ":" + std::to_string(last);
}

}  // namespace citemetrics
