#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citemetrics {

/// Malformed input file. Carries the 1-based line (0 if unknown) and the
/// offending column name.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, std::string column, const std::string& what)
        : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                             (column.empty() ? "" : " [" + column + "]") + ": " + what),
          source_(std::move(source)), line_(line), column_(std::move(column)) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::string column_;
};

/// Contradictory alias table or similar user configuration problem.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested indicator has no value on the given data (missing years, zero denominator).
class UndefinedMetric : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A matrix fixture document violates its schema or the matrix invariants.
class FixtureError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An event set does not agree with the matrix it is supposed to augment.
class InconsistentEvents : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class UndefinedCorrelation : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace citemetrics
