#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "citemetrics/matrix.hpp"

namespace citemetrics {

/// A publication-citation matrix with optional augmented counts, as stored in
/// a matrix fixture document (JSON):
///
///   { "pub_years": [2004, 2008], "cite_years": [2004, 2010],
///     "publications": {"2004": 139, ...},
///     "citations": [[k, i, count], ...],
///     "unique_new_sync": [[k, i, count], ...],     (optional)
///     "unique_new_diach": [[k, i, count], ...] }   (optional)
///
/// Cells not listed are zero. Unknown fields are rejected.
struct MatrixFixture {
    PubCitMatrix matrix;
    std::optional<AugmentedMatrix> synchronous;
    std::optional<AugmentedMatrix> diachronous;
};

/// JSON syntax errors throw ParseError; schema and invariant violations throw
/// FixtureError.
MatrixFixture read_fixture(std::istream& in, const std::string& source = "fixture");
MatrixFixture load_fixture(const std::filesystem::path& path);

void write_fixture(std::ostream& out, const MatrixFixture& fixture);

}  // namespace citemetrics
