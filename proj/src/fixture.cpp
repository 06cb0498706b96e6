#include "citemetrics/fixture.hpp"

#include <fstream>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "citemetrics/errors.hpp"

namespace citemetrics {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kFields{"pub_years",  "cite_years",      "publications",
                                    "citations",  "unique_new_sync", "unique_new_diach"};

[[noreturn]] void fail(const std::string& source, const std::string& what) {
    throw FixtureError(source + ": " + what);
}

YearRange read_range(const json& doc, const char* field, const std::string& source) {
    if (!doc.contains(field)) fail(source, std::string("missing field '") + field + "'");
    const auto& v = doc.at(field);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        fail(source, std::string("'") + field + "' must be [first_year, last_year]");
    const auto first = v[0].get<Year>();
    const auto last = v[1].get<Year>();
    if (last < first) fail(source, std::string("'") + field + "' is empty");
    return {first, last};
}

using Triples = std::map<std::pair<Year, Year>, std::int64_t>;

Triples read_triples(const json& doc, const char* field, const PubCitMatrix& shape, const std::string& source) {
    Triples out;
    const auto& v = doc.at(field);
    if (!v.is_array()) fail(source, std::string("'") + field + "' must be a list of [k, i, count]");
    for (const auto& t : v) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
            !t[2].is_number_integer())
            fail(source, std::string("'") + field + "' entries must be [k, i, count], got " + t.dump());
        const auto k = t[0].get<Year>();
        const auto i = t[1].get<Year>();
        const auto n = t[2].get<std::int64_t>();
        if (!shape.in_range(k, i)) fail(source, std::string("'") + field + "' cell " + t.dump() + " outside matrix");
        if (n < 0) fail(source, std::string("'") + field + "' cell " + t.dump() + " is negative");
        if (!out.emplace(std::pair{k, i}, n).second)
            fail(source, std::string("'") + field + "' lists cell " + t.dump() + " twice");
    }
    return out;
}

std::optional<AugmentedMatrix> read_augmented(const json& doc, const char* field, AugmentVariant variant,
                                              const PubCitMatrix& m, const std::string& source) {
    if (!doc.contains(field)) return std::nullopt;
    AugmentedMatrix a(variant, m);
    for (const auto& [cell, n] : read_triples(doc, field, m, source)) {
        try {
            a.set_unique_new(cell.first, cell.second, n);
        } catch (const std::invalid_argument& e) {
            fail(source, std::string("'") + field + "': " + e.what());
        }
    }
    return a;
}

json triples(const PubCitMatrix& m, auto&& value_of) {
    json out = json::array();
    for (Year k : m.cite_years().years())
        for (Year i : m.pub_years().years()) out.push_back(json::array({k, i, value_of(k, i)}));
    return out;
}

}  // namespace

MatrixFixture read_fixture(std::istream& in, const std::string& source) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(source, 0, "", e.what());
    }
    if (!doc.is_object()) fail(source, "top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (!kFields.contains(key)) fail(source, "unknown field '" + key + "'");

    const auto pub_years = read_range(doc, "pub_years", source);
    const auto cite_years = read_range(doc, "cite_years", source);

    if (!doc.contains("publications") || !doc["publications"].is_object())
        fail(source, "'publications' must be an object mapping year to count");
    std::map<Year, std::int64_t> counts;
    for (const auto& [key, value] : doc["publications"].items()) {
        Year y = 0;
        if (!parse_year(key, y)) fail(source, "'publications' key '" + key + "' is not a year");
        if (!pub_years.contains(y)) fail(source, "'publications' year " + key + " outside pub_years");
        if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
            fail(source, "'publications' count for " + key + " must be a non-negative integer");
        counts[y] = value.get<std::int64_t>();
    }
    for (Year y : pub_years.years())
        if (!counts.contains(y)) fail(source, "'publications' has no count for " + std::to_string(y));

    PubCitMatrix m(pub_years, cite_years, PublicationLedger(std::move(counts)));
    if (!doc.contains("citations")) fail(source, "missing field 'citations'");
    for (const auto& [cell, n] : read_triples(doc, "citations", m, source)) m.set_citations(cell.first, cell.second, n);

    MatrixFixture out{m, std::nullopt, std::nullopt};
    out.synchronous = read_augmented(doc, "unique_new_sync", AugmentVariant::synchronous, m, source);
    out.diachronous = read_augmented(doc, "unique_new_diach", AugmentVariant::diachronous, m, source);
    return out;
}

MatrixFixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path.string());
    return read_fixture(in, path.string());
}

void write_fixture(std::ostream& out, const MatrixFixture& f) {
    const auto& m = f.matrix;
    json doc;
    doc["pub_years"] = {m.pub_years().first, m.pub_years().last};
    doc["cite_years"] = {m.cite_years().first, m.cite_years().last};
    json pubs = json::object();
    for (const auto& [year, n] : m.ledger().counts())
        if (m.pub_years().contains(year)) pubs[std::to_string(year)] = n;
    doc["publications"] = pubs;
    doc["citations"] = triples(m, [&](Year k, Year i) { return m.citations(k, i); });
    if (f.synchronous)
        doc["unique_new_sync"] = triples(m, [&](Year k, Year i) { return f.synchronous->unique_new(k, i); });
    if (f.diachronous)
        doc["unique_new_diach"] = triples(m, [&](Year k, Year i) { return f.diachronous->unique_new(k, i); });

    // One triple per line keeps fixtures diffable.
    out << "{\n";
    bool first_field = true;
    for (const auto& [key, value] : doc.items()) {
        out << (first_field ? "" : ",\n") << "  " << json(key).dump() << ": ";
        first_field = false;
        if (value.is_array() && !value.empty() && value[0].is_array()) {
            out << "[\n";
            for (std::size_t t = 0; t < value.size(); ++t)
                out << "    " << value[t].dump() << (t + 1 < value.size() ? ",\n" : "\n");
            out << "  ]";
        } else {
            out << value.dump();
        }
    }
    out << "\n}\n";
}

}  // namespace citemetrics
