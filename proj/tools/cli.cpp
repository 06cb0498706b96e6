#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "citemetrics/errors.hpp"
#include "citemetrics/fixture.hpp"
#include "citemetrics/metrics.hpp"
#include "citemetrics/pipeline.hpp"
#include "citemetrics/report.hpp"

namespace citemetrics::cli {

namespace {

struct Options {
    std::string matrix;
    std::string pubs;
    std::string cites;
    std::string aliases;
    std::string out;
    std::string pub_years;
    std::string cite_years;
    std::string kind;
    int year = 0;
    std::string window = "max";
    int shift = 1;
    int pub_span = 1;
    bool no_clip = false;
    std::optional<int> precision;
    std::string format;
};

std::ifstream open_input(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open ") + what + " file '" + path + "'");
    return in;
}

IngestResult ingest_files(const Options& o) {
    auto pubs = open_input(o.pubs, "publications");
    auto cites = open_input(o.cites, "citations");
    std::optional<std::ifstream> aliases;
    if (!o.aliases.empty()) aliases = open_input(o.aliases, "alias table");
    IngestOptions opts;
    if (!o.pub_years.empty()) opts.pub_years = YearRange::parse(o.pub_years);
    if (!o.cite_years.empty()) opts.cite_years = YearRange::parse(o.cite_years);
    try {
        return run_ingest(pubs, cites, aliases ? &*aliases : nullptr, opts);
    } catch (const ParseError& e) {
        // Re-anchor the error on the actual file path.
        const auto& path = e.source() == "publications" ? o.pubs : e.source() == "citations" ? o.cites : o.aliases;
        throw ParseError(path, e.line(), e.column(), std::string(e.what()).substr(e.source().size() + 1));
    }
}

int cmd_ingest(const Options& o, std::ostream& out, std::ostream& err) {
    auto result = ingest_files(o);
    if (o.out.empty()) {
        write_fixture(out, result.fixture);
    } else {
        std::ofstream file(o.out);
        if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
        write_fixture(file, result.fixture);
        std::ofstream warnings(o.out + ".warnings.txt");
        write_warnings(warnings, result.warnings);
    }
    write_warnings(err, result.warnings);
    return kOk;
}

int cmd_metric(const Options& o, std::ostream& out) {
    MetricRequest req;
    req.kind = parse_metric_kind(o.kind);
    req.anchor_year = o.year;
    req.window = Window::parse(o.window);
    req.shift = o.shift;
    req.clip = !o.no_clip;
    req.pub_span = o.pub_span;

    std::optional<MatrixFixture> fixture;
    std::optional<IngestResult> ingested;
    if (!o.matrix.empty()) {
        fixture = load_fixture(o.matrix);
    } else if (!o.pubs.empty() && !o.cites.empty()) {
        ingested = ingest_files(o);
    } else {
        throw CLI::ValidationError("metric", "give --matrix, or --pubs and --cites");
    }
    const auto& f = fixture ? *fixture : ingested->fixture;
    MetricSources sources;
    sources.matrix = &f.matrix;
    sources.synchronous = f.synchronous ? &*f.synchronous : nullptr;
    sources.diachronous = f.diachronous ? &*f.diachronous : nullptr;
    sources.events = ingested ? &ingested->events : nullptr;
    if (req.kind == MetricKind::rowlands_jdf && !ingested)
        throw CLI::ValidationError("metric", "rowlands_jdf needs raw citations: use --pubs and --cites");
    if ((req.kind == MetricKind::sync_jdf || req.kind == MetricKind::sync_rdf) && !sources.synchronous)
        throw FixtureError("fixture has no unique_new_sync block; run 'ingest' or supply an augmented fixture");
    if ((req.kind == MetricKind::diach_jdf || req.kind == MetricKind::diach_rdf) && !sources.diachronous)
        throw FixtureError("fixture has no unique_new_diach block; run 'ingest' or supply an augmented fixture");

    const auto value = evaluate(req, sources);
    const int precision = o.precision.value_or(2);
    if (o.format == "structured" || o.format == "json") {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& c : value.effective_window) cells.push_back({c.citation_year, c.publication_year});
        nlohmann::ordered_json doc{
            {"kind", to_string(req.kind)},
            {"year", req.anchor_year},
            {"window", req.window.to_string()},
            {"rendered", render(value, precision)},
            {"numerator", value.numerator},
            {"denominator", value.denominator},
            {"value", value.value()},
            {"cells", cells},
        };
        if (req.kind == MetricKind::diach_if) doc["shift"] = req.shift;
        out << doc.dump() << '\n';
    } else if (o.format.empty() || o.format == "text") {
        out << render(value, precision) << ' ' << value.numerator << '/' << value.denominator << '\n';
    } else {
        throw CLI::ValidationError("--format", "metric output is 'text' or 'structured'");
    }
    return kOk;
}

int cmd_report(const Options& o, std::ostream& out) {
    const auto format = parse_report_format(o.format.empty() ? "table" : o.format);
    std::optional<IngestResult> ingested;
    std::optional<MatrixFixture> fixture;
    if (!o.matrix.empty()) {
        fixture = load_fixture(o.matrix);
    } else if (!o.pubs.empty() && !o.cites.empty()) {
        ingested = ingest_files(o);
    } else {
        throw CLI::ValidationError("report", "give --matrix, or --pubs and --cites");
    }
    write_report(out, build_report(fixture ? *fixture : ingested->fixture), format, o.precision);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Impact factors and journal diffusion factors from publication-citation data", "citemetrics"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--pubs", o.pubs, "Publications CSV (year,count or article_id,year)");
        sub->add_option("--cites", o.cites, "Citations CSV");
        sub->add_option("--aliases", o.aliases, "Journal alias table CSV (raw,canonical)");
        sub->add_option("--pub-years", o.pub_years, "Publication years, e.g. 2004:2008");
        sub->add_option("--cite-years", o.cite_years, "Citation years, e.g. 2004:2010");
    };

    auto* ingest = app.add_subcommand("ingest", "Build a matrix fixture from raw publication and citation files");
    add_input(ingest);
    ingest->get_option("--pubs")->required();
    ingest->get_option("--cites")->required();
    ingest->add_option("--out", o.out, "Fixture output path (default: stdout)");

    auto* metric = app.add_subcommand("metric", "Compute a single indicator");
    metric->add_option("--matrix", o.matrix, "Matrix fixture (JSON)");
    add_input(metric);
    metric->add_option("--kind", o.kind,
                       "garfield_if | sync_if | diach_if | sync_jdf | diach_jdf | sync_rdf | diach_rdf | rowlands_jdf")
        ->required();
    metric->add_option("--year", o.year, "Anchor year")->required();
    metric->add_option("--window", o.window, "Window length in years, or 'max'")->capture_default_str();
    metric->add_option("--shift", o.shift, "Shift for diach_if")->capture_default_str()->check(CLI::NonNegativeNumber);
    metric->add_option("--pub-span", o.pub_span, "Publication years in the rowlands_jdf block")->capture_default_str()
        ->check(CLI::PositiveNumber);
    metric->add_flag("--no-clip", o.no_clip, "Treat windows crossing the data boundary as undefined");
    metric->add_option("--precision", o.precision, "Decimal places (default 2)")->check(CLI::Range(0, 12));
    metric->add_option("--format", o.format, "text | structured");

    auto* report = app.add_subcommand("report", "Yearly table of all indicators");
    report->add_option("--matrix", o.matrix, "Matrix fixture with unique-new blocks");
    add_input(report);
    report->add_option("--format", o.format, "table | csv | structured");
    report->add_option("--precision", o.precision, "Decimal places for every column")->check(CLI::Range(0, 12));

    try {
        app.parse(argc, argv);
        if (ingest->parsed()) return cmd_ingest(o, out, err);
        if (metric->parsed()) return cmd_metric(o, out);
        return cmd_report(o, out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Error& e) {
        app.exit(e, out, err);
        return kUsageOrParse;
    } catch (const UndefinedMetric& e) {
        err << "undefined metric: " << e.what() << '\n';
        return kUndefinedMetric;
    } catch (const FixtureError& e) {
        err << "invalid fixture: " << e.what() << '\n';
        return kFixtureInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrParse;
    }
}

}  // namespace citemetrics::cli
