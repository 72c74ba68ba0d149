#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "loxo/degrees.hpp"
#include "loxo/errors.hpp"
#include "loxo/fibration.hpp"
#include "loxo/isometry.hpp"
#include "loxo/json_io.hpp"
#include "loxo/lattice.hpp"
#include "loxo/rational_format.hpp"

namespace {

using loxo::Json;

constexpr int kExitOk = 0;
constexpr int kExitMathRejection = 2;
constexpr int kExitInputError = 3;

struct Options {
    std::string input = "-";
    std::string precision = "1e-20";
    int n = 2;
    long b2 = 0;  // 0 = use the rank of the supplied lattice
    bool text = false;
    bool timing = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw loxo::InputFormatError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_input(const std::string& path) {
    const std::string text = read_input(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw loxo::InputFormatError(std::string("input is not valid JSON: ") + e.what());
    }
}

mpq_class parse_precision(const std::string& s) {
    mpq_class p = loxo::parse_rational(s);
    if (p <= 0 || p >= 1)
        throw loxo::InputFormatError("precision must lie strictly between 0 and 1");
    return p;
}

struct LoadedIsometry {
    loxo::Isometry isometry;
    loxo::Classification classification;
    Json input_echo;
};

LoadedIsometry load_and_classify(const Options& opt, const mpq_class& precision) {
    Json doc = parse_input(opt.input);
    auto [lattice, matrix] = loxo::isometry_input_from_json(doc);
    Json echo{{"lattice", loxo::lattice_to_json(lattice)},
              {"matrix", loxo::matrix_to_json(matrix)}};
    loxo::Isometry iso = loxo::verify_isometry(std::move(lattice), std::move(matrix));
    loxo::Classification cls = loxo::classify(iso, precision);
    return {std::move(iso), std::move(cls), std::move(echo)};
}

Json report_skeleton(const char* command, const Options& opt, const mpq_class& precision) {
    Json report;
    report["schema"] = "v1";
    report["command"] = command;
    report["precision"] = opt.precision;
    (void)precision;
    return report;
}

void finish_report(Json& report, const std::vector<std::string>& warnings,
                   const std::chrono::steady_clock::time_point& started, const Options& opt) {
    report["warnings"] = warnings;
    if (opt.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing"] = Json{
            {"milliseconds",
             std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    } else {
        report["timing"] = nullptr;
    }
}

void print_text_value(std::ostream& os, const char* label, const Json& value_json) {
    os << "  " << label << " = " << value_json["decimal"].get<std::string>() << "\n";
}

void render_classification_text(std::ostream& os, const Json& c) {
    os << "kind: " << c["kind"].get<std::string>() << "\n";
    os << "char poly: " << c["char_poly"].get<std::string>() << "\n";
    if (!c["lambda1"].is_null()) print_text_value(os, "lambda1", c["lambda1"]);
    if (!c["finite_order"].is_null()) os << "  order = " << c["finite_order"] << "\n";
    if (!c["unipotence_exponent"].is_null())
        os << "  unipotence exponent = " << c["unipotence_exponent"] << "\n";
    os << "  growth: rate in [" << c["growth"]["exponential_rate"]["lo"].get<std::string>()
       << ", " << c["growth"]["exponential_rate"]["hi"].get<std::string>() << "], degree "
       << c["growth"]["polynomial_degree"] << "\n";
    for (const auto& w : c["structural_warnings"])
        os << "  warning: " << w.get<std::string>() << "\n";
}

void emit(const Json& report, const Options& opt) {
    if (!opt.text) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    render_classification_text(std::cout, report["classification"]);
    if (report.contains("degree_sequence")) {
        const Json& ds = report["degree_sequence"];
        std::cout << "degrees (n = " << ds["n"] << "):\n";
        int p = 0;
        for (const auto& v : ds["values"])
            std::cout << "  lambda_" << p++ << " = " << v["decimal"].get<std::string>()
                      << "\n";
    }
    if (report.contains("certificate")) {
        const Json& cert = report["certificate"];
        std::cout << "certificate:\n";
        std::cout << "  primitive: " << cert["primitive"].get<std::string>() << "\n";
        if (!cert["max_periodic_hypersurfaces"].is_null())
            std::cout << "  max periodic hypersurfaces: "
                      << cert["max_periodic_hypersurfaces"] << "\n";
        std::cout << "  dense generic orbit: " << cert["dense_generic_orbit"].dump() << "\n";
        std::cout << "  base dim lower bound: " << cert["base_dim_lower_bound"] << "\n";
        for (const auto& note : cert["notes"])
            std::cout << "  note: " << note.get<std::string>() << "\n";
    }
    for (const auto& w : report["warnings"])
        std::cout << "warning: " << w.get<std::string>() << "\n";
}

int cmd_classify(const Options& opt) {
    const auto started = std::chrono::steady_clock::now();
    const mpq_class precision = parse_precision(opt.precision);
    LoadedIsometry loaded = load_and_classify(opt, precision);

    Json report = report_skeleton("classify", opt, precision);
    report["input"] = loaded.input_echo;
    report["classification"] = loxo::classification_to_json(loaded.classification, precision);
    finish_report(report, loaded.classification.structural_warnings, started, opt);
    emit(report, opt);
    return kExitOk;
}

int cmd_degrees(const Options& opt) {
    const auto started = std::chrono::steady_clock::now();
    const mpq_class precision = parse_precision(opt.precision);
    LoadedIsometry loaded = load_and_classify(opt, precision);

    std::vector<std::string> warnings = loaded.classification.structural_warnings;
    if (loaded.classification.kind != loxo::IsometryKind::Loxodromic)
        warnings.push_back(
            "non-loxodromic action: every eigenvalue has modulus 1 and iterates grow at "
            "most polynomially, so all dynamical degrees are 1");

    loxo::DegreeSequence seq = loxo::degree_sequence(loaded.classification, opt.n);
    loxo::LogConcavityReport lc = loxo::check_log_concavity(seq, precision);

    Json report = report_skeleton("degrees", opt, precision);
    report["input"] = loaded.input_echo;
    report["n"] = opt.n;
    report["classification"] = loxo::classification_to_json(loaded.classification, precision);
    report["degree_sequence"] = loxo::degree_sequence_to_json(seq, precision);
    Json lc_json;
    switch (lc.status) {
        case loxo::Concavity::Concave: lc_json["status"] = "concave"; break;
        case loxo::Concavity::Violation: lc_json["status"] = "violation"; break;
        case loxo::Concavity::Indeterminate: lc_json["status"] = "indeterminate"; break;
    }
    lc_json["index"] = lc.index >= 0 ? Json(lc.index) : Json(nullptr);
    report["log_concavity"] = std::move(lc_json);
    finish_report(report, warnings, started, opt);
    emit(report, opt);
    return kExitOk;
}

int cmd_certify(const Options& opt) {
    const auto started = std::chrono::steady_clock::now();
    const mpq_class precision = parse_precision(opt.precision);
    LoadedIsometry loaded = load_and_classify(opt, precision);

    const long b2 = opt.b2 > 0 ? opt.b2 : loaded.isometry.lattice().rank();
    std::vector<std::string> warnings = loaded.classification.structural_warnings;

    loxo::DegreeSequence seq = loxo::degree_sequence(loaded.classification, opt.n);
    loxo::Certificate cert = loxo::primitivity_certificate(loaded.classification, opt.n, b2);
    loxo::BaseDimBound bound = loxo::base_dim_bound(seq, precision);

    Json report = report_skeleton("certify", opt, precision);
    report["input"] = loaded.input_echo;
    report["n"] = opt.n;
    report["b2"] = b2;
    report["classification"] = loxo::classification_to_json(loaded.classification, precision);
    report["degree_sequence"] = loxo::degree_sequence_to_json(seq, precision);
    report["certificate"] = loxo::certificate_to_json(cert);
    report["base_dim_analysis"] = Json{{"bound", bound.bound},
                                       {"plateau", bound.plateau},
                                       {"indeterminate", bound.indeterminate}};
    Json feas = Json::array();
    for (int base_dim = 1; base_dim < 2 * opt.n; ++base_dim)
        feas.push_back(loxo::feasibility_to_json(
            loxo::general_type_feasibility(seq, base_dim, precision), base_dim, precision));
    report["feasibility"] = std::move(feas);
    report["feasibility_note"] =
        "feasibility is a numerical verdict on the Dinh-Nguyen-Truong product-formula "
        "constraints; it does not assert that a geometric fibration realizes the witness";
    finish_report(report, warnings, started, opt);
    emit(report, opt);
    return kExitOk;
}

int cmd_catalog(bool list, const std::string& name, std::optional<long> n) {
    if (list) {
        Json entries = Json::array();
        for (const auto& [entry_name, description] : loxo::catalog_entries())
            entries.push_back(Json{{"name", entry_name}, {"description", description}});
        std::cout << Json{{"entries", std::move(entries)}}.dump(2) << "\n";
        return kExitOk;
    }
    if (name.empty())
        throw loxo::InputFormatError("catalog needs --list or --name <lattice>");
    try {
        std::cout << loxo::lattice_to_json(loxo::catalog(name, n)).dump(2) << "\n";
    } catch (const loxo::PreconditionError& e) {
        throw loxo::InputFormatError(e.what());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact trichotomy, dynamical degrees, and primitivity certificates for "
                 "integral lattice isometries"};
    app.require_subcommand(1);

    Options opt;
    bool catalog_list = false;
    std::string catalog_name;
    std::optional<long> catalog_n;

    const auto add_io_options = [&opt](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input JSON file, or - for stdin");
        cmd->add_option("--precision", opt.precision,
                        "certified enclosure width as a rational or decimal (default 1e-20)");
        auto* text = cmd->add_flag("--text", opt.text, "plain-text table output");
        cmd->add_flag("--json", "structured JSON output (default)")->excludes(text);
        cmd->add_flag("--timing", opt.timing, "include wall-clock timing in the report");
    };

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "loxodromic / parabolic / elliptic trichotomy");
    add_io_options(classify_cmd);

    CLI::App* degrees_cmd =
        app.add_subcommand("degrees", "dynamical-degree sequence of the induced action");
    add_io_options(degrees_cmd);
    degrees_cmd->add_option("--n", opt.n, "half-dimension: the action lives on a 2n-fold")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* certify_cmd = app.add_subcommand(
        "certify", "primitivity certificate and invariant-fibration feasibility");
    add_io_options(certify_cmd);
    certify_cmd->add_option("--n", opt.n, "half-dimension: the action lives on a 2n-fold")
        ->required()
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--b2", opt.b2, "second Betti number (default: lattice rank)")
        ->check(CLI::PositiveNumber);

    CLI::App* catalog_cmd =
        app.add_subcommand("catalog", "built-in Beauville-Bogomolov-type lattices");
    catalog_cmd->add_flag("--list", catalog_list, "list catalog entries");
    catalog_cmd->add_option("--name", catalog_name, "emit one lattice as JSON");
    catalog_cmd->add_option("--n", [&catalog_n](const std::vector<std::string>& vals) {
        catalog_n = std::stol(vals.at(0));
        return true;
    }, "parameter for the K3n / Kummer families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (degrees_cmd->parsed()) return cmd_degrees(opt);
        if (certify_cmd->parsed()) return cmd_certify(opt);
        return cmd_catalog(catalog_list, catalog_name, catalog_n);
    } catch (const loxo::NotAnIsometryError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitMathRejection;
    } catch (const loxo::DegenerateFormError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitMathRejection;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
