// dgsk: command-line front end for the DG Sklyanin toolkit.
//
// Subcommands: validate, classify, check-diff, cy, iso, cohomology, sweep.
// Every run prints one JSON document (schema-versioned, exact string-encoded
// rationals, sorted keys) on standard output. Exit codes: 0 success, 1 domain
// error (forbidden parameters, invalid differential), 2 usage error. A single
// --config file can supply any value; explicit flags override it.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dgsk/calabi_yau.hpp"
#include "dgsk/classifier.hpp"
#include "dgsk/cohomology.hpp"
#include "dgsk/json_io.hpp"
#include "dgsk/sweep.hpp"

namespace {

using dgsk::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All option values, shared across subcommands (only one runs per process).
struct Options {
    std::string config_path;
    std::string a, b, c, params_csv;
    std::string diag_inline, matrix_inline, matrix_file;
    std::string m1_path, m2_path;
    std::int64_t max_degree = 3;
    std::int64_t samples = 0;
    std::int64_t seed = 0;
    std::string stratum;
    std::string output_path;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open file: " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("invalid JSON in " + path + ": " + e.what());
    }
}

Json parse_inline_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON for ") + what + ": " + e.what());
    }
}

/// Fills option values from the config document for flags the user left
/// unset on the command line.
class Overlay {
public:
    Overlay(CLI::App* sub, const Json& cfg) : sub_(sub), cfg_(cfg) {}

    void str(const char* key, std::string& target) const {
        if (!applies(key)) {
            return;
        }
        const Json& v = cfg_.at(key);
        target = v.is_string() ? v.get<std::string>() : v.dump();
    }

    void num(const char* key, std::int64_t& target) const {
        if (!applies(key)) {
            return;
        }
        const Json& v = cfg_.at(key);
        if (v.is_number_integer()) {
            target = v.get<std::int64_t>();
        } else if (v.is_string()) {
            target = std::stoll(v.get<std::string>());
        } else {
            throw UsageError(std::string("config value for '") + key + "' must be an integer");
        }
    }

private:
    bool applies(const char* key) const {
        if (!cfg_.contains(key)) {
            return false;
        }
        return sub_ == nullptr || sub_->count(std::string("--") + key) == 0;
    }

    CLI::App* sub_;
    const Json& cfg_;
};

dgsk::Rational parse_rational(const std::string& text, const char* what) {
    try {
        return dgsk::Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad rational for ") + what + ": " + e.what());
    }
}

/// Resolves (a, b, c) from --params or the individual flags; validates them.
dgsk::ParamValidation resolve_validation(const Options& opt) {
    dgsk::Rational a, b, c;
    if (!opt.params_csv.empty()) {
        std::stringstream ss(opt.params_csv);
        std::string part;
        std::vector<dgsk::Rational> parts;
        while (std::getline(ss, part, ',')) {
            parts.push_back(parse_rational(part, "--params"));
        }
        if (parts.size() != 3) {
            throw UsageError("--params expects exactly three comma-separated rationals");
        }
        a = parts[0];
        b = parts[1];
        c = parts[2];
    } else if (!opt.a.empty() && !opt.b.empty() && !opt.c.empty()) {
        a = parse_rational(opt.a, "--a");
        b = parse_rational(opt.b, "--b");
        c = parse_rational(opt.c, "--c");
    } else {
        throw UsageError("parameters required: --params a,b,c or --a/--b/--c");
    }
    return dgsk::validate(a, b, c);
}

dgsk::SklyaninParams resolve_params(const Options& opt) {
    dgsk::ParamValidation v = resolve_validation(opt);
    if (!v.ok()) {
        throw DomainError(dgsk::param_error_message(*v.error));
    }
    return *v.params;
}

dgsk::DifferentialSpec resolve_spec(const Options& opt) {
    if (!opt.diag_inline.empty()) {
        const Json j = parse_inline_json(opt.diag_inline, "--diag");
        if (!j.is_array()) {
            throw UsageError("--diag expects a 3x3 JSON array");
        }
        return dgsk::spec_from_json(j);
    }
    if (!opt.matrix_inline.empty()) {
        return dgsk::spec_from_json(parse_inline_json(opt.matrix_inline, "--matrix"));
    }
    if (!opt.matrix_file.empty()) {
        return dgsk::spec_from_json(read_json_file(opt.matrix_file));
    }
    throw UsageError("a differential is required: --diag, --matrix, or --matrix-file");
}

dgsk::Matrix read_plain_matrix(const std::string& path, const char* what) {
    if (path.empty()) {
        throw UsageError(std::string(what) + " is required");
    }
    const dgsk::Matrix m = dgsk::matrix_from_json(read_json_file(path));
    if (m.rows() != 3 || m.cols() != 3) {
        throw UsageError(std::string(what) + " must contain a 3x3 matrix");
    }
    return m;
}

struct Outcome {
    Json payload;
    int exit_code = 0;
};

Outcome run_validate(const Options& opt) {
    const dgsk::ParamValidation v = resolve_validation(opt);
    return {dgsk::json_validation(v), v.ok() ? 0 : 1};
}

Outcome run_classify(const Options& opt) {
    const dgsk::SklyaninParams p = resolve_params(opt);
    return {dgsk::json_classification(dgsk::classify(p)), 0};
}

Outcome run_check_diff(const Options& opt) {
    const dgsk::SklyaninParams p = resolve_params(opt);
    const dgsk::DifferentialSpec d = resolve_spec(opt);
    const dgsk::ValidityReport report = dgsk::check_differential(d, p);
    Json j = dgsk::json_validity(report);
    if (!report.valid) {
        j["error"] = "invalid differential";
    }
    return {std::move(j), report.valid ? 0 : 1};
}

Outcome run_cy(const Options& opt) {
    const dgsk::SklyaninParams p = resolve_params(opt);
    const dgsk::DifferentialSpec d = resolve_spec(opt);
    try {
        return {dgsk::json_cy(dgsk::cy_verdict(p, d)), 0};
    } catch (const std::invalid_argument& e) {
        throw DomainError(e.what());  // "not a differential"
    }
}

Outcome run_iso(const Options& opt) {
    const dgsk::Matrix m1 = read_plain_matrix(opt.m1_path, "--m1");
    const dgsk::Matrix m2 = read_plain_matrix(opt.m2_path, "--m2");
    return {dgsk::json_qpl(dgsk::qpl_equivalent(m1, m2)), 0};
}

Outcome run_cohomology(const Options& opt) {
    if (opt.max_degree < 0) {
        throw UsageError("--max-degree must be nonnegative");
    }
    const dgsk::SklyaninParams p = resolve_params(opt);
    const dgsk::DifferentialSpec d = resolve_spec(opt);
    const auto D = static_cast<std::size_t>(opt.max_degree);
    const dgsk::QuadraticAlgebraModel alg(p, std::max<std::size_t>(3, D + 1));
    try {
        const dgsk::CohomologyReport report = dgsk::truncated_cohomology(alg, d, D);
        return {dgsk::json_cohomology(report, alg), 0};
    } catch (const std::invalid_argument& e) {
        throw DomainError(e.what());
    }
}

Outcome run_sweep(const Options& opt) {
    if (opt.samples <= 0) {
        throw UsageError("--samples must be a positive count");
    }
    std::optional<dgsk::CaseTag> stratum;
    if (!opt.stratum.empty()) {
        stratum = dgsk::case_tag_from_name(opt.stratum);
        if (!stratum) {
            throw UsageError("unknown stratum '" + opt.stratum + "'");
        }
    }
    const auto count = static_cast<std::size_t>(opt.samples);
    const auto seed = static_cast<std::uint64_t>(opt.seed);
    const dgsk::SweepReport report =
        stratum ? dgsk::sweep(count, seed, *stratum) : dgsk::sweep(count, seed);
    Json j = dgsk::json_sweep(report);
    if (!opt.output_path.empty()) {
        std::ofstream out(opt.output_path);
        if (!out) {
            throw UsageError("cannot write to " + opt.output_path);
        }
        out << dgsk::versioned(j).dump(2) << '\n';
    }
    return {std::move(j), 0};
}

void add_param_options(CLI::App* sub, Options& opt) {
    sub->add_option("--a", opt.a, "parameter a, as an exact rational like 2 or -1/3");
    sub->add_option("--b", opt.b, "parameter b");
    sub->add_option("--c", opt.c, "parameter c");
    sub->add_option("--params", opt.params_csv, "all three parameters, comma separated: a,b,c");
}

void add_matrix_options(CLI::App* sub, Options& opt) {
    sub->add_option("--diag", opt.diag_inline,
                    "inline 3x3 JSON array M for the diagonal form d(x,y,z)^T = M(x^2,y^2,z^2)^T");
    sub->add_option("--matrix", opt.matrix_inline,
                    "inline JSON differential: {\"Mx\":..,\"My\":..,\"Mz\":..}, {\"diag\":..} or a bare array");
    sub->add_option("--matrix-file", opt.matrix_file, "file holding the same JSON forms");
}

int emit(const Outcome& outcome) {
    std::cout << dgsk::versioned(outcome.payload).dump(2) << '\n';
    return outcome.exit_code;
}

int emit_error(const std::string& message, int code) {
    Json j;
    j["error"] = message;
    std::cout << dgsk::versioned(std::move(j)).dump(2) << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification, Calabi-Yau verdicts and cohomology for DG Sklyanin algebras"};
    app.require_subcommand(0, 1);

    Options opt;
    app.add_option("--config", opt.config_path,
                   "JSON config supplying any option (flags override; may set \"command\")");

    CLI::App* validate = app.add_subcommand("validate", "screen parameters against the forbidden set");
    add_param_options(validate, opt);

    CLI::App* classify = app.add_subcommand("classify", "classify all differentials at a parameter point");
    add_param_options(classify, opt);

    CLI::App* check = app.add_subcommand("check-diff", "residuals of the differential conditions");
    add_param_options(check, opt);
    add_matrix_options(check, opt);

    CLI::App* cy = app.add_subcommand("cy", "Calabi-Yau verdict for a valid differential");
    add_param_options(cy, opt);
    add_matrix_options(cy, opt);

    CLI::App* iso = app.add_subcommand("iso", "quasi-permutation equivalence of two 3x3 matrices");
    iso->add_option("--m1", opt.m1_path, "file with the first matrix (3x3 JSON array)");
    iso->add_option("--m2", opt.m2_path, "file with the second matrix");

    CLI::App* coh = app.add_subcommand("cohomology", "truncated cohomology dimensions and representatives");
    add_param_options(coh, opt);
    add_matrix_options(coh, opt);
    coh->add_option("--max-degree", opt.max_degree, "top cohomological degree (default 3)");

    CLI::App* sweep = app.add_subcommand("sweep", "stratified random classification sweep");
    sweep->add_option("--samples", opt.samples, "number of parameter points");
    sweep->add_option("--seed", opt.seed, "random seed (default 0)");
    sweep->add_option("--stratum", opt.stratum, "restrict to one case tag");
    sweep->add_option("--output", opt.output_path, "also write the report to this file");

    // Let --config appear after the subcommand name as well.
    for (CLI::App* sub : {validate, classify, check, cy, iso, coh, sweep}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error(e.what(), 2);
    }

    try {
        Json config = Json::object();
        if (!opt.config_path.empty()) {
            config = read_json_file(opt.config_path);
            if (!config.is_object()) {
                throw UsageError("config must be a JSON object");
            }
        }

        CLI::App* chosen = nullptr;
        for (CLI::App* sub : {validate, classify, check, cy, iso, coh, sweep}) {
            if (sub->parsed()) {
                chosen = sub;
                break;
            }
        }
        std::string command = chosen ? chosen->get_name() : std::string();
        if (command.empty()) {
            if (config.contains("command") && config.at("command").is_string()) {
                command = config.at("command").get<std::string>();
            } else {
                throw UsageError("no command given (pass a subcommand or \"command\" in --config)");
            }
        }

        const Overlay overlay(chosen, config);
        overlay.str("a", opt.a);
        overlay.str("b", opt.b);
        overlay.str("c", opt.c);
        overlay.str("params", opt.params_csv);
        overlay.str("diag", opt.diag_inline);
        overlay.str("matrix", opt.matrix_inline);
        overlay.str("matrix-file", opt.matrix_file);
        overlay.str("m1", opt.m1_path);
        overlay.str("m2", opt.m2_path);
        overlay.num("max-degree", opt.max_degree);
        overlay.num("samples", opt.samples);
        overlay.num("seed", opt.seed);
        overlay.str("stratum", opt.stratum);
        overlay.str("output", opt.output_path);

        if (command == "validate") {
            return emit(run_validate(opt));
        } else if (command == "classify") {
            return emit(run_classify(opt));
        } else if (command == "check-diff") {
            return emit(run_check_diff(opt));
        } else if (command == "cy") {
            return emit(run_cy(opt));
        } else if (command == "iso") {
            return emit(run_iso(opt));
        } else if (command == "cohomology") {
            return emit(run_cohomology(opt));
        } else if (command == "sweep") {
            return emit(run_sweep(opt));
        }
        throw UsageError("unknown command '" + command + "'");
    } catch (const UsageError& e) {
        return emit_error(e.what(), 2);
    } catch (const DomainError& e) {
        return emit_error(e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error(std::string("internal error: ") + e.what(), 1);
    }
}
