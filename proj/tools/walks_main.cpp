// Command-line front end: count, sequence, enumerate, validate, dyck, verify, render.
//
// Exit codes: 0 success, 1 input error or guard refusal, 2 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "walks/bijections.hpp"
#include "walks/catalog.hpp"
#include "walks/closedforms.hpp"
#include "walks/oracle.hpp"
#include "walks/render.hpp"

namespace {

using namespace walks;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kMismatch = 2;

oracle::Guards guards_from(std::uint64_t max_brute) {
    oracle::Guards g;
    g.max_candidates = max_brute;
    if (const char* env = std::getenv("WALKS_MAX_STATES")) {
        const std::string s = env;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || v == 0 || s.front() == '-') {
            throw InputError("WALKS_MAX_STATES must be a positive integer, got '" + s + "'");
        }
        g.max_states = v;
    }
    return g;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw InputError("cannot open output file " + out_path);
    }
    f << text;
}

int run_count(const std::string& type_text, int n, const std::string& method, const oracle::Guards& guards) {
    const auto type = WalkType::parse(type_text);
    Natural result;
    if (method == "dp") {
        result = oracle::count_dp(type, n, guards);
    } else if (method == "formula") {
        result = closedforms::general_count(type, n);
    } else {
        result = Natural(oracle::enumerate(type, n, guards).size());
    }
    std::cout << result << '\n';
    return kOk;
}

int run_sequence(const std::string& type_text, int max_n, const std::string& format, const oracle::Guards& guards) {
    const auto type = WalkType::parse(type_text);
    const auto terms = oracle::sequence_dp(type, max_n, guards);
    std::string out;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        if (format == "plain") {
            out += terms[n].to_string() + '\n';
        } else if (format == "bfile") {
            out += std::to_string(n) + ' ' + terms[n].to_string() + '\n';
        } else {
            nlohmann::ordered_json j;
            j["type"] = type.letters();
            j["n"] = n;
            j["count"] = terms[n].to_string();
            out += j.dump() + '\n';
        }
    }
    std::cout << out;
    return kOk;
}

int run_enumerate(const std::string& type_text, int n, const oracle::Guards& guards) {
    const auto type = WalkType::parse(type_text);
    std::string out;
    for (const auto& walk : oracle::enumerate(type, n, guards)) {
        out += format_walk(walk, type) + '\n';
    }
    std::cout << out;
    return kOk;
}

int run_validate(const std::string& type_text, const std::string& walk_text) {
    const auto type = WalkType::parse(type_text);
    const auto walk = parse_walk(walk_text, type);
    const auto violation = validate(walk, type);
    if (!violation) {
        std::cout << "valid\n";
        return kOk;
    }
    // Echo the walk with one character per token, marking the offending one.
    std::string echo;
    std::size_t marker = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i == violation->step_index) {
            marker = echo.size();
        }
        echo += format_walk(Walk{{walk.steps[i]}}, type);
    }
    if (violation->step_index >= walk.size()) {
        marker = echo.size();
    }
    std::cout << "invalid at step " << violation->step_index << ": " << violation->reason() << '\n'
              << echo << '\n'
              << std::string(marker, ' ') << "^\n";
    return kInputError;
}

int run_dyck(const std::string& mode, const std::string& text) {
    const auto& type = bijections::touchard_type();
    if (mode == "encode") {
        std::cout << bijections::touchard_to_dyck(parse_walk(text, type)).to_string() << '\n';
    } else {
        std::cout << format_walk(bijections::dyck_to_touchard(bijections::DyckPath::parse(text)), type) << '\n';
    }
    return kOk;
}

int run_verify(bool table3, const std::string& type_text, int n_max, const oracle::Guards& guards) {
    std::vector<catalog::VerificationReport> reports;
    if (table3) {
        reports = catalog::verify_table3(n_max, guards);
    } else {
        reports.push_back(catalog::verify(WalkType::parse(type_text), n_max, guards));
    }
    bool mismatch = false;
    std::string out;
    for (const auto& report : reports) {
        out += catalog::format_text(report);
        mismatch = mismatch || report.any_mismatch();
    }
    out += "checked " + std::to_string(reports.size()) + (reports.size() == 1 ? " type" : " types") + ": " +
           (mismatch ? "MISMATCH" : "all agree") + '\n';
    std::cout << out;
    return mismatch ? kMismatch : kOk;
}

int run_render(const std::string& type_text, const std::string& walk_text, const std::string& dyck_text,
               const std::string& format, const std::string& out_path) {
    std::string text;
    if (!dyck_text.empty()) {
        const auto path = bijections::DyckPath::parse(dyck_text);
        text = format == "svg" ? render::dyck_svg(path) : render::dyck_ascii(path);
    } else {
        const auto type = WalkType::parse(type_text);
        const auto walk = parse_walk(walk_text, type);
        text = format == "svg" ? render::walk_svg(walk, type) : render::walk_ascii(walk, type);
    }
    emit(text, out_path);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of restricted lattice walks"};
    app.require_subcommand(1);

    std::string type_text;
    std::string method = "dp";
    std::string sequence_format;
    std::string render_format;
    std::string walk_text;
    std::string out_path;
    std::string mode;
    std::string dyck_text;
    int n = 0;
    int max_n = 0;
    bool table3 = false;
    std::uint64_t max_brute = oracle::Guards{}.max_candidates;

    auto add_brute = [&](CLI::App* sub) {
        sub->add_option("--max-brute", max_brute, "Ceiling on candidate strings for brute-force enumeration")
            ->check(CLI::PositiveNumber);
    };

    auto* count = app.add_subcommand("count", "Count valid walks of length n");
    count->add_option("--type", type_text, "Walk type letters a-e")->required();
    count->add_option("--n", n, "Walk length")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--method", method, "dp, formula or brute")->check(CLI::IsMember({"dp", "formula", "brute"}));
    add_brute(count);

    auto* sequence = app.add_subcommand("sequence", "Counts for n = 0..max-n");
    sequence->add_option("--type", type_text)->required();
    sequence->add_option("--max-n", max_n)->required()->check(CLI::NonNegativeNumber);
    sequence->add_option("--format", sequence_format, "plain, bfile or json")
        ->default_val("plain")
        ->check(CLI::IsMember({"plain", "bfile", "json"}));

    auto* enumerate = app.add_subcommand("enumerate", "List valid walks in lexicographic order");
    enumerate->add_option("--type", type_text)->required();
    enumerate->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    add_brute(enumerate);

    auto* validate_cmd = app.add_subcommand("validate", "Check a walk and locate its first illegal step");
    validate_cmd->add_option("--type", type_text)->required();
    validate_cmd->add_option("walk", walk_text, "Walk tokens, e.g. NEWS");

    auto* dyck = app.add_subcommand("dyck", "Convert between half-plane walks and Dyck words");
    dyck->add_option("mode", mode, "encode (walk to Dyck word) or decode")
        ->required()
        ->check(CLI::IsMember({"encode", "decode"}));
    dyck->add_option("text", walk_text, "Walk or Dyck word");

    auto* verify = app.add_subcommand("verify", "Cross-check oracle, formulas and published terms");
    auto* table3_flag = verify->add_flag("--table3", table3, "Check every published three-dimensional row");
    verify->add_option("--type", type_text)->excludes(table3_flag);
    verify->add_option("--n-max", max_n)->required()->check(CLI::NonNegativeNumber);

    auto* render_cmd = app.add_subcommand("render", "Draw a walk or Dyck word");
    render_cmd->add_option("--type", type_text, "Walk type (ignored with --dyck)");
    render_cmd->add_option("walk", walk_text);
    render_cmd->add_option("--dyck", dyck_text, "Draw this Dyck word as a timeline");
    render_cmd->add_option("--format", render_format)->default_val("ascii")->check(CLI::IsMember({"ascii", "svg"}));
    render_cmd->add_option("--out", out_path, "Output file, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        const auto guards = guards_from(max_brute);
        if (count->parsed()) return run_count(type_text, n, method, guards);
        if (sequence->parsed()) return run_sequence(type_text, max_n, sequence_format, guards);
        if (enumerate->parsed()) return run_enumerate(type_text, n, guards);
        if (validate_cmd->parsed()) return run_validate(type_text, walk_text);
        if (dyck->parsed()) return run_dyck(mode, walk_text);
        if (verify->parsed()) {
            if (!table3 && type_text.empty()) {
                throw InputError("verify needs --table3 or --type");
            }
            return run_verify(table3, type_text, max_n, guards);
        }
        if (render_cmd->parsed()) {
            if (dyck_text.empty() && type_text.empty()) {
                throw InputError("render needs --type with a walk, or --dyck");
            }
            return run_render(type_text, walk_text, dyck_text, render_format, out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const GuardExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
