// hopfcalc command-line driver. Links only the C interface.
#include "hopfcalc/hopfcalc.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::optional<std::string> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Subcommand {
    CLI::App* app = nullptr;
    std::string file;
    std::string ideal;
    std::vector<std::string> refs;
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact differential calculi on finite-dimensional Hopf algebras"};
    app.set_version_flag("--version", hc_version());
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t seed = 0;
    std::string field_override;
    std::string suite = "all";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "Seed for randomized sweeps");
    app.add_option("--field-override", field_override, "Build over GF(p) instead, written gf:<p>");

    struct Spec {
        const char* name;
        const char* help;
        bool ideal;
        bool ideal_required;
    };
    const std::vector<Spec> specs{
        {"validate", "Check the Hopf algebra axioms", false, false},
        {"universal", "Universal calculus", false, false},
        {"woronowicz", "Left-covariant calculus of a declared right ideal", true, true},
        {"quantum-lie", "Quantum tangent space", true, false},
        {"characters", "Characters and their translations", false, false},
        {"vfields", "Vector fields of a calculus", true, false},
        {"coderivations", "Invariant coderivations", true, false},
        {"bracket", "Lie bracket of two coderivations (C<k> or 0@<character>)", true, false},
        {"verify", "Run a verification suite", false, false},
    };
    std::vector<Subcommand> subs(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        Subcommand& s = subs[i];
        s.app = app.add_subcommand(specs[i].name, specs[i].help);
        s.app->fallthrough();
        s.app->add_option("file", s.file, "HADF definition file")->required();
        if (specs[i].ideal) {
            auto* opt = s.app->add_option("--ideal", s.ideal, "Name of a declared ideal");
            if (specs[i].ideal_required)
                opt->required();
        }
        if (std::string(specs[i].name) == "bracket")
            s.app->add_option("refs", s.refs, "Two coderivation references")->expected(2)->required();
        if (std::string(specs[i].name) == "verify")
            s.app->add_option("--suite", suite, "Suite to run")
                ->check(CLI::IsMember({"hopf", "fodc", "translations", "bracket", "all"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Subcommand* chosen = nullptr;
    std::string command;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i].app->parsed()) {
            chosen = &subs[i];
            command = specs[i].name;
        }

    const auto text = read_file(chosen->file);
    if (!text) {
        std::cerr << "error: cannot read '" << chosen->file << "'\n";
        return 2;
    }

    std::vector<const char*> refs;
    for (const auto& r : chosen->refs)
        refs.push_back(r.c_str());
    hc_run_options options{};
    options.command = command.c_str();
    options.args = refs.data();
    options.arg_count = refs.size();
    options.ideal = chosen->ideal.empty() ? nullptr : chosen->ideal.c_str();
    options.suite = suite.c_str();
    options.seed = seed;
    options.field_override = field_override.empty() ? nullptr : field_override.c_str();

    hc_report* report = nullptr;
    if (hc_run(text->data(), text->size(), &options, &report) != HC_OK) {
        std::cerr << "error: " << hc_last_error() << "\n";
        return 2;
    }
    std::fputs(format == "json" ? hc_report_json(report) : hc_report_text(report), stdout);
    const int code = hc_report_exit_code(report);
    hc_report_free(report);
    return code;
}
