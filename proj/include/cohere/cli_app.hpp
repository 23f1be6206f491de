#pragma once

#include "cohere/cli.hpp"
#include "cohere/cli_fixtures.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace cohere {

/// Reads a definition file, or a bundled fixture of that name when no such file exists.
inline std::string load_definition_text(const std::string& path) {
    if (std::filesystem::is_regular_file(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    auto it = bundled_fixtures().find(path);
    if (it == bundled_fixtures().end()) fail("ParseError", path + ": no such file or bundled fixture");
    return it->second.text;
}

/// Seed from --seed, else COHERE_SEED, else 0.
inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    const char* env = std::getenv("COHERE_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        auto v = std::stoull(env, &used);
        if (used == std::string(env).size() && env[0] != '-') return v;
    } catch (const std::exception&) {
    }
    fail("ParseError", std::string("COHERE_SEED: not an unsigned integer '") + env + "'");
}

/**
 * \brief The `cohere` command line. Exit codes: 0 all laws pass, 1 an audit
 * failed, 2 bad input (parse, reference, validation, unknown audit).
 */
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exhaustive coherence audits for finite 2-groups, 2-representations and descent data", "cohere"};
    app.require_subcommand(1);

    auto* audit = app.add_subcommand("audit", "Run the audits of a definition file or bundled fixture");
    std::string file, only, json_out;
    std::optional<std::uint64_t> seed;
    std::size_t max_cx = 5;
    bool timings = false;
    audit->add_option("file", file, "Definition file (JSON) or bundled fixture name")->required();
    auto* only_opt = audit->add_option("--only", only, "Comma-separated laws, audit kinds or kind/law");
    audit->add_option("--seed", seed, "Sampling seed (default: COHERE_SEED, else 0)");
    audit->add_option("--json", json_out, "Write the JSON report to this path ('-' for stdout)");
    audit->add_option("--max-counterexamples", max_cx, "Counterexamples kept per law")->capture_default_str();
    audit->add_flag("--timings", timings, "Include wall times in the JSON report");

    auto* fixtures = app.add_subcommand("fixtures", "Bundled fixtures");
    fixtures->require_subcommand(1);
    auto* list = fixtures->add_subcommand("list", "List bundled fixtures");
    auto* show = fixtures->add_subcommand("show", "Print a bundled fixture");
    std::string show_name;
    show->add_option("name", show_name)->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            for (const auto& [name, f] : bundled_fixtures()) out << name << "  " << f.summary << "\n";
            return 0;
        }
        if (show->parsed()) {
            auto it = bundled_fixtures().find(show_name);
            if (it == bundled_fixtures().end()) fail("UnresolvedReference", "fixture '" + show_name + "'");
            out << it->second.text;
            return 0;
        }
        std::optional<std::vector<std::string>> sel;
        if (only_opt->count()) {
            sel.emplace();
            std::stringstream ss(only);
            for (std::string tok; std::getline(ss, tok, ',');)
                if (!tok.empty()) sel->push_back(tok);
        }
        if (sel) select_laws(*sel);  // unknown names fail before any work
        auto s = resolve_seed(seed);
        auto defs = parse_definitions_text(load_definition_text(file));
        auto rep = run_audits(defs, sel, s, max_cx);
        auto j = report_json(rep, timings).dump(2) + "\n";
        if (json_out == "-") out << j;
        else {
            out << report_text(rep);
            if (!json_out.empty()) {
                std::ofstream f(json_out, std::ios::binary);
                if (!f) fail("ParseError", json_out + ": cannot write");
                f << j;
            }
        }
        return rep.passed() ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cohere
