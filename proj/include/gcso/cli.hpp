#pragma once

#include <gcso/analysis.hpp>
#include <gcso/dot.hpp>
#include <gcso/io.hpp>
#include <gcso/oracle.hpp>
#include <gcso/verifier.hpp>

#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gcso::cli {

// Process exit codes; the only stable machine contract of the tool.
enum ExitCode : int {
    opaque = 0,
    violation = 1,
    input_error = 2,
    resource_limit = 3,
};

namespace detail {

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error("cannot write '" + path + "'");
    file << text;
}

inline std::string describe_word(const Dfa& g, const Word& w)
{
    return w.empty() ? std::string("<empty>") : g.format_word(w);
}

inline std::string describe_node(const Dfa& g, const DynamicSecretModel& h, const VerifierNode& z)
{
    std::string out = "{";
    for (std::size_t i = 0; i < z.pairs.size(); ++i)
        out += (i ? ", (" : "(") + g.state_name(z.pairs[i].system) + ", " + h.state_name(z.pairs[i].secret) + ")";
    return out + "}";
}

} // namespace detail

// Runs one command line (args excludes the program name). Reports go to `out`,
// diagnostics and usage text to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized current-state opacity checker for discrete event systems", "gcso"};
    app.require_subcommand(1);

    std::string system_path;
    std::vector<std::string> secret_paths;
    bool show_witness = false;
    std::string dot_path;
    std::size_t max_nodes = Limits{}.max_nodes;
    std::string secret_names;
    std::string word_text;
    std::size_t depth = 0;

    auto* verify = app.add_subcommand("verify", "Check opacity against one or more dynamic-secret models");
    verify->add_option("--system", system_path, "System automaton (.aut)")->required();
    verify->add_option("--secrets", secret_paths, "Dynamic-secret models (.sec)")->required()->expected(1, -1);
    verify->add_flag("--witness", show_witness, "Print a shortest violating observation");
    verify->add_option("--dot", dot_path, "Write the verifier as DOT (single model only; '-' for stdout)");
    verify->add_option("--max-nodes", max_nodes, "Verifier node cap")->check(CLI::PositiveNumber);

    auto* verify_cso = app.add_subcommand("verify-cso", "Classic current-state opacity for a constant secret");
    verify_cso->add_option("--system", system_path, "System automaton (.aut)")->required();
    verify_cso->add_option("--secret", secret_names, "Whitespace-separated secret states")->required();
    verify_cso->add_flag("--witness", show_witness, "Print a shortest violating observation");
    verify_cso->add_option("--max-nodes", max_nodes, "Observer node cap")->check(CLI::PositiveNumber);

    auto* build = app.add_subcommand("build-verifier", "Build the full verifier and export it as DOT");
    build->add_option("--system", system_path, "System automaton (.aut)")->required();
    build->add_option("--secrets", secret_paths, "Dynamic-secret model (.sec)")->required()->expected(1);
    build->add_option("--dot", dot_path, "Output file ('-' for stdout)")->required();
    build->add_option("--max-nodes", max_nodes, "Verifier node cap")->check(CLI::PositiveNumber);

    auto* project_cmd = app.add_subcommand("project", "Print the natural projection of an event string");
    project_cmd->add_option("--system", system_path, "System automaton (.aut)")->required();
    project_cmd->add_option("--string", word_text, "Whitespace-separated events")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Bounded brute-force opacity check");
    oracle_cmd->add_option("--system", system_path, "System automaton (.aut)")->required();
    oracle_cmd->add_option("--secrets", secret_paths, "Dynamic-secret model (.sec)")->required()->expected(1);
    oracle_cmd->add_option("--depth", depth, "Maximum observation length")->required();

    std::vector<std::string> argv_storage{"gcso"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return input_error;
    }

    const Limits limits{max_nodes};

    try {
        const Dfa g = load_system(system_path);

        if (*verify) {
            if (!dot_path.empty() && secret_paths.size() != 1) {
                err << "error: --dot needs exactly one --secrets model\n";
                return input_error;
            }
            std::vector<DynamicSecretModel> models;
            for (const auto& path : secret_paths)
                models.push_back(load_secret_model(path, g));

            bool any_violation = false;
            bool any_unknown = false;
            for (std::size_t i = 0; i < models.size(); ++i) {
                const auto& h = models[i];
                try {
                    CheckOptions options{limits, dot_path.empty()};
                    Verdict verdict;
                    if (dot_path.empty()) {
                        verdict = check_gcso(g, h, options);
                    } else {
                        const auto v = build_verifier(g, h, limits);
                        detail::write_output(dot_path, export_dot(v, g, h), out);
                        verdict = verdict_of(v, h);
                    }
                    out << secret_paths[i] << ": " << (verdict.opaque ? "opaque" : "not opaque") << " (nodes "
                        << verdict.stats.nodes << ", transitions " << verdict.stats.transitions << ")\n";
                    if (!verdict.opaque) {
                        any_violation = true;
                        if (show_witness) {
                            out << "witness: " << detail::describe_word(g, *verdict.witness) << '\n';
                            out << "violating node: " << detail::describe_node(g, h, *verdict.violating_node) << '\n';
                        }
                    }
                } catch (const ResourceLimitError& e) {
                    any_unknown = true;
                    out << secret_paths[i] << ": unknown (" << e.what() << ")\n";
                }
            }
            const char* overall = any_violation ? "not opaque" : any_unknown ? "unknown" : "opaque";
            out << "overall: " << overall << '\n';
            return any_violation ? violation : any_unknown ? resource_limit : opaque;
        }

        if (*verify_cso) {
            std::vector<std::string> names;
            for (const auto& t : ::gcso::detail::tokenize(secret_names))
                names.push_back(t.text);
            const auto secret = secret_from_names(g, names);
            try {
                const auto verdict = check_cso_classic(g, secret, limits);
                out << "classic current-state opacity: " << (verdict.opaque ? "opaque" : "not opaque") << '\n';
                if (!verdict.opaque && show_witness)
                    out << "witness: " << detail::describe_word(g, *verdict.witness) << '\n';
                return verdict.opaque ? opaque : violation;
            } catch (const ResourceLimitError& e) {
                out << "classic current-state opacity: unknown (" << e.what() << ")\n";
                return resource_limit;
            }
        }

        if (*build) {
            const auto h = load_secret_model(secret_paths.front(), g);
            try {
                const auto v = build_verifier(g, h, limits);
                detail::write_output(dot_path, export_dot(v, g, h), out);
                if (dot_path != "-")
                    out << "verifier: " << v.node_count() << " nodes, " << v.transition_count() << " transitions\n";
                return 0;
            } catch (const ResourceLimitError& e) {
                err << "error: " << e.what() << '\n';
                return resource_limit;
            }
        }

        if (*project_cmd) {
            const auto word = g.parse_word(word_text);
            out << g.format_word(project(g, word)) << '\n';
            return 0;
        }

        if (*oracle_cmd) {
            const auto h = load_secret_model(secret_paths.front(), g);
            const auto result = gcso_bounded_oracle(g, h, depth);
            if (result.violating) {
                out << "violating observation: " << detail::describe_word(g, *result.violating) << '\n';
                return violation;
            }
            out << "no violation up to depth " << depth << '\n';
            return opaque;
        }
    } catch (const ValidationError& e) {
        err << "error: invalid input\n" << e.what() << '\n';
        return input_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

} // namespace gcso::cli
