#pragma once

// Command line front end.  Two subcommands:
//
//   rzk analyze <problem.json> [--oracle] [--collapse[=budget]]
//       [--restarts=N] [--seed=N] [--max-cells=N] [--format=text|json]
//   rzk exhaustive [--max-m=N] [--format=text|json]
//
// Exit codes: 0 success, 1 property-suite failure, 2 bad input, 3 resource
// cap exceeded.  Reports go to the output stream; errors to the error
// stream, never both.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rzk/errors.hpp"
#include "rzk/exhaustive.hpp"
#include "rzk/problem.hpp"
#include "rzk/report.hpp"

namespace rzk {

namespace detail {

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::ostringstream buf;
        buf << stdin_stream.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file)
        throw malformed_input_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

inline unsigned long long parse_budget(const std::string& text) {
    if (text.empty() || text.size() > 18)
        throw malformed_input_error("collapse budget \"" + text +
                                    "\" is not a number; use --collapse=N");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw malformed_input_error("collapse budget \"" + text +
                                        "\" is not a number; use --collapse=N");
    return std::stoull(text);
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err, std::istream& stdin_stream = std::cin) {
    CLI::App app{"invariant bounds for real moment-angle complexes under "
                 "subtorus actions"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "analyze one problem file (\"-\" reads standard input)");
    std::string problem_path;
    analyze_cmd->add_option("problem", problem_path, "problem file")->required();
    bool oracle_flag = false;
    analyze_cmd->add_flag("--oracle", oracle_flag,
                          "run the cellular cross-checks and report them");
    std::string collapse_raw;
    auto* collapse_opt =
        analyze_cmd
            ->add_option("--collapse", collapse_raw,
                         "search for a dimension-reducing collapse; "
                         "an optional =N caps the step budget")
            ->expected(0, 1);
    int restarts = kDefaultCollapseRestarts;
    analyze_cmd->add_option("--restarts", restarts,
                            "randomized retries of the collapse search");
    std::uint64_t seed = 0;
    analyze_cmd->add_option("--seed", seed, "seed for the collapse retries");
    unsigned long long max_cells = kDefaultCellCap;
    analyze_cmd->add_option("--max-cells", max_cells,
                            "cell-count cap for the cellular model");
    std::string analyze_format = "text";
    analyze_cmd->add_option("--format", analyze_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* exhaustive_cmd = app.add_subcommand(
        "exhaustive", "run the property suites over all small instances");
    int max_m = 4;
    exhaustive_cmd->add_option("--max-m", max_m,
                               "largest vertex count to enumerate (up to 5)");
    std::string exhaustive_format = "text";
    exhaustive_cmd->add_option("--format", exhaustive_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            const ProblemFile problem = parse_problem(
                detail::read_input(problem_path, stdin_stream));
            AnalyzeOptions options;
            options.attempt_collapse = collapse_opt->count() > 0;
            if (!collapse_raw.empty())
                options.collapse_budget = detail::parse_budget(collapse_raw);
            options.collapse_restarts = restarts;
            options.seed = seed;
            const InvariantReport r =
                analyze(problem.complex, problem.group, options);
            OracleReport oracle;
            if (oracle_flag)
                oracle = run_oracle(problem.complex, problem.group, max_cells);
            if (analyze_format == "json")
                out << report_to_json(problem, r,
                                      oracle_flag ? &oracle : nullptr)
                           .dump(2)
                    << "\n";
            else
                out << report_to_text(problem, r,
                                      oracle_flag ? &oracle : nullptr);
            return 0;
        }

        // exhaustive
        const auto results = run_all_suites(max_m);
        if (exhaustive_format == "json")
            out << suites_to_json(results, max_m).dump(2) << "\n";
        else
            out << suites_to_text(results, max_m);
        for (const SuiteResult& r : results)
            if (!r.passed) return 1;
        return 0;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace rzk
