#include "commands.hpp"

#include <CLI/CLI.hpp>

#include <chrono>
#include <sstream>
#include <iostream>

using namespace quatcong;
using namespace quatcong::cli;

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic modular forms mod 2: class sets, Brandt matrices, sign patterns, congruences"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false, timing = false;
    std::string cache_dir;
    long bound = 0;
    app.add_flag("--json", as_json, "Print a JSON report envelope");
    app.add_flag("--timing", timing, "Include wall time in the JSON envelope");
    app.add_option("--cache-dir", cache_dir, "Cache directory (default: $QUATCONG_CACHE_DIR)");
    app.add_option("--bound", bound, "Hecke prime bound; only raises the Sturm bound");

    long n = 0, m = 0, p = 0, min = 2, max = 0;
    int k = 0, jobs = 1;
    std::string pattern, statement, statements = "thm2", ledger_path;

    auto* classset = app.add_subcommand("classset", "Right ideal classes of a maximal order");
    classset->add_option("--level", n)->required();
    auto* brandt = app.add_subcommand("brandt", "Brandt matrices");
    brandt->add_option("--level", n)->required();
    brandt->add_option("--prime", p, "Single prime (default: all up to the bound)");
    auto* involutions = app.add_subcommand("involutions", "Permutations sigma_p for p | N");
    involutions->add_option("--level", n)->required();
    auto* graph = app.add_subcommand("graph", "Signed graph for a sign pattern");
    graph->add_option("--level", n)->required();
    graph->add_option("--modulus", m, "M | N (default N)");
    graph->add_option("--pattern", pattern, "e.g. +- or 2:+,13:-")->required();
    auto* sclass = app.add_subcommand("sclass", "S-ideal class number and admissible counts");
    sclass->add_option("--level", n)->required();
    sclass->add_option("--modulus", m, "M | N (default N)");
    auto* dims = app.add_subcommand("dims", "Dimensions in quaternionic weight k");
    dims->add_option("--level", n)->required();
    dims->add_option("--weight", k, "Even k >= 0")->required();
    dims->add_option("--prime", p, "Refine by the sign at p | N");
    dims->add_option("--modulus", m, "Refine by all sign patterns for M | N");
    auto* trace = app.add_subcommand("trace-wp", "Atkin-Lehner trace formula against fixed points");
    trace->add_option("--level", n)->required();
    trace->add_option("--prime", p);
    auto* criteria = app.add_subcommand("criteria", "Fixed-point and equidistribution criteria");
    criteria->add_option("--level", n)->required();
    criteria->add_option("--modulus", m);
    auto* verify = app.add_subcommand("verify", "Verify a congruence statement at one level");
    verify->add_option("statement", statement, "thm1, thm2, prop54 or prop55")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "prop54", "prop55"}));
    verify->add_option("--level", n)->required();
    verify->add_option("--modulus", m, "Required for thm1");
    auto* survey = app.add_subcommand("survey", "Run checks over a range of levels");
    survey->add_option("--min", min);
    survey->add_option("--max", max)->required();
    survey->add_option("--statements", statements, "Comma list of thm1,thm2,prop54,prop55,trace");
    survey->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    survey->add_option("--ledger", ledger_path, "Write the JSON ledger to this file");
    auto* cache = app.add_subcommand("cache", "Inspect or check cached levels");
    cache->require_subcommand(1);
    auto* cache_show = cache->add_subcommand("show", "Summarize a cached level");
    cache_show->add_option("--level", n)->required();
    auto* cache_verify = cache->add_subcommand("verify", "Compute, serialize, reload and compare");
    cache_verify->add_option("--level", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    Context ctx;
    ctx.bound = bound;
    ctx.cache_dir = cache_dir.empty() ? cache_dir_from_env() : std::optional<std::filesystem::path>(cache_dir);

    std::string command;
    json inputs = {{"level", n}};
    auto start = std::chrono::steady_clock::now();
    CommandResult r;
    try {
        if (*classset) {
            command = "classset";
            require_admissible_level(n);
            r = cmd_classset(n, ctx);
        } else if (*brandt) {
            command = "brandt";
            inputs["prime"] = p;
            require_admissible_level(n);
            r = cmd_brandt(n, p, ctx);
        } else if (*involutions) {
            command = "involutions";
            require_admissible_level(n);
            r = cmd_involutions(n, ctx);
        } else if (*graph) {
            command = "graph";
            if (m == 0) m = n;
            inputs["modulus"] = m;
            inputs["pattern"] = pattern;
            require_admissible_level(n);
            r = cmd_graph(n, m, pattern, ctx);
        } else if (*sclass) {
            command = "sclass";
            if (m == 0) m = n;
            inputs["modulus"] = m;
            require_admissible_level(n);
            r = cmd_sclass(n, m, ctx);
        } else if (*dims) {
            command = "dims";
            inputs["weight"] = k;
            inputs["prime"] = p;
            inputs["modulus"] = m;
            require_admissible_level(n);
            r = cmd_dims(n, k, p, m, ctx);
        } else if (*trace) {
            command = "trace-wp";
            inputs["prime"] = p;
            require_admissible_level(n);
            r = cmd_trace_wp(n, p, ctx);
        } else if (*criteria) {
            command = "criteria";
            inputs["modulus"] = m;
            r = cmd_criteria(n, m, ctx);
        } else if (*verify) {
            command = "verify";
            inputs["statement"] = statement;
            inputs["modulus"] = m;
            Statement s = parse_statement(statement);
            if (s == Statement::thm1 && m == 0) throw std::invalid_argument("thm1 needs --modulus");
            r = cmd_verify(s, n, m, ctx);
        } else if (*survey) {
            command = "survey";
            SurveyOptions opt;
            opt.min = min;
            opt.max = max;
            opt.jobs = jobs;
            opt.bound = bound;
            opt.cache_dir = ctx.cache_dir;
            std::stringstream ss(statements);
            for (std::string item; std::getline(ss, item, ',');) {
                if (item.empty()) continue;
                if (!survey_statement_names().count(item)) throw std::invalid_argument("unknown statement: " + item);
                opt.statements.insert(item);
            }
            inputs = {{"min", min}, {"max", max}, {"statements", opt.statements}, {"jobs", jobs}};
            r = cmd_survey(opt);
            if (!ledger_path.empty()) write_atomic(ledger_path, r.result["ledger"].dump(1) + "\n");
        } else if (*cache_show) {
            command = "cache show";
            r = cmd_cache_show(n, ctx);
        } else if (*cache_verify) {
            command = "cache verify";
            require_admissible_level(n);
            r = cmd_cache_verify(n, ctx);
        }
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }

    if (as_json) {
        json env = envelope(command, inputs, r);
        if (timing)
            env["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
        std::cout << env.dump(2) << "\n";
    } else {
        std::cout << r.text;
    }
    return r.exit_code;
}
