#pragma once

#include "survey.hpp"

#include <string>

namespace quatcong::cli {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kHypothesisFailed = 2, kUsage = 3, kInternal = 4 };

struct Context {
    std::optional<std::filesystem::path> cache_dir;
    long bound = 0;
};

struct CommandResult {
    json result;
    int exit_code = kOk;
    std::string text;  // human-readable rendering
};

CommandResult cmd_classset(long n, const Context& ctx);
CommandResult cmd_brandt(long n, long prime, const Context& ctx);  // prime 0: all up to the bound
CommandResult cmd_involutions(long n, const Context& ctx);
CommandResult cmd_graph(long n, long modulus, const std::string& pattern, const Context& ctx);
CommandResult cmd_sclass(long n, long modulus, const Context& ctx);
CommandResult cmd_dims(long n, int k, long prime, long modulus, const Context& ctx);
CommandResult cmd_trace_wp(long n, long prime, const Context& ctx);
CommandResult cmd_criteria(long n, long modulus, const Context& ctx);
CommandResult cmd_verify(Statement s, long n, long modulus, const Context& ctx);
CommandResult cmd_survey(const SurveyOptions& opt);
CommandResult cmd_cache_show(long n, const Context& ctx);
CommandResult cmd_cache_verify(long n, const Context& ctx);

json envelope(const std::string& command, const json& inputs, const CommandResult& r);

}  // namespace quatcong::cli
