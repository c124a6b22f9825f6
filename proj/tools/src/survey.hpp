#pragma once

#include "cache.hpp"

#include "quatcong/weights.hpp"

#include <set>
#include <string>
#include <vector>

namespace quatcong::cli {

// Named boolean cross-checks for one level plus any trace-formula
// discrepancies (fixed-point count taken as ground truth).
struct LevelChecks {
    std::map<std::string, bool> checks;
    std::vector<std::string> discrepancies;
    bool ok() const;
};

LevelChecks run_level_checks(const LevelData& d);

struct SurveyOptions {
    long min = 2;
    long max = 2;
    std::set<std::string> statements;  // thm1, thm2, prop54, prop55, trace
    int jobs = 1;
    long bound = 0;
    std::optional<std::filesystem::path> cache_dir;
};

struct SurveyOutcome {
    json ledger = json::array();
    std::vector<std::string> failures;  // "N: check"
};

const std::set<std::string>& survey_statement_names();
json survey_level(long n, const SurveyOptions& opt, std::vector<std::string>& failures);
SurveyOutcome run_survey(const SurveyOptions& opt);

}  // namespace quatcong::cli
