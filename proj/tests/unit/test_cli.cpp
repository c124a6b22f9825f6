#include "commands.hpp"
#include "serialize.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

using namespace quatcong;
using namespace quatcong::cli;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("quatcong-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

struct ToolRun {
    int code = -1;
    std::string out;
};

ToolRun run_tool(const std::string& args) {
    ToolRun r;
    std::string cmd = std::string(QUATCONG_TOOL) + " " + args + " 2>/dev/null";
    FILE* f = ::popen(cmd.c_str(), "r");
    if (!f) return r;
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int status = ::pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cache, RoundTripIsLossless) {
    fs::path dir = fresh_dir("roundtrip");
    for (long n : {2L, 11L, 30L, 105L}) {
        LevelData d = compute_level(n);
        store_cached(dir, d);
        auto back = load_cached(dir, n, 0);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(cache_record(*back).dump(), cache_record(d).dump());
        EXPECT_EQ(classset_summary(back->classes).dump(), classset_summary(d.classes).dump());
        EXPECT_EQ(to_json(verify_thm2(*back)).dump(), to_json(verify_thm2(d)).dump());
    }
    fs::remove_all(dir);
}

TEST(Cache, RejectsTamperedRecords) {
    LevelData d = compute_level(30);
    json rec = cache_record(d);
    EXPECT_NO_THROW(level_from_record(rec));

    json bad_sum = rec;
    bad_sum["checksum"] = "0000000000000000";
    EXPECT_THROW(level_from_record(bad_sum), std::runtime_error);

    json bad_entry = rec;
    bad_entry["brandt"]["7"][0][0] = 99;
    EXPECT_THROW(level_from_record(bad_entry), std::runtime_error);
    // Same damage with a matching checksum is caught by the content checks.
    bad_entry.erase("checksum");
    bad_entry["checksum"] = fnv1a_hex(bad_entry.dump());
    EXPECT_THROW(level_from_record(bad_entry), std::runtime_error);

    json bad_version = rec;
    bad_version["schema_version"] = kCacheSchemaVersion + 1;
    EXPECT_THROW(level_from_record(bad_version), std::runtime_error);
}

TEST(Cache, LargerBoundExtendsStoredRecord) {
    fs::path dir = fresh_dir("bound");
    LevelData d = compute_level(11);
    store_cached(dir, d);
    LevelData more = obtain_level(11, 2 * d.bound, dir);
    EXPECT_EQ(more.bound, 2 * d.bound);
    EXPECT_GT(more.brandt.size(), d.brandt.size());
    LevelData again = obtain_level(11, 0, dir);
    EXPECT_EQ(again.bound, d.bound);
    EXPECT_EQ(again.brandt.size(), d.brandt.size());
    fs::remove_all(dir);
}

TEST(Survey, LedgerIndependentOfJobCount) {
    SurveyOptions opt;
    opt.min = 2;
    opt.max = 80;
    opt.statements = {"thm1", "thm2", "prop54", "prop55", "trace"};
    opt.jobs = 1;
    SurveyOutcome a = run_survey(opt);
    opt.jobs = 3;
    SurveyOutcome b = run_survey(opt);
    EXPECT_EQ(a.ledger.dump(), b.ledger.dump());
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_FALSE(a.ledger.empty());
}

TEST(Survey, EmptyRange) {
    SurveyOptions opt;
    opt.min = 50;
    opt.max = 10;
    CommandResult r = cmd_survey(opt);
    EXPECT_EQ(r.exit_code, kOk);
    EXPECT_EQ(r.result["levels"], 0);
}

TEST(Commands, ExitCodes) {
    Context ctx;
    EXPECT_EQ(cmd_verify(Statement::prop54, 11, 11, ctx).exit_code, kHypothesisFailed);
    EXPECT_EQ(cmd_verify(Statement::prop54, 105, 105, ctx).exit_code, kOk);
    EXPECT_EQ(cmd_verify(Statement::thm1, 30, 2, ctx).exit_code, kOk);
    EXPECT_EQ(cmd_verify(Statement::thm1, 11, 11, ctx).exit_code, kHypothesisFailed);
    EXPECT_EQ(cmd_verify(Statement::prop54, 110, 110, ctx).exit_code, kClaimFailed);
    EXPECT_THROW(cmd_classset(12, ctx), std::invalid_argument);
    EXPECT_EQ(cmd_trace_wp(11, 11, ctx).result["traces"][0]["formula"], -1);
}

TEST(Commands, EnvelopeShape) {
    Context ctx;
    CommandResult r = cmd_classset(11, ctx);
    json e = envelope("classset", {{"level", 11}}, r);
    for (const char* k : {"command", "inputs", "result", "exit_code"}) EXPECT_TRUE(e.contains(k)) << k;
    EXPECT_EQ(e["exit_code"], 0);
}

TEST(Binary, ExitCodesAndJson) {
    fs::path dir = fresh_dir("binary");
    std::string cache = "--cache-dir " + dir.string() + " ";
    ToolRun ok = run_tool(cache + "--json verify thm1 --level 30 --modulus 2");
    EXPECT_EQ(ok.code, 0);
    json j = json::parse(ok.out);
    EXPECT_EQ(j["command"], "verify");
    EXPECT_EQ(j["result"]["hypothesis_ok"], true);
    EXPECT_TRUE(fs::exists(cache_path(dir, 30)));

    EXPECT_EQ(run_tool(cache + "verify prop54 --level 11").code, 2);
    EXPECT_EQ(run_tool(cache + "classset --level 12").code, 3);
    EXPECT_EQ(run_tool("no-such-command").code, 3);
    EXPECT_EQ(run_tool(cache + "cache verify --level 30").code, 0);

    fs::path ledger = dir / "ledger.json";
    EXPECT_EQ(run_tool(cache + "survey --min 2 --max 40 --jobs 2 --ledger " + ledger.string()).code, 0);
    std::ifstream in(ledger);
    json l = json::parse(in);
    EXPECT_TRUE(l.is_array());
    fs::remove_all(dir);
}
