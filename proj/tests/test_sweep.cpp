#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace sumprod;
using namespace testing_support;

namespace {

SweepConfig cfg_from(const char* text) { return parse_sweep_config(Json::parse(text)); }

std::string config_error(const char* text) {
    try {
        (void)cfg_from(text);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::config_error);
        return e.what();
    }
    ADD_FAILURE() << "accepted: " << text;
    return {};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST(SweepConfig, ErrorsNameTheField) {
    EXPECT_NE(config_error(R"({"inequalities":["gv"]})").find("$.primes"), std::string::npos);
    EXPECT_NE(config_error(R"({"primes":{"list":[15]},"inequalities":["gv"]})").find("$.primes.list[0]"), std::string::npos);
    EXPECT_NE(config_error(R"({"primes":{"list":[13]},"inequalities":["nope"]})").find("$.inequalities[0]"), std::string::npos);
    EXPECT_NE(config_error(R"({"primes":{"list":[13]},"inequalities":["gv"],"extra":1})").find("$.extra"), std::string::npos);
    const auto bad_poly = config_error(R"({"primes":{"list":[13]},"polys":["x+","y"],"inequalities":["t2"]})");
    EXPECT_NE(bad_poly.find("$.polys[0]"), std::string::npos);
    EXPECT_NE(bad_poly.find("x+"), std::string::npos);
    EXPECT_NE(config_error(R"({"primes":{"range":[8,10]},"inequalities":["gv"]})").find("$.primes.range"), std::string::npos);
    EXPECT_NE(config_error(R"({"primes":{"list":[13]},"inequalities":["t2"]})").find("$.polys"), std::string::npos);
}

TEST(SweepConfig, FamiliesExpand) {
    const auto cfg = cfg_from(R"({"primes":{"list":[13]},"polys":["x+y"],
        "families":[{"degree":2,"a":[1,2],"b":[3]}],"inequalities":["t2"]})");
    EXPECT_EQ(cfg.polynomial_texts(), (std::vector<std::string>{"x+y", "1*x^2+3*y^2", "2*x^2+3*y^2"}));
}

TEST(RunSweep, Theorem2OnThirteenIsNeverAdmitted) {
    const auto cfg = cfg_from(R"({"primes":{"list":[13]},"polys":["x+y","x^2+y^2","x^2-y^2"],"inequalities":["t2"]})");
    const auto r = run_sweep(cfg);
    EXPECT_EQ(r.records.size(), 3u * 6u);
    for (const auto& rec : r.records) EXPECT_EQ(rec["outcome"], "premise_not_met");
    EXPECT_EQ(r.exit_code, 0);
}

TEST(RunSweep, GvSmallPrimesHold) {
    const auto cfg = cfg_from(R"({"primes":{"range":[5,61]},"inequalities":["gv"]})");
    const auto r = run_sweep(cfg);
    u64 met = 0;
    for (const auto& rec : r.records) {
        EXPECT_NE(rec["outcome"], "fails");
        EXPECT_NE(rec["outcome"], "error");
        met += rec["premise"] == "met";
    }
    EXPECT_GT(met, 0u);
    EXPECT_EQ(r.exit_code, 0);
}

TEST(RunSweep, RecordsAreSorted) {
    const auto cfg = cfg_from(R"({"primes":{"list":[31,13]},"polys":["x+y","x*y"],"inequalities":["t2","growth"]})");
    const auto r = run_sweep(cfg);
    for (std::size_t i = 1; i < r.records.size(); ++i) {
        const auto& a = r.records[i - 1];
        const auto& b = r.records[i];
        const auto ka = std::make_tuple(a["p"].get<u64>(), a["order"].get<u64>(), a["poly"].get<std::string>());
        const auto kb = std::make_tuple(b["p"].get<u64>(), b["order"].get<u64>(), b["poly"].get<std::string>());
        EXPECT_LE(ka, kb);
    }
}

TEST(RunSweep, DeterministicAcrossWorkerCounts) {
    const auto cfg = cfg_from(R"({"primes":{"range":[100,400]},"polys":["x+y","x^2+y^2"],
        "inequalities":["gv","vm","thmap","growth"],"gv":{"mu":{"samples":5}},"vm":{"h":[1,2],"trials":2},
        "thmap":{"n":2,"trials":3},"seed":12345})");
    const auto one = render_report(run_sweep(cfg, 1).records, ReportFormat::jsonl);
    const auto four = render_report(run_sweep(cfg, 4).records, ReportFormat::jsonl);
    EXPECT_EQ(one, four);
    EXPECT_EQ(one, render_report(run_sweep(cfg, 3).records, ReportFormat::jsonl));
    auto other = cfg;
    other.seed = 54321;
    EXPECT_NE(one, render_report(run_sweep(other, 1).records, ReportFormat::jsonl));
}

TEST(RunSweep, BudgetViolationsAreRecordedPerInstance) {
    const auto cfg = cfg_from(R"({"primes":{"list":[1009]},"orders":{"divisors":[1008,2]},"inequalities":["growth"],
        "budgets":{"max_pairs":1000}})");
    const auto r = run_sweep(cfg);
    ASSERT_EQ(r.records.size(), 2u);
    EXPECT_EQ(r.records[0]["outcome"], "reported");
    EXPECT_EQ(r.records[1]["outcome"], "error");
    EXPECT_NE(r.records[1]["error"].get<std::string>().find("budget"), std::string::npos);
    EXPECT_EQ(r.exit_code, 0);
}

TEST(RunSweep, AdmittedSearch) {
    const auto cfg = cfg_from(R"({"primes":{"admitted_search":{"orders":[101,103]}},"polys":["x+y"],"inequalities":["t2"]})");
    const auto r = run_sweep(cfg);
    ASSERT_EQ(r.records.size(), 3u);
    for (const auto& rec : r.records) {
        EXPECT_EQ(rec["premise"], "met");
        EXPECT_EQ(rec["outcome"], "holds");
    }
}

TEST(EmitReport, EmptyAndCounts) {
    const auto dir = std::filesystem::temp_directory_path() / "sumprod_report_test";
    std::filesystem::create_directories(dir);
    const auto empty = run_sweep(cfg_from(R"({"primes":{"list":[13]},"orders":{"divisors":[5]},"inequalities":["gv"]})"));
    EXPECT_TRUE(empty.records.empty());
    emit_report(empty.records, ReportFormat::csv, (dir / "e.csv").string());
    emit_report(empty.records, ReportFormat::jsonl, (dir / "e.jsonl").string());
    std::string header;
    for (const auto& c : csv_columns()) header += (header.empty() ? "" : ",") + c;
    EXPECT_EQ(read_file(dir / "e.csv"), header + "\n");
    EXPECT_EQ(read_file(dir / "e.jsonl"), "");

    std::vector<ReportRecord> many;
    for (u64 i = 0; i < 10000; ++i) many.push_back(base_record("gv", 13, 3, 3, "", i));
    emit_report(many, ReportFormat::jsonl, (dir / "m.jsonl").string());
    emit_report(many, ReportFormat::csv, (dir / "m.csv").string());
    const auto text = read_file(dir / "m.jsonl");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10000);
    const auto csv = read_file(dir / "m.csv");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10001);

    const auto cfg = cfg_from(R"({"primes":{"range":[5,50]},"inequalities":["gv","growth"],"seed":9})");
    emit_report(run_sweep(cfg).records, ReportFormat::jsonl, (dir / "a.jsonl").string());
    emit_report(run_sweep(cfg).records, ReportFormat::jsonl, (dir / "b.jsonl").string());
    EXPECT_EQ(read_file(dir / "a.jsonl"), read_file(dir / "b.jsonl"));
    std::filesystem::remove_all(dir);

    try {
        emit_report(many, ReportFormat::jsonl, "/nonexistent-dir/x.jsonl");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::io_error);
    }
}

TEST(ReportRecord, KeysSortedAndCsvEscaped) {
    auto r = base_record("t2", 13, 3, 3, "x+y", 7);
    r["error"] = "a,\"b\"";
    const auto line = r.dump();
    EXPECT_LT(line.find("\"clause\""), line.find("\"error\""));
    EXPECT_LT(line.find("\"error\""), line.find("\"schema\""));
    const auto csv = render_report({r}, ReportFormat::csv);
    EXPECT_NE(csv.find("\"a,\"\"b\"\"\""), std::string::npos);
    EXPECT_THROW((void)parse_format("xml"), Error);
}
