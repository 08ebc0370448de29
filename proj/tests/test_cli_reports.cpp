#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <rbeta/verify.hpp>

using namespace rbeta;

TEST(Record, PassIffWithinEitherTolerance) {
    Tolerance t(1e-6, 1e-3);
    EXPECT_TRUE(make_record("x", {}, 1.0 + 5e-7, 1.0, t).pass);
    EXPECT_TRUE(make_record("x", {}, 1000.5, 1000.0, t).pass);
    EXPECT_FALSE(make_record("x", {}, 1.01, 1.0, t).pass);
    auto f = failed_record("x", {}, t, "PoleError: boom");
    EXPECT_FALSE(f.pass);
    EXPECT_EQ(f.note, "PoleError: boom");
    auto z = make_record("x", {}, 1e-20, 0.0, Tolerance(1e-12, 0.0));
    EXPECT_TRUE(z.pass);
    EXPECT_TRUE(std::isinf(z.rel_gap));
}

TEST(RecordProperty, InvariantAcrossSuite) {
    SuiteConfig c;
    c.suite = "classical-beta";
    c.seed = 3;
    c.draws_per_identity = 1;
    auto rep = run_suite(c);
    ASSERT_FALSE(rep.records.empty());
    for (const auto& r : rep.records) {
        EXPECT_EQ(r.pass, r.abs_gap <= r.tol.abs || r.rel_gap <= r.tol.rel) << r.identity_id;
        EXPECT_GE(r.abs_gap, 0.0);
    }
    EXPECT_EQ(rep.summary.total, rep.records.size());
    EXPECT_EQ(rep.summary.passed + rep.summary.failed, rep.summary.total);
}

TEST(Report, JsonSchema) {
    SuiteConfig c;
    c.suite = "classical-beta";
    c.seed = 5;
    c.draws_per_identity = 1;
    c.tol["RamanujanM2"] = Tolerance(1e-9, 1e-9);
    auto j = report_json(run_suite(c));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["tool_version"], tool_version);
    for (const char* k : {"config", "summary", "records"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["config"]["seed"], 5);
    EXPECT_EQ(j["config"]["tol"]["RamanujanM2"]["rel"], 1e-9);
    const auto& r = j["records"][0];
    for (const char* k : {"identity_id", "inputs", "lhs", "rhs", "abs_gap", "rel_gap", "tol", "pass", "runtime_ms", "note"})
        EXPECT_TRUE(r.contains(k)) << k;
    EXPECT_TRUE(r["lhs"].contains("re"));
}

TEST(Report, CsvHeaderAndRows) {
    std::vector<VerificationRecord> rs{make_record("a,b", {{"x", {1.0, -2.0}}}, 1.0, 1.0, Tolerance())};
    std::string csv = records_csv(rs);
    std::istringstream in(csv);
    std::string head, row;
    std::getline(in, head);
    std::getline(in, row);
    EXPECT_EQ(head, "identity_id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,abs_gap,rel_gap,tol_abs,tol_rel,pass,runtime_ms,note");
    EXPECT_EQ(row.substr(0, 15), "\"a,b\",x=1-2i,1,");
}

TEST(Report, DeterministicApartFromRuntime) {
    SuiteConfig c;
    c.suite = "classical-beta";
    c.seed = 11;
    c.draws_per_identity = 2;
    auto strip = [](nlohmann::json j) {
        for (auto& r : j["records"]) r.erase("runtime_ms");
        return j.dump();
    };
    EXPECT_EQ(strip(report_json(run_suite(c))), strip(report_json(run_suite(c))));
    auto d = c;
    d.seed = 12;
    EXPECT_NE(strip(report_json(run_suite(c))), strip(report_json(run_suite(d))));
}

TEST(Suite, UnknownAndBadDraws) {
    SuiteConfig c;
    c.suite = "nope";
    EXPECT_THROW(run_suite(c), UnknownSuite);
    c.suite = "limits";
    c.draws_per_identity = -1;
    EXPECT_THROW(run_suite(c), PreconditionError);
}

TEST(Parse, Complex) {
    EXPECT_EQ(parse_complex("1.5"), Complex(1.5));
    EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
    EXPECT_EQ(parse_complex("1-2i"), Complex(1.0, -2.0));
    EXPECT_EQ(parse_complex("1e-3+2e+1i"), Complex(1e-3, 20.0));
    EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
    EXPECT_EQ(parse_complex("pi"), Complex(pi));
    EXPECT_TRUE(std::isinf(parse_complex("inf").real()));
    EXPECT_THROW(parse_complex("0.3x"), ParseError);
    EXPECT_THROW(parse_complex(""), ParseError);
    auto v = parse_complex_list("0.1,0.2+0.3i,-1");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[1], Complex(0.2, 0.3));
    EXPECT_THROW(parse_complex_list("1,"), ParseError);
}

TEST(Io, WriteAtomic) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "rbeta_io_test";
    fs::create_directories(dir);
    fs::path p = dir / "out.json";
    write_atomic(p.string(), "first");
    write_atomic(p.string(), "second");
    std::ifstream f(p);
    std::string s((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_EQ(s, "second");
    EXPECT_FALSE(fs::exists(dir / "out.json.tmp"));
    fs::remove_all(dir);
    EXPECT_THROW(write_atomic("/nonexistent-dir/x.json", "x"), IoError);
}
