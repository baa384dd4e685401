#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <sevencore/cache.hpp>
#include <sevencore/query.hpp>
#include <sevencore/records.hpp>

#include "support.hpp"

using namespace sevencore;

namespace
{

class temp_file
{
public:
    explicit temp_file(const std::string& stem)
        : path_(std::filesystem::temp_directory_path()
                / (stem + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-"
                   + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".jsonl"))
    {
        std::filesystem::remove(path_);
    }
    ~temp_file() { std::filesystem::remove(path_); }

    const std::filesystem::path& path() const { return path_; }

    void write(const std::string& text) const { std::ofstream(path_) << text; }

private:
    std::filesystem::path path_;
};

output_record integer_record(const integer& v)
{
    output_record rec;
    rec.command = "coeff";
    rec.inputs = {{"series", "M"}, {"n", 2}, {"route", "closed"}};
    rec.result = v;
    rec.elapsed_ms = 0.25;
    return rec;
}

} // namespace

// --- output records ---------------------------------------------------------

TEST(Records, IntegersAreDecimalStrings)
{
    const auto big = (integer(1) << 200) - 1;
    const auto j = to_json(integer_record(-big));
    EXPECT_EQ(j["result"]["value"], "-" + big.str());
    EXPECT_FALSE(schema_problem(j));
}

TEST(Records, KeyOrderIsStable)
{
    const auto text = to_json(integer_record(-3)).dump();
    EXPECT_EQ(text, R"({"command":"coeff","elapsed_ms":0.25,"inputs":{"n":2,"route":"closed","series":"M"},)"
                    R"("result":{"kind":"integer","value":"-3"},"version":"0.1.0"})");
}

TEST(Records, ScanReportRoundTrip)
{
    for (auto report : {check_theorem1(100), check_concluding(80), check_xc_positivity(50), check_ntp2(20)}) {
        output_record rec;
        rec.command = "verify";
        rec.inputs = {{"check", report.name}, {"range", report.range}};
        rec.result = report;
        const auto j = to_json(rec);
        ASSERT_FALSE(schema_problem(j)) << *schema_problem(j);
        const auto back = output_record_from_json(json::parse(j.dump()));
        EXPECT_EQ(back, rec);
        EXPECT_EQ(to_json(back).dump(), j.dump());
    }
}

TEST(Records, RandomIntegerRoundTrip)
{
    oracle::gen g(3);
    for (int i = 0; i < 200; ++i) {
        const auto rec = integer_record(g.big(unsigned(g.urange(1, 400))));
        EXPECT_EQ(output_record_from_json(json::parse(to_json(rec).dump())), rec);
    }
}

TEST(Records, CachedRoundTrip)
{
    output_record rec;
    rec.command = "scan";
    rec.result = cache_record{"nib", 100, "VERIFIED", {}, "2026-01-01T00:00:00Z", "0.1.0"};
    EXPECT_EQ(output_record_from_json(to_json(rec)), rec);
}

TEST(Records, SchemaRejectsMalformed)
{
    const auto good = to_json(integer_record(5));
    auto j = good;
    j.erase("version");
    EXPECT_TRUE(schema_problem(j));
    j = good;
    j["extra"] = 1;
    EXPECT_TRUE(schema_problem(j));
    j = good;
    j["command"] = "plot";
    EXPECT_TRUE(schema_problem(j));
    j = good;
    j["result"]["value"] = 5;
    EXPECT_TRUE(schema_problem(j));
    j = good;
    j["result"]["value"] = "12a";
    EXPECT_TRUE(schema_problem(j));
    j = good;
    j["result"]["kind"] = "series";
    EXPECT_TRUE(schema_problem(j));
    j = good;
    j["elapsed_ms"] = -1;
    EXPECT_TRUE(schema_problem(j));
    EXPECT_THROW(output_record_from_json(json::array()), error);
}

TEST(Records, SchemaFileDocumentsTheSameShape)
{
    std::ifstream in(SEVENCORE_SCHEMA_PATH);
    ASSERT_TRUE(in) << SEVENCORE_SCHEMA_PATH;
    const auto schema = json::parse(in);
    const auto required = schema.at("required").get<std::vector<std::string>>();
    const auto j = to_json(integer_record(1));
    EXPECT_EQ(required.size(), j.size());
    for (const auto& k : required) {
        EXPECT_TRUE(j.contains(k)) << k;
    }
}

TEST(Records, CsvProjection)
{
    EXPECT_EQ(std::string(csv_header()), "command,subject,n,value,status,exceptions,elapsed_ms,version");
    EXPECT_EQ(to_csv_row(integer_record(-3)), "coeff,M,2,-3,,,0.250,0.1.0");
    output_record rec;
    rec.command = "verify";
    rec.result = check_theorem1(40);
    EXPECT_EQ(to_csv_row(rec), "verify,theorem1,40,,VERIFIED,0 6 16,0.000,0.1.0");
    EXPECT_EQ(detail::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(detail::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

// --- cache -----------------------------------------------------------------

TEST(Cache, MissingFileIsEmpty)
{
    temp_file f("missing");
    scan_cache c(f.path());
    EXPECT_TRUE(c.records().empty());
    EXPECT_FALSE(c.find_verified("nib", 10));
}

TEST(Cache, AppendAndReload)
{
    temp_file f("append");
    {
        scan_cache c(f.path());
        c.append(make_cache_record(check_nib(100)));
        c.append(make_cache_record(check_concluding(100)));
    }
    scan_cache c(f.path());
    ASSERT_EQ(c.records().size(), 2U);
    EXPECT_TRUE(c.find_verified("nib", 100));
    EXPECT_FALSE(c.find_verified("nib", 200));
    EXPECT_FALSE(c.find_verified("concluding", 100)); // FAILED runs are never skipped
    EXPECT_EQ(c.records()[1].exceptions, (std::vector<std::uint64_t>{0, 1, 2, 4, 7, 11, 14, 22, 29, 58}));
    EXPECT_EQ(c.records()[0].version, version_string);
}

TEST(Cache, CorruptLineIsNamed)
{
    temp_file f("corrupt");
    const auto good = to_json(make_cache_record(check_nib(10))).dump();
    f.write(good + "\n\n" + good + "\n{\"check\": \"nib\"}\n");
    try {
        scan_cache c(f.path());
        FAIL() << "expected cache_corrupt";
    } catch (const cache_corrupt& e) {
        EXPECT_EQ(e.line(), 4U);
        EXPECT_NE(std::string(e.what()).find(":4:"), std::string::npos);
    }
    f.write(good + "\nnot json\n");
    try {
        scan_cache c(f.path());
        FAIL() << "expected cache_corrupt";
    } catch (const cache_corrupt& e) {
        EXPECT_EQ(e.line(), 2U);
    }
    f.write(R"({"check":"nib","range":10,"status":"MAYBE","exceptions":[],"timestamp":"x","version":"0.1.0"})");
    EXPECT_THROW(scan_cache{f.path()}, cache_corrupt);
}

TEST(Cache, TimestampFormat)
{
    const auto ts = utc_timestamp();
    ASSERT_EQ(ts.size(), 20U);
    EXPECT_EQ(ts[4], '-');
    EXPECT_EQ(ts[10], 'T');
    EXPECT_EQ(ts.back(), 'Z');
}

// --- coefficient routes ----------------------------------------------------

TEST(Routes, Names)
{
    EXPECT_EQ(parse_route("closed"), route::CLOSED);
    EXPECT_EQ(parse_route("oracle"), route::ORACLE);
    EXPECT_FALSE(parse_route("fast"));
    EXPECT_EQ(parse_coeff_series("psi3psi7_3"), coeff_series::PSI3PSI7_3);
    EXPECT_FALSE(parse_coeff_series("N"));
}

TEST(Routes, AllPermittedRoutesAgree)
{
    for (auto s : {coeff_series::L, coeff_series::K, coeff_series::M, coeff_series::PHI3PHI7_3,
                   coeff_series::PSI3PSI7_3, coeff_series::A_T}) {
        const std::uint64_t last = s == coeff_series::A_T ? 40 : 150;
        for (unsigned t : {2U, 7U, 11U}) {
            const auto routes = permitted_routes(s);
            const auto reference = coefficients(s, 0, last, t, routes.front());
            for (auto r : routes) {
                EXPECT_EQ(coefficients(s, 0, last, t, r), reference) << to_string(s) << " via " << to_string(r);
            }
            if (s != coeff_series::A_T) {
                break;
            }
        }
    }
}

TEST(Routes, SubRangesAndExamples)
{
    EXPECT_EQ(coefficients(coeff_series::M, 2, 2, 7, route::SERIES), (std::vector<integer>{-3}));
    EXPECT_EQ(coefficients(coeff_series::K, 3, 3, 7, route::ORACLE), (std::vector<integer>{8}));
    EXPECT_EQ(coefficients(coeff_series::A_T, 0, 0, 7, route::SERIES), (std::vector<integer>{1}));
    EXPECT_EQ(coefficients(coeff_series::PSI3PSI7_3, 0, 2, 7, route::CLOSED), (std::vector<integer>{1, 3, 3}));
    EXPECT_EQ(coefficients(coeff_series::L, 100, 103, 7, route::CLOSED),
              coefficients(coeff_series::L, 100, 103, 7, route::SERIES));
}

TEST(Routes, Errors)
{
    EXPECT_THROW(coefficients(coeff_series::A_T, 0, 5, 7, route::CLOSED), out_of_range);
    EXPECT_THROW(coefficients(coeff_series::A_T, 0, 5, 1, route::SERIES), out_of_range);
    EXPECT_THROW(coefficients(coeff_series::A_T, 61, 61, 7, route::ORACLE), too_large);
    EXPECT_THROW(coefficients(coeff_series::L, 5, 4, 7, route::CLOSED), out_of_range);
}
