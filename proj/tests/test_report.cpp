#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "bvhodge/error.hpp"
#include "bvhodge/report.hpp"

using namespace bvhodge;
using nlohmann::json;

namespace {

const json worked = json::parse(R"({"order":4,"invariants":{"r":11,"m":3,"k":2,"a":1,"b":3,"n1":6,"n2":0,
                                    "g_D":1,"D_type":"first"}})");

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BVHODGE_CLI_PATH) + " " + args + " 2>&1";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return (std::filesystem::path(BVHODGE_FIXTURE_DIR) / (name + ".json")).string();
}

}  // namespace

TEST(ParseConfig, Order2Invariants) {
    const auto cfg = parse_config(json::parse(R"({"order":2,"invariants":{"r":9,"curve_genera":[3,0]}})"));
    EXPECT_EQ(cfg.order, 2);
    EXPECT_EQ(cfg.eigenspace.dims, (std::vector<Count>{9, 13}));
}

TEST(ParseConfig, WorkedOrder4) {
    const auto cfg = parse_config(worked);
    Order4Invariants inv;
    inv.r = 11;
    inv.m = 3;
    inv.k = 2;
    inv.a = 1;
    inv.b = 3;
    inv.n1 = 6;
    inv.g_D = 1;
    const auto expected = from_invariants_order4(inv);
    EXPECT_EQ(cfg.records, expected.records);
    EXPECT_EQ(cfg.eigenspace, expected.eigenspace);
}

TEST(ParseConfig, UnsupportedOrder) {
    try {
        parse_config(json::parse(R"({"order":5,"invariants":{}})"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("unsupported order"), std::string::npos);
    }
}

TEST(ParseConfig, SchemaErrors) {
    EXPECT_THROW(parse_config_text("{"), ParseError);
    EXPECT_THROW(parse_config_text(R"({"invariants":{}})"), ParseError);
    EXPECT_THROW(parse_config_text(R"({"order":2,"invariants":{"r":9,"curve_genera":[]},"extra":1})"), ParseError);
    EXPECT_THROW(parse_config_text(R"({"order":2,"invariants":{"r":"9","curve_genera":[]}})"), ParseError);
    EXPECT_THROW(parse_config_text(R"({"order":2,"invariants":{"r":9,"curve_genera":[],"x":0}})"), ParseError);
    EXPECT_THROW(parse_config_text(R"({"order":2})"), ParseError);
    EXPECT_THROW(parse_config_text(R"({"order":2,"invariants":{"r":9,"curve_genera":[]},
                                       "raw":{"eigenspace_dims":[9,13],"subgroups":[]}})"),
                 ParseError);
    EXPECT_THROW(parse_config_text(R"({"order":4,"invariants":{"r":11,"m":3,"k":2,"a":1,"b":3,"n1":6,"n2":0,
                                       "g_D":1,"D_type":"third"}})"),
                 ParseError);
}

TEST(ParseConfig, RawForm) {
    const auto cfg = parse_config_text(R"({"order":4,"raw":{"eigenspace_dims":[11,3,5,3],"subgroups":[
        {"order":4,"curves":[{"genus":1},{"genus":0}],"points":[{"type":[2,3],"count":6}]}]}})");
    EXPECT_EQ(cfg.order, 4);
    EXPECT_FALSE(cfg.invariants.has_value());
    ASSERT_EQ(cfg.record(4).curves.size(), 2u);
    EXPECT_EQ(cfg.record(4).curves[0].quotient_genus, 1);
    EXPECT_EQ(cfg.record(4).points[0].count, 6);
}

TEST(Run, WorkedInstanceReport) {
    const auto r = run(worked);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.h11, 51);
    EXPECT_EQ(r.h21, 9);
    EXPECT_EQ(r.euler, 84);
    ASSERT_TRUE(r.closed_form.has_value());
    EXPECT_EQ(*r.closed_form, (HodgePair{51, 9}));
    EXPECT_EQ(r.closed_form_euler, 84);
    EXPECT_FALSE(r.checks.empty());
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Run, RawConfigHasNoClosedForm) {
    const auto r = run(json::parse(R"({"order":2,"raw":{"eigenspace_dims":[10,12],"subgroups":[]}})"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_FALSE(r.closed_form.has_value());
    EXPECT_NE(r.closed_form_status.find("not applicable"), std::string::npos);
}

TEST(Run, ValidationFailureSkipsComputation) {
    const auto r = run(json::parse(R"({"order":2,"raw":{"eigenspace_dims":[10,11],"subgroups":[]}})"));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_FALSE(r.diamond.has_value());
    EXPECT_TRUE(has_errors(r.violations));
}

TEST(Run, InconsistentDataGivesCheckMismatch) {
    const auto r = run(json::parse(R"({"order":3,"invariants":{"r":4,"m":9,"k":2,"n_points":3,"g_C":2}})"));
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_EQ(r.h11, 26);
    EXPECT_EQ(r.h21, 20);
}

TEST(Run, NoChecksSkipsMismatchExit) {
    const auto r = run(json::parse(R"({"order":3,"invariants":{"r":4,"m":9,"k":2,"n_points":3,"g_C":2}})"),
                       RunOptions{false});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_FALSE(r.checks_enabled);
    EXPECT_TRUE(r.checks.empty());
}

TEST(Run, Order6CorollaryIsInformational) {
    const auto r = run(json::parse(R"({"order":6,"invariants":{"r":2,"m":4,"l":1,"k":1,"N":1,"a":0,"b":0,
        "n_prime":0,"p25":0,"p34":0,"g_D":1,"g_G":1,"g_G_quot":1,"g_F1":1,"g_F1_quot":1}})"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.h11, 11);
    EXPECT_EQ(r.h21, 11);
    ASSERT_TRUE(r.corollary.has_value());
    EXPECT_EQ(*r.corollary, 2);
}

TEST(Emit, TextPictogramAndSummary) {
    const auto text = emit(run(worked), Format::text);
    EXPECT_NE(text.find(" 1    9    9    1"), std::string::npos);
    EXPECT_NE(text.find("h11 = 51  h21 = 9  e = 84"), std::string::npos);
    EXPECT_NE(text.find("status: ok"), std::string::npos);
    const auto empty = emit(run(json::parse(R"({"order":2,"invariants":{"r":10,"curve_genera":[]}})")), Format::text);
    EXPECT_NE(empty.find("h11 = 11"), std::string::npos);
}

TEST(Emit, DiamondRows) {
    HodgeDiamond h(3);
    for (int p : {0, 3}) {
        h.set(p, 0, 1);
        h.set(p, 3, 1);
    }
    h.set(1, 1, 51);
    h.set(2, 2, 51);
    h.set(1, 2, 9);
    h.set(2, 1, 9);
    std::istringstream in(diamond_pictogram(h));
    std::vector<std::string> rows;
    for (std::string line; std::getline(in, line);) {
        std::istringstream words(line);
        std::string row, w;
        while (words >> w) row += (row.empty() ? "" : " ") + w;
        rows.push_back(row);
    }
    EXPECT_EQ(rows, (std::vector<std::string>{"1", "0 0", "0 51 0", "1 9 9 1", "0 51 0", "0 0", "1"}));
}

TEST(Emit, JsonRoundTrip) {
    for (const auto& entry : std::filesystem::directory_iterator(BVHODGE_FIXTURE_DIR)) {
        if (entry.path().stem() == "error_malformed") continue;
        const auto r = run(parse_document(read_file(entry.path())));
        EXPECT_EQ(report_from_json(json::parse(emit(r, Format::json))), r) << entry.path();
    }
}

TEST(Emit, Deterministic) {
    const auto a = emit(run(worked), Format::json);
    const auto b = emit(run(json::parse(worked.dump())), Format::json);
    EXPECT_EQ(a, b);
    EXPECT_EQ(emit(run(worked), Format::text), emit(run(worked), Format::text));
}

TEST(Cli, BundledFixturesExitZeroDeterministically) {
    for (const auto* name : {"order2_enriques", "order2_genera_3_0", "order3_consistent", "order4_first_type",
                             "order4_raw_first_type", "order6_elliptic_D"}) {
        for (const auto* format : {"text", "json"}) {
            const auto first = run_cli(std::string("--fixture ") + name + " --format " + format);
            const auto second = run_cli(std::string("--input ") + fixture(name) + " --format " + format);
            EXPECT_EQ(first.exit_code, 0) << name << "\n" << first.out;
            EXPECT_EQ(first.out, second.out) << name;
        }
    }
}

TEST(Cli, ErrorExitCodes) {
    EXPECT_EQ(run_cli("--fixture error_malformed").exit_code, 1);
    EXPECT_EQ(run_cli("--fixture error_invalid_dims").exit_code, 2);
    EXPECT_EQ(run_cli("--fixture error_inconsistent_order3").exit_code, 3);
    EXPECT_EQ(run_cli("--fixture error_inconsistent_order3 --no-checks").exit_code, 0);
    EXPECT_NE(run_cli("--fixture no_such_fixture").exit_code, 0);
}

TEST(Cli, StdinAndListing) {
    const auto piped = run_cli("--format json < " + fixture("order4_first_type"));
    EXPECT_EQ(piped.exit_code, 0);
    EXPECT_EQ(json::parse(piped.out).at("engine").at("h11"), 51);
    const auto listing = run_cli("--list-fixtures");
    EXPECT_EQ(listing.exit_code, 0);
    EXPECT_NE(listing.out.find("order4_first_type"), std::string::npos);
}

TEST(Cli, JsonMatchesLibrary) {
    const auto out = run_cli("--input " + fixture("order4_first_type") + " --format json").out;
    EXPECT_EQ(out, emit(run(parse_document(read_file(fixture("order4_first_type")))), Format::json));
}
