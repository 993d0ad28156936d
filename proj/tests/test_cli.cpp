#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include <json.hpp>

#include "skein/parse.hpp"
#include "skein/trace.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(SKEIN_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(BraidWordParser, Accepts) {
    EXPECT_EQ(parse_braid_word("1 -2 1 -2"), (std::vector<int>{1, -2, 1, -2}));
    EXPECT_EQ(parse_braid_word("  3\t1 "), (std::vector<int>{3, 1}));
    EXPECT_TRUE(parse_braid_word("").empty());
}

TEST(BraidWordParser, RejectsNamingTheToken) {
    try {
        parse_braid_word("1 x2 3");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "x2");
    }
    EXPECT_THROW(parse_braid_word("1 0"), ParseError);
    EXPECT_THROW(parse_braid_word("1.5"), ParseError);
}

TEST(ElementParser, Grammar) {
    EXPECT_EQ(parse_element("h2"), h(2));
    EXPECT_EQ(parse_element("h1*h1 - h2"), elementary(2));
    EXPECT_EQ(parse_element("e2"), elementary(2));
    EXPECT_EQ(parse_element("p3"), power_sum(3));
    EXPECT_EQ(parse_element("s(2,1)"), schur(Partition{2, 1}));
    EXPECT_EQ(parse_element("s( 1 , 1 )"), elementary(2));
    EXPECT_EQ(parse_element("3*h1 + 2"), h(1) * Scalar(3) + SymFunc::constant(2));
    EXPECT_EQ(parse_element("-h1*2*h1"), -(h(1) * h(1) * Scalar(2)));
    EXPECT_EQ(parse_element("h0"), SymFunc::constant(1));
}

TEST(ElementParser, Errors) {
    auto token_of = [](const std::string& text) {
        try {
            parse_element(text);
        } catch (const ParseError& e) {
            return e.token();
        }
        return std::string("<no error>");
    };
    EXPECT_EQ(token_of("h2 + q3"), "q3");
    EXPECT_EQ(token_of("hx"), "hx");
    EXPECT_EQ(token_of("s(1,2)"), "s(1,2)");
    EXPECT_EQ(token_of("p0"), "p0");
    EXPECT_EQ(token_of("h1 h2"), "h2");
    EXPECT_THROW(parse_element(""), ParseError);
    EXPECT_THROW(parse_element("h1 +"), ParseError);
    EXPECT_THROW(parse_element("s(2,1"), ParseError);
}

TEST(Verify, EveryIdPassesAtSmallSize) {
    for (const auto& id : verify_ids()) {
        if (id == "all") continue;
        VerifyReport r = run_verify(id, 3, 3);
        EXPECT_TRUE(r.passed) << id << "\n" << r.to_text();
        EXPECT_FALSE(r.details.empty()) << id;
        auto j = r.to_json();
        EXPECT_EQ(j["theorem"], id);
        EXPECT_EQ(j["status"], "pass");
        EXPECT_TRUE(j.contains("elapsed_ms"));
    }
}

TEST(Verify, RejectsUnknownIdsAndBounds) {
    EXPECT_THROW(run_verify("nope", 3, 3), std::invalid_argument);
    EXPECT_THROW(run_verify("ah", 7, 3), std::invalid_argument);
    EXPECT_THROW(run_verify("ah", 3, 0), std::invalid_argument);
}

TEST(Verify, PhiDistinctListsElevenValuesAtSix) {
    VerifyReport r = run_verify("phi-distinct", 6, 1);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.details.front().info.size(), 11u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("verify murphy-linear --n 4").code, 0);
    EXPECT_EQ(run_cli("verify ah --degree 4").code, 0);
    EXPECT_EQ(run_cli("verify no-such-theorem").code, 2);
    EXPECT_EQ(run_cli("verify ah --n 99").code, 2);
    EXPECT_EQ(run_cli("").code, 2);
    EXPECT_EQ(run_cli("homfly --strands 2 --word '1 z'").code, 2);
    EXPECT_EQ(run_cli("homfly --strands 2 --word '3'").code, 2);
    EXPECT_EQ(run_cli("psi --n 2 --elem 'h1 + k'").code, 2);
}

TEST(Cli, HomflyJson) {
    CliRun r = run_cli("homfly --strands 2 --word '1 1 1'");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["writhe"], 3);
    EXPECT_EQ(scalar_from_json(j["polynomial"]), homfly(2, std::vector<int>{1, 1, 1}).polynomial);
}

TEST(Cli, OtherCommandsProduceJson) {
    auto closure = nlohmann::json::parse(run_cli("closure --strands 2 --word 1").out);
    EXPECT_EQ(closure["basis"], "schur");
    EXPECT_EQ(closure["terms"].size(), 2u);
    auto ev = nlohmann::json::parse(run_cli("eval --elem h1").out);
    EXPECT_EQ(scalar_from_json(ev), sym::delta());
    auto table = nlohmann::json::parse(run_cli("characters --n 3").out);
    EXPECT_EQ(table.size(), 3u);
    auto p = nlohmann::json::parse(run_cli("psi --n 2 --elem h1").out);
    EXPECT_EQ(hecke_from_json(p), t_circle(2));
}

TEST(Cli, OutputIsDeterministic) {
    for (const char* args : {"characters --n 4", "psi --n 3 --elem 's(2,1)'", "closure --strands 3 --word '1 -2'"}) {
        CliRun a = run_cli(args), b = run_cli(args);
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Cli, PrettyAndOutFile) {
    CliRun r = run_cli("homfly --strands 2 --word '1 1 1' --pretty");
    EXPECT_NE(r.out.find("writhe 3"), std::string::npos);
    const std::string path = ::testing::TempDir() + "skein_cli_out.json";
    ASSERT_EQ(run_cli("eval --elem h1 --out " + path).code, 0);
    FILE* f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    std::fclose(f);
}
