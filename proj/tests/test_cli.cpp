#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "slp/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = slp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST(Cli, Gen) {
    auto r = run({"gen", "fib:7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "abaababaabaab\n");
    EXPECT_EQ(run({"gen", "p:3@ba"}).out, "babaa\n");
    EXPECT_EQ(run({"gen", "q:2"}).out, "aab\n");
}

TEST(Cli, Factorizations) {
    EXPECT_EQ(run({"lz", "fib:7"}).out, "a|b|a|aba|baaba|ab\n");
    EXPECT_EQ(run({"sg", "fib:7"}).out, "a|b|a|ab|abaab|aab\n");
    EXPECT_EQ(run({"cfact", "aaaa"}).out, "a|aaa\n");
    auto json = nlohmann::json::parse(run({"lz", "ababaabaaba", "--format", "json"}).out);
    EXPECT_EQ(json["phrases"].size(), 6u);
}

TEST(Cli, RepairAllCount) {
    auto r = run({"repair-all", "fib:11", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 8u);
}

TEST(Cli, RepairRoundTrip) {
    auto path = testing::TempDir() + "/slpkit_roundtrip.json";
    {
        std::ofstream f(path);
        f << run({"repair", "fib:9", "--format", "json"}).out;
    }
    auto r = run({"expand", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, run({"gen", "fib:9"}).out);
    auto g = run({"gfact", path});
    EXPECT_EQ(g.code, 0);
    std::remove(path.c_str());
}

TEST(Cli, RepairTrace) {
    auto r = run({"repair", "fib:6", "--trace"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("--["), std::string::npos);
}

TEST(Cli, Oracle) {
    auto r = run({"oracle", "aba", "--enumerate", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto out = lines(r.out);
    ASSERT_EQ(out.size(), 3u);
    auto summary = nlohmann::json::parse(out[0]);
    EXPECT_EQ(summary["g_star"], 4);
    EXPECT_EQ(summary["count"], 2);
    EXPECT_EQ(summary["lower_bound"], 4);
}

TEST(Cli, OracleBudgetExit) {
    auto r = run({"oracle", "abcabcabcaabbccabcb", "--budget", "1"});
    EXPECT_EQ(r.code, slp::cli::resource_error);
    EXPECT_NE(r.err.find("["), std::string::npos);
}

TEST(Cli, Graph) {
    auto r = run({"graph", "11", "--format", "dot"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("digraph"), std::string::npos);
    EXPECT_EQ(run({"graph", "4"}).code, slp::cli::usage_error);
}

TEST(Cli, Verify) {
    auto r = run({"verify", "--claims", "lemma1,claim1", "--nmax", "10"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    auto failing = run({"verify", "--claims", "fact1"});
    EXPECT_EQ(failing.code, slp::cli::check_failed);
    EXPECT_EQ(run({"verify", "--claims", "bogus"}).code, slp::cli::usage_error);
    EXPECT_NE(run({"verify", "--list"}).out.find("case16"), std::string::npos);
}

TEST(Cli, Errors) {
    EXPECT_EQ(run({"frobnicate"}).code, slp::cli::usage_error);
    EXPECT_EQ(run({"gen", "fib:0"}).code, slp::cli::usage_error);
    EXPECT_EQ(run({"gen", "fib:80"}).code, slp::cli::resource_error);
    EXPECT_EQ(run({"expand", "/nonexistent/grammar.json"}).code, slp::cli::usage_error);
}
