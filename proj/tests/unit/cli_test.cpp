#include "cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string data(const std::string& name) { return std::string(MSOK_TEST_DATA) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = msok::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, CoverOfCompleteGraph)
{
    const auto r = run({"cover", data("k5.gr"), "-d", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "k 1\nclass 1: 1 2 3 4 5\n");
}

TEST(Cli, CoverJson)
{
    const auto r = run({"cover", data("c5_k3_blowup.gr"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["k"], 5);
    EXPECT_EQ(j["classes"].size(), 5U);
}

TEST(Cli, RankWidth)
{
    const auto r = run({"rankwidth", data("c5.gr")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "rank-width 2\n");
    const auto v = run({"rankwidth", data("c5.gr"), "--verbose"});
    EXPECT_NE(v.out.find("witness ("), std::string::npos) << v.out;
}

TEST(Cli, CheckVerdictsAndExitCodes)
{
    const auto t = run({"check", data("k3.gr"), data("has_edge.mso")});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "true\n");
    const auto f = run({"check", data("c5.gr"), data("two_colorable.mso")});
    EXPECT_EQ(f.code, 1);
    EXPECT_EQ(f.out, "false\n");
    const auto j = run({"check", data("c5.gr"), data("three_colorable.mso"), "--json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)["verdict"], true);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check", data("k3.gr")}).code, 2);
    EXPECT_EQ(run({"check", data("missing.gr"), data("has_edge.mso")}).code, 2);
    EXPECT_EQ(run({"check", data("k3.gr"), data("vertex_cover.mso")}).code, 2);
    EXPECT_EQ(run({"kernelize-opt", data("k34.gr"), data("vertex_cover.mso")}).code, 2);
    EXPECT_EQ(run({"cover", data("k3.gr"), "-d", "-1"}).code, 2);
    EXPECT_EQ(run({"solve", data("k3.gr"), data("vertex_cover.mso"), "--dir", "up"}).code, 2);
}

TEST(Cli, CapExceeded)
{
    const auto r = run({"kernelize-opt", data("k34.gr"), data("vertex_cover.mso"), "-r", "3"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--cap-rep"), std::string::npos) << r.err;
    EXPECT_EQ(run({"rankwidth", data("c5_k3_blowup.gr"), "--cap-rw", "4"}).code, 3);
}

TEST(Cli, KernelizeMcKeepsVerdict)
{
    const auto dir = std::filesystem::temp_directory_path() / "msok_cli_test";
    std::filesystem::create_directories(dir);
    const std::string kernel = (dir / "ids.kernel").string();
    const auto k = run({"kernelize-mc", data("c5_k3_blowup.gr"), data("independent_dominating_set.mso"), "-d", "1",
                        "-o", kernel});
    ASSERT_EQ(k.code, 0) << k.err;
    const auto a = run({"check", data("c5_k3_blowup.gr"), data("independent_dominating_set.mso")});
    const auto b = run({"check", kernel, data("independent_dominating_set.mso")});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
}

TEST(Cli, KernelizeOptThenSolve)
{
    const auto dir = std::filesystem::temp_directory_path() / "msok_cli_test";
    std::filesystem::create_directories(dir);
    const std::string kernel = (dir / "vc.kernel").string();
    const auto k = run({"kernelize-opt", data("k34.gr"), data("vertex_cover.mso"), "-r", "3", "--dir", "le",
                        "--cap-rep", "7", "-o", kernel});
    ASSERT_EQ(k.code, 0) << k.err;
    const auto s = run({"solve", kernel, data("vertex_cover.mso")});
    EXPECT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(s.out, "optimum 3\nverdict true\n");
    const auto direct = run({"solve", data("k34.gr"), data("vertex_cover.mso"), "-r", "2"});
    EXPECT_EQ(direct.code, 1);
    EXPECT_EQ(direct.out, "optimum 3\nverdict false\n");
}

TEST(Cli, AutoSolve)
{
    const auto r = run({"kernelize-opt", data("c5_k3_blowup.gr"), data("independent_set.mso"), "-r", "2", "--dir",
                        "ge", "--auto-solve"});
    EXPECT_EQ(r.code, 0) << r.err;
}
