#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "rrid/catalog.hpp"

using namespace rrid;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "rrid");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, VerifyExitCodes)
{
    EXPECT_EQ(run({"verify", "rr2", "--order", "100"}).code, exit_ok);
    EXPECT_EQ(run({"verify", "glaisher", "--modulus", "4", "--order", "80"}).code, exit_ok);
    EXPECT_EQ(run({"verify", "no-such-identity"}).code, exit_unknown_name);
    EXPECT_EQ(run({"verify", "glaisher"}).code, exit_bad_flags);
}

TEST(Cli, MismatchExitCode)
{
    const char *path = "rrid_cli_bad_catalog.json";
    {
        std::ofstream out(path);
        out << R"json({"format": "rrid-catalog/1", "entries": [{"name": "W", "identity": "w", "citation": "",
            "description": "", "product": {"modulus": 5, "residues": [1, 4]},
            "branches": [{"parity": "any", "first_n": 0, "u": "n", "S": "n*n + n",
            "pi": [{"value": "2*(n + 1 - s)"}]}]}]})json";
    }
    const auto r = run({"verify", "w", "--catalog", path});
    EXPECT_EQ(r.code, exit_mismatch);
    EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
    std::remove(path);
    EXPECT_EQ(run({"catalog", "--catalog", path}).code, exit_catalog);
}

TEST(Cli, BadFlags)
{
    EXPECT_EQ(run({"verify", "rr2", "--order", "0"}).code, exit_bad_flags);
    EXPECT_EQ(run({"verify", "rr2", "--format", "xml"}).code, exit_bad_flags);
    EXPECT_EQ(run({}).code, exit_bad_flags);
    EXPECT_EQ(run({"enumerate", "P2", "3"}).code, exit_bad_flags);
    EXPECT_EQ(run({"bijection", "rr2", "[3,x]"}).code, exit_bad_flags);
    EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, EnumerateWorkedExample)
{
    auto r = run({"enumerate", "example-hirschhorn", "3", "18"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "(7, 3, 3, 2, 2, 1)\n(6, 4, 3, 2, 2, 1)\n(5, 4, 4, 2, 2, 1)\n");
    r = run({"enumerate", "example-at-most", "3", "18"});
    EXPECT_EQ(r.out, "(18)\n(17, 1)\n(16, 1, 1)\n");
    r = run({"enumerate", "example-at-most", "3", "18", "--format", "machine"});
    EXPECT_EQ(r.out, "[18,0,0,0,0,0]\n[17,1,0,0,0,0]\n[16,1,1,0,0,0]\n");
    EXPECT_EQ(run({"enumerate", "example-at-most", "0", "0"}).out, "()\n");
    EXPECT_EQ(run({"enumerate", "example-hirschhorn", "1", "0"}).out, "");
    EXPECT_EQ(run({"enumerate", "nothing", "3", "18"}).code, exit_unknown_name);
    EXPECT_EQ(run({"enumerate", "appendix-b", "0", "3", "--branch", "1"}).code, exit_domain);
}

TEST(Cli, Bijections)
{
    auto r = run({"bijection", "glaisher", "--modulus", "2", "[7,6,4,2,1]"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "input: [7,6,4,2,1]\nstep 1: [7,3,3,2,2,1,1,1]\nstep 2: [7,3,3,1,1,1,1,1,1,1]\n"
                     "output: [7,3,3,1,1,1,1,1,1,1]\n");
    r = run({"bijection", "glaisher-inv", "--modulus", "2", "[7,3,3,1,1,1,1,1,1,1]"});
    EXPECT_NE(r.out.find("output: [7,6,4,2,1]\n"), std::string::npos);
    r = run({"bijection", "rr2", "[3,2]"});
    EXPECT_NE(r.out.find("c=[6,1]\nb=[5,2]\n"), std::string::npos);
    EXPECT_NE(r.out.find("N_b=7"), std::string::npos);
    r = run({"bijection", "rr2-inv", "[5,2]"});
    EXPECT_NE(r.out.find("a=[3,2]"), std::string::npos);
    r = run({"bijection", "profile", "[7,3,3,2,2,1]", "--from", "example-hirschhorn", "--to", "example-exact",
             "--n", "3"});
    EXPECT_NE(r.out.find("b=[13,1,1,1,1,1]"), std::string::npos);
}

TEST(Cli, DomainViolationsNamePosition)
{
    auto r = run({"bijection", "rr2", "[3,4]"});
    EXPECT_EQ(r.code, exit_domain);
    EXPECT_NE(r.err.find("position 2"), std::string::npos);
    r = run({"bijection", "rr2", "[5,2]"});
    EXPECT_EQ(r.code, exit_domain);
    EXPECT_NE(r.err.find("position 1"), std::string::npos);
    r = run({"bijection", "rr2-inv", "[5,4]"});
    EXPECT_EQ(r.code, exit_domain);
    EXPECT_EQ(run({"bijection", "teleport", "[1]"}).code, exit_unknown_name);
}

TEST(Cli, MachineBijectionOutputRoundTrips)
{
    const auto r = run({"bijection", "rr2", "[8,7,3]", "--format", "machine"});
    EXPECT_EQ(r.code, exit_ok);
    const auto line = r.out.substr(0, r.out.size() - 1);
    EXPECT_EQ(nlohmann::ordered_json::parse(line).dump(), line);
    EXPECT_NE(line.find("\"weight_relation\":true"), std::string::npos);
}

TEST(Cli, Series)
{
    auto r = run({"series", "product", "--residues", "2,3", "--modulus", "5", "--order", "8"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "0:1\n1:0\n2:1\n3:1\n4:1\n5:1\n6:2\n7:2\n");
    r = run({"series", "glaisher-sum", "--modulus", "2", "--order", "6"});
    EXPECT_EQ(r.out, "0:1\n1:1\n2:1\n3:2\n4:2\n5:3\n");
    r = run({"series", "sum", "--identity", "rr2", "--order", "8", "--format", "machine"});
    EXPECT_EQ(r.out, "[1,0,1,1,1,1,2,2]\n");
    r = run({"series", "profile", "--profile", "P4", "--order", "8", "--format", "machine"});
    EXPECT_EQ(r.out, "[1,0,1,1,1,1,2,2]\n");
    r = run({"series", "alpha", "--modulus", "3", "--n", "1", "--order", "4", "--format", "machine"});
    EXPECT_EQ(r.out, "[0,1,1,0]\n");
    EXPECT_EQ(run({"series", "euler-sum", "--order", "6", "--format", "machine"}).out, "[1,1,1,2,2,3]\n");
    EXPECT_EQ(run({"series", "mystery"}).code, exit_unknown_name);
    EXPECT_EQ(run({"series", "product", "--modulus", "5"}).code, exit_bad_flags);
}

TEST(Cli, Catalog)
{
    auto r = run({"catalog"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("23 entries"), std::string::npos);
    r = run({"catalog", "--dump"});
    EXPECT_EQ(r.out, std::string(builtin_catalog_text()));
    r = run({"catalog", "--format", "machine"});
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        EXPECT_EQ(nlohmann::ordered_json::parse(line).dump(), line);
        ++count;
    }
    EXPECT_GE(count, 20);
}

TEST(Cli, VerifyMachineOutputIsDeterministic)
{
    const auto a = run({"verify", "euler", "rr2", "--format", "machine", "--order", "40"});
    const auto b = run({"verify", "rr2", "euler", "--format", "machine", "--order", "40"});
    EXPECT_EQ(a.code, exit_ok);
    EXPECT_EQ(a.out, b.out);
}
