#include "innerpost/cli.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace innerpost;
using namespace innerpost::testing;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

CliRun on(const std::string& command, const std::string& file, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{command, "--input", data_path(file)};
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
}

std::string temp_file(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Cli, ExitCodesOnDataFiles) {
    EXPECT_EQ(on("check-postlie", "sl2.post").code, exit_code::ok);
    EXPECT_EQ(on("check-lie", "sl2.rbl").code, exit_code::ok);
    EXPECT_EQ(on("obstruction", "sl2.post").code, exit_code::ok);
    EXPECT_EQ(on("obstruction", "solvable_beta1.post").code, exit_code::ok);
    EXPECT_EQ(on("obstruction", "heisenberg_half.post").code, exit_code::class_nontrivial);
    EXPECT_EQ(on("innerness", "abelian_outer.post").code, exit_code::not_inner);
    EXPECT_EQ(on("obstruction", "abelian_outer.post").code, exit_code::not_inner);
    EXPECT_EQ(on("tower", "sl2.rbl", {"--depth", "3"}).code, exit_code::ok);
    EXPECT_EQ(on("check-group", "d4.grp").code, exit_code::ok);
    EXPECT_EQ(on("check-postgroup", "z4_outer.pgrp").code, exit_code::ok);
    EXPECT_EQ(on("group-obstruction", "z4_outer.pgrp").code, exit_code::not_inner);
    EXPECT_EQ(on("group-obstruction", "s3_inverse.rbg").code, exit_code::ok);
    EXPECT_EQ(on("group-tower", "s3_inverse.rbg").code, exit_code::ok);
    EXPECT_EQ(on("enumerate-rb", "s3.grp").code, exit_code::ok);
    EXPECT_EQ(on("enumerate-rb", "d4.grp", {"--cap", "5"}).code, exit_code::failure);
    EXPECT_EQ(run({"diff-cocycle", "--a", data_path("sl2.rbl"), "--b", data_path("sl2.rbl")}).code, exit_code::ok);
}

TEST(Cli, ParseAndUsageErrors) {
    EXPECT_EQ(on("check-lie", "no_such.lie").code, exit_code::parse);
    EXPECT_EQ(run({"no-such-command"}).code, exit_code::parse);
    EXPECT_EQ(run({"check-lie"}).code, exit_code::parse);
    const std::string bad = temp_file("bad.lie", "kind lie\ndim 2\n[1,3] = e1\n");
    const CliRun r = run({"check-lie", "--input", bad});
    EXPECT_EQ(r.code, exit_code::parse);
    EXPECT_NE(r.out.find(":3:"), std::string::npos) << r.out;
    EXPECT_EQ(on("check-group", "sl2.post").code, exit_code::parse);
}

TEST(Cli, AxiomViolations) {
    const std::string jac = temp_file("nojacobi.lie", "kind lie\ndim 3\n[1,2] = e1\n[2,3] = e2\n");
    EXPECT_EQ(run({"check-lie", "--input", jac}).code, exit_code::axiom);
    const std::string post = temp_file("badpost.post", "kind postlie\ndim 2\n[1,2] = e2\n1>1 = e1\n");
    EXPECT_EQ(run({"check-postlie", "--input", post}).code, exit_code::axiom);
    const std::string rb = temp_file("notrb.rbl", "kind rb-lie\ndim 3\n[1,2] = e3\n[2,3] = e1\n[3,1] = e2\n"
                                                  "R\ne1 -> e1\ne2 -> e2\ne3 -> e3\n");
    EXPECT_EQ(run({"obstruction", "--input", rb}).code, exit_code::axiom);
}

TEST(Cli, ObstructionReportsPaperValues) {
    const CliRun sl = on("obstruction", "sl2.post", {"--format", "machine"});
    const auto j = nlohmann::json::parse(sl.out);
    EXPECT_EQ(j["command"], "obstruction");
    EXPECT_EQ(j["exit_code"], 0);
    const CliRun sol = on("obstruction", "solvable_beta1.post");
    EXPECT_NE(sol.out.find("-e3"), std::string::npos) << sol.out;
    const CliRun half = on("obstruction", "heisenberg_half.post");
    EXPECT_NE(half.out.find("1/4*e3"), std::string::npos) << half.out;
}

TEST(Cli, MachineFormatIsJson) {
    for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
             {"check-lie", "sl2.rbl"},
             {"innerness", "sl2.post"},
             {"tower", "sl2.rbl"},
             {"check-group", "s3.grp"},
             {"group-obstruction", "s3_inverse.rbg"},
             {"group-tower", "s3_inverse.rbg"},
             {"enumerate-rb", "s3.grp"}}) {
        const CliRun r = on(cmd, file, {"--format", "machine"});
        nlohmann::json j;
        ASSERT_NO_THROW(j = nlohmann::json::parse(r.out)) << cmd;
        EXPECT_EQ(j["exit_code"], r.code);
        EXPECT_TRUE(j["verdicts"].is_array());
    }
    const auto j = nlohmann::json::parse(on("enumerate-rb", "s3.grp", {"--format", "machine"}).out);
    EXPECT_EQ(j["data"]["count"], 8);
}

TEST(Cli, OutputIsDeterministic) {
    for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
             {"obstruction", "solvable_beta1.post"}, {"tower", "sl2.rbl"}, {"enumerate-rb", "d4.grp"}}) {
        const CliRun a = on(cmd, file), b = on(cmd, file);
        EXPECT_EQ(a.out, b.out) << cmd;
        EXPECT_EQ(a.code, b.code);
    }
    const CliRun s1 = run({"search", "--seed", "5", "--samples", "50"});
    const CliRun s2 = run({"search", "--seed", "5", "--samples", "50"});
    EXPECT_EQ(s1.out, s2.out);
    EXPECT_EQ(s1.code, exit_code::ok);
}

TEST(Cli, DiffCocycleAbsentForDifferentProducts) {
    const std::string zero = temp_file("zero.rbl", "kind rb-lie\ndim 3\n[1,2] = e3\n[2,3] = e1\n[3,1] = e2\nR\ne1 -> 0\n");
    const CliRun r = run({"diff-cocycle", "--a", zero, "--b", data_path("sl2.rbl")});
    EXPECT_EQ(r.code, exit_code::failure);
}
