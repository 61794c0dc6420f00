#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

#ifndef ADJINV_DATA_DIR
#error "ADJINV_DATA_DIR must point at the data directory"
#endif

namespace adjinv::cli {
namespace {

const std::string example1 = ADJINV_DATA_DIR "/example1.mat";
const std::string example2 = ADJINV_DATA_DIR "/example2.mat";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, SolveLsqPrintsExactSolution) {
    const Result r = run({"solve-lsq", example1, "--rhs", "1 2 3 1"});
    EXPECT_EQ(r.code, ok);
    EXPECT_EQ(r.out,
              "# method: eq14 denominator: 102060 transformed_rhs: (26, -24, 10, -23)\n"
              "(12193/17010, -416/1701, 5/9, 5693/8505)\n");
}

TEST(Cli, SolveDrazinAndIndex) {
    const Result s = run({"solve-drazin", example2, "--rhs", "1 2 3 1"});
    EXPECT_EQ(s.code, ok);
    EXPECT_NE(s.out.find("(1/2, 1, 1, 1/2)\n"), std::string::npos);
    const Result i = run({"index", example2});
    EXPECT_EQ(i.out, "2\n");
    EXPECT_EQ(run({"rank", example1}).out, "3\n");
}

TEST(Cli, PinvOutputReparses) {
    const Result r = run({"pinv", example1, "--method", "eq2"});
    ASSERT_EQ(r.code, ok);
    EXPECT_EQ(r.out.rfind("# method: eq2 denominator: 102060\n", 0), 0u);
    const Matrix x = parse_matrix(r.out);
    EXPECT_EQ(x, mp_inverse(examples::system1_matrix()).pseudo_inverse);
}

TEST(Cli, JsonOutput) {
    const Result r = run({"drazin", example2, "--json"});
    ASSERT_EQ(r.code, ok);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["index"], 2);
    EXPECT_EQ(j["denominator"], "8");
    EXPECT_EQ(j["entries"][1][0], "7/4");
    const Result s = run({"solve-lsq", example1, "--rhs", "1 2 3 1", "--json"});
    const auto js = nlohmann::json::parse(s.out);
    EXPECT_EQ(js["numerators"][1], "-24960");
    EXPECT_EQ(js["entries"][1][0], "-416/1701");
}

TEST(Cli, DecimalOutput) {
    const Result r = run({"solve-lsq", example1, "--rhs", "1 2 3 1", "--decimal", "6"});
    EXPECT_NE(r.out.find("(0.716814, -0.244562, 0.555556, 0.669371)"), std::string::npos) << r.out;
}

TEST(Cli, CharpolyAndProjectors) {
    const Result c = run({"charpoly", example2});
    EXPECT_EQ(c.code, ok);
    const Result p = run({"proj-p", example1});
    EXPECT_EQ(parse_matrix(p.out), projector_p(examples::system1_matrix()));
    const Result q = run({"proj-q", example1});
    EXPECT_EQ(parse_matrix(q.out), projector_q(examples::system1_matrix()));
    const Result d = run({"drazin-a", example2});
    EXPECT_EQ(parse_matrix(d.out), drazin_times_a(examples::system2_matrix()));
}

TEST(Cli, VerifyAndWorkedExamples) {
    const Result v = run({"verify", example1, "--rhs", "1 2 3 1"});
    EXPECT_EQ(v.code, ok) << v.out;
    EXPECT_EQ(v.out.find("FAIL"), std::string::npos);
    const Result e = run({"paper-examples"});
    EXPECT_EQ(e.code, ok) << e.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, usage);
    EXPECT_EQ(run({"frobnicate", example1}).code, usage);
    EXPECT_EQ(run({"solve-lsq", example1}).code, usage);
    EXPECT_EQ(run({"solve-lsq", example1, "--rhs", "1", "--rhs-file", example1}).code, usage);
    EXPECT_EQ(run({"drazin", example1, "--method", "eq1"}).code, usage);
    EXPECT_EQ(run({"pinv", example1, "--method", "eq9"}).code, usage);
    EXPECT_EQ(run({"pinv", example1, "--threads", "0"}).code, usage);
    EXPECT_EQ(run({"rank", ADJINV_DATA_DIR "/no-such-file.mat"}).code, parse_failure);
    EXPECT_EQ(run({"solve-lsq", example1, "--rhs", "1 2 x"}).code, parse_failure);
    EXPECT_EQ(run({"group-inverse", example2}).code, precondition);
    EXPECT_EQ(run({"solve-lsq", example1, "--rhs", "1 2"}).code, precondition);
    EXPECT_EQ(run({"group-inverse", example2}).err.find("index 2") != std::string::npos, true);
}

TEST(Cli, ThreadsGiveIdenticalBytes) {
    for (const auto& sub : subcommands()) {
        const bool square_only = sub == "solve-drazin" || sub == "drazin" || sub == "group-inverse" ||
                                 sub == "index" || sub == "drazin-a";
        std::vector<std::string> base{sub};
        if (sub != "paper-examples") base.push_back(square_only ? example2 : example1);
        if (sub.rfind("solve", 0) == 0) base.insert(base.end(), {"--rhs", "1 2 3 1"});
        auto one = base;
        one.insert(one.end(), {"--threads", "1"});
        auto four = base;
        four.insert(four.end(), {"--threads", "4"});
        const Result a = run(one);
        const Result b = run(four);
        EXPECT_EQ(a.code, b.code) << sub;
        EXPECT_EQ(a.out, b.out) << sub;
    }
}

}  // namespace
}  // namespace adjinv::cli
