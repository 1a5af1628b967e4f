#include "wrt/suites.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace wrt;
using json = nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::string& args) {
    std::string cmd = std::string(WRT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

CycNumber from_record(const json& j) {
    std::vector<Rational> c;
    for (const auto& s : j.at("coeffs")) c.emplace_back(s.get<std::string>());
    for (auto& x : c) x.canonicalize();
    return CycNumber(j.at("modulus").get<long>(), c);
}

}  // namespace

TEST(Cli, PlainOutput) {
    EXPECT_EQ(cli("wrt lens --b 5 --a 1 --d 1 --r 7 --l 1 --theory so3").out, "1\n");
    EXPECT_EQ(cli("gauss --r 4 --x 2 --y 1").out, "0\n");
    EXPECT_EQ(cli("gauss --r 3 --x 1 --y 0").out, gauss_brute(3, 1, 0).minimal().to_string() + "\n");
    EXPECT_EQ(cli("dedekind --a 1 --b 3").out, "1/18\n");
    EXPECT_EQ(cli("cfrac --b 7 --a 3").out, "2 2 3\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("gauss --r 5 --x 1 --y 1").code, 0);
    EXPECT_EQ(cli("nosuch --r 1").code, 2);
    EXPECT_EQ(cli("gauss --r 5").code, 2);
    EXPECT_EQ(cli("gamma --b 2 --r 4 --theory so3").code, 1);
    EXPECT_EQ(cli("wrt lens --b 6 --a 3 --r 7").code, 1);
    EXPECT_EQ(cli("verify --suite nosuch").code, 1);
}

TEST(Cli, JsonRoundTrip) {
    struct Case {
        std::string args;
        CycNumber want;
    };
    RootSpec x7(7, 3, Theory::SO3), s9(9, 5, Theory::SU2);
    std::vector<Case> cases{
        {"gauss --r 12 --x 5 --y 2", gauss_brute(12, 5, 2)},
        {"gauss --r 12 --x 5 --y 2 --closed", gauss_closed(12, 5, 2)},
        {"gamma --b -3 --r 7 --l 3 --theory so3", gamma(-3, x7)},
        {"wrt lens --b 7 --a -2 --d 3 --r 7 --l 3 --theory so3 --brute", tau_prime(ManifoldSpec::lens(7, -2, 3), x7).value},
        {"wrt lens --b 9 --a 2 --r 9 --l 5 --theory su2", lens_tau_prime_closed(9, 2, 1, s9)},
        {"wrt connsum --pieces \"L(3,1);L(5,2,d=3)\" --r 7 --l 3",
         tau_prime(ManifoldSpec::lens(3, 1).connect(ManifoldSpec::lens(5, 2, 3)), x7).value},
        {"unified lens --b 9 --a 4 --eps 0bar --r 9 --l 5 --theory su2",
         unified_lens_eval(unified_lens(9, 4, Eps::ZeroBar, Theory::SU2), s9)},
        {"unified diagonal --framings 3,-5 --knot-color 3 --r 7 --l 3",
         unified_diagonal_eval(ManifoldSpec::diagonal({3, -5}, 3), x7)},
    };
    for (const auto& c : cases) {
        CliRun r = cli("--json " + c.args);
        ASSERT_EQ(r.code, 0) << c.args;
        json j = json::parse(r.out);
        EXPECT_EQ(j.size(), 5u);
        for (const char* k : {"command", "inputs", "modulus", "coeffs", "float"}) EXPECT_TRUE(j.contains(k)) << k;
        EXPECT_TRUE(j.at("float").is_null());
        EXPECT_EQ(from_record(j), c.want) << c.args;
        EXPECT_EQ(cli("--json " + c.args).out, r.out);  // deterministic
    }
    json f = json::parse(cli("gauss --r 5 --x 1 --y 0 --json --float").out);
    ASSERT_TRUE(f.at("float").is_array());
    EXPECT_NEAR(f.at("float")[0].get<double>(), std::sqrt(5.0), 1e-12);
}

TEST(Cli, Verify) {
    CliRun r = cli("verify --suite frobenius --json");
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("coeffs")[0], j.at("coeffs")[1]);
    EXPECT_EQ(j.at("inputs").at("suite"), "frobenius");
    EXPECT_TRUE(j.at("inputs").at("first_failure").is_null());
}
