#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "sextic_cli.hpp"

using namespace sextic;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

Complex from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

}  // namespace

TEST(ParseReal, DecimalsAndRationals) {
  EXPECT_EQ(cli::parse_real("21"), 21.0);
  EXPECT_EQ(cli::parse_real("-18"), -18.0);
  EXPECT_EQ(cli::parse_real("1.5e2"), 150.0);
  EXPECT_EQ(cli::parse_real("1/4"), 0.25);
  EXPECT_EQ(cli::parse_real("-3/2"), -1.5);
  EXPECT_DOUBLE_EQ(cli::parse_real("1/3"), 1.0 / 3.0);
}

TEST(ParseReal, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "inf", "nan", "0x10", "1/", "/2", "1e999", "2x"}) {
    EXPECT_THROW(cli::parse_real(bad), cli::InputError) << bad;
  }
}

TEST(FormatComplex, Rendering) {
  EXPECT_EQ(cli::format_complex({1.5320888862379567, 1.4142135623730951}, 10), "1.5320888862+1.4142135624i");
  EXPECT_EQ(cli::format_complex({0.0, -1.4142135623730951}, 4), "0-1.4142i");
  EXPECT_EQ(cli::format_complex({-3.0, 1e-17}, 10), "-3");
  EXPECT_EQ(cli::format_complex({-1e-17, 0.0}, 10), "0");
  EXPECT_EQ(cli::format_complex({2.5, 0.0}, 10), "2.5");
}

TEST(CliSolve, WorkedExample) {
  const Invocation r = run({"solve", "1", "0", "0", "2", "21", "-18", "51"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "params: a=0 b=2 c=-3 d=1"));
  EXPECT_TRUE(contains(r.out, "resolvent: 1 0 -1 1 -6 2"));
  EXPECT_TRUE(contains(r.out, "1.5320888862+1.4142135624i"));
  EXPECT_TRUE(contains(r.out, "-1.8793852416-1.4142135624i"));
  EXPECT_TRUE(contains(r.out, "status: ok"));
}

TEST(CliSolve, ZeroSextic) {
  const Invocation r = run({"solve", "1", "0", "0", "0", "0", "0", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "roots:\n  0\n  0\n  0\n  0\n  0\n  0\n"));
}

TEST(CliSolve, NotSolvable) {
  const Invocation r = run({"solve", "1", "0", "0", "0", "0", "0", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "not Milanez-solvable"));
}

TEST(CliSolve, ResidualFailureExit4) {
  const Invocation r = run({"--atol", "1", "--rtol", "1e-30", "solve", "1", "0", "0", "2", "21", "-18", "51"});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(contains(r.out, "status: numerical_failure"));
}

TEST(CliSolve, RationalAndNonMonicInput) {
  const Invocation r = run({"solve", "2", "0", "0", "4", "42", "-36", "102"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "params: a=0 b=2 c=-3 d=1"));
  const Invocation q = run({"check", "1/2", "0", "0", "1", "21/2", "-9", "51/2"});
  EXPECT_EQ(q.code, 0);
  EXPECT_TRUE(contains(q.out, "b=2 c=-3 d=1"));
}

TEST(CliSolve, ParseErrors) {
  EXPECT_EQ(run({"solve", "1", "2"}).code, 3);
  EXPECT_EQ(run({"solve", "0", "0", "0", "2", "21", "-18", "51"}).code, 3);
  EXPECT_EQ(run({"solve", "1", "0", "0", "2", "21", "-18", "x"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"--precision", "0", "solve", "1", "0", "0", "0", "0", "0", "0"}).code, 3);
  EXPECT_EQ(run({"--precision", "18", "solve", "1", "0", "0", "0", "0", "0", "0"}).code, 3);
  EXPECT_EQ(run({"--rtol", "-1", "solve", "1", "0", "0", "0", "0", "0", "0"}).code, 3);
  EXPECT_EQ(run({"--bogus", "solve", "1", "0", "0", "0", "0", "0", "0"}).code, 3);
}

TEST(CliSolve, FlagsAfterCoefficients) {
  const Invocation r = run({"solve", "1", "0", "0", "2", "21", "-18", "51", "--precision", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "1.532+1.414i"));
}

TEST(CliCheck, Examples) {
  const Invocation a = run({"check", "1", "0", "0", "2", "21", "-18", "51"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "params: a=0 b=2 c=-3 d=1"));
  EXPECT_FALSE(contains(a.out, "roots"));

  const Invocation z = run({"check", "1", "0", "0", "0", "0", "0", "0"});
  EXPECT_TRUE(contains(z.out, "params: a=0 b=0 c=0 d=0"));

  const Invocation ones = run({"check", "1", "-1", "4", "-1", "2", "-3", "1"});
  EXPECT_EQ(ones.code, 0);
  EXPECT_TRUE(contains(ones.out, "params: a=1 b=1 c=1 d=1"));

  EXPECT_EQ(run({"check", "1", "0", "0", "0", "0", "1", "1"}).code, 2);
}

TEST(CliResolvent, Examples) {
  EXPECT_TRUE(contains(run({"resolvent", "1", "0", "0", "2", "21", "-18", "51"}).out, "resolvent: 1 0 -1 1 -6 2"));
  EXPECT_TRUE(contains(run({"resolvent", "1", "0", "0", "0", "0", "0", "0"}).out, "resolvent: 1 0 0 0 0 0"));
  EXPECT_TRUE(contains(run({"resolvent", "1", "-1", "4", "-1", "2", "-3", "1"}).out, "resolvent: 1 0 1 1 0 1"));
}

TEST(CliSplit, Examples) {
  const Invocation a = run({"split", "-1", "1", "-6", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "quadratic: 1 0 2"));
  EXPECT_TRUE(contains(a.out, "cubic: 1 0 -3 1"));

  const Invocation b = run({"--json", "split", "0", "0", "-1", "0"});
  EXPECT_EQ(b.code, 0);
  const json j = json::parse(b.out);
  std::vector<Complex> quad, cub;
  for (const auto& c : j.at("quadratic")) quad.push_back(from_json(c));
  for (const auto& c : j.at("cubic")) cub.push_back(from_json(c));
  const Polynomial product = multiply(Polynomial::from_descending(quad), Polynomial::from_descending(cub));
  EXPECT_LE(max_coefficient_distance(product, Polynomial{0, -1, 0, 0, 0, 1}), 1e-9);
  EXPECT_LT(j.at("product_residual").get<double>(), 1e-9);

  const Invocation c = run({"split", "0", "0", "0", "0"});
  EXPECT_EQ(c.code, 4);
  EXPECT_TRUE(contains(c.out, "degenerate"));
  EXPECT_EQ(run({"split", "1", "2", "3"}).code, 3);
}

TEST(CliMartinelli, Examples) {
  const Invocation a = run({"martinelli", "-1", "1", "-6", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "ascending: 0 -51 -135 33 -14 -24 21 1 -3 0 1"));
  EXPECT_TRUE(contains(a.out, "descending: 1 0 -3 1 21 -24 -14 33 -135 -51 0"));
  EXPECT_TRUE(contains(run({"martinelli", "0", "0", "0", "0"}).out, "descending: 1 0 0 0 0 0 0 0 0 0 0"));
  EXPECT_TRUE(contains(run({"martinelli", "1", "0", "0", "0"}).out, "descending: 1 0 3 0 3 0 1 0 0 0 0"));
}

TEST(CliJson, SolveSchema) {
  const Invocation r = run({"solve", "--json", "1", "0", "0", "2", "21", "-18", "51"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("status"), "ok");
  for (const char* key : {"input", "params", "resolvent", "quad_roots", "cubic_roots", "roots", "residual_max"})
    EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"a", "b", "c", "d"}) EXPECT_TRUE(j["params"].contains(key));
  EXPECT_EQ(j["resolvent"].size(), 5u);
  EXPECT_EQ(j["quad_roots"].size(), 2u);
  EXPECT_EQ(j["cubic_roots"].size(), 3u);
  EXPECT_EQ(j["roots"].size(), 6u);
  EXPECT_EQ(from_json(j["resolvent"][2]), Complex(1.0));  // D
  EXPECT_EQ(from_json(j["resolvent"][4]), Complex(2.0));  // F
}

TEST(CliJson, NotSolvableAndParseErrorCarryStatus) {
  const Invocation a = run({"--json", "solve", "1", "0", "0", "0", "0", "0", "1"});
  EXPECT_EQ(a.code, 2);
  EXPECT_EQ(json::parse(a.out).at("status"), "not_solvable");
  const Invocation b = run({"--json", "solve", "1", "0"});
  EXPECT_EQ(b.code, 3);
  EXPECT_EQ(json::parse(b.out).at("status"), "parse_error");
}

TEST(CliJson, ResidualRoundTrips) {
  for (const std::vector<std::string>& coeffs :
       {std::vector<std::string>{"1", "0", "0", "2", "21", "-18", "51"},
        std::vector<std::string>{"1", "-1", "4", "-1", "2", "-3", "1"},
        std::vector<std::string>{"3", "1/2", "-7", "2.25", "1", "-4", "5/3"}}) {
    std::vector<std::string> args{"--json", "solve"};
    args.insert(args.end(), coeffs.begin(), coeffs.end());
    const Invocation r = run(args);
    if (r.code == 2) continue;  // the last input is a generic sextic
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    std::vector<Complex> input;
    for (const auto& x : j.at("input")) input.push_back(x.get<double>());
    const Polynomial s = SexticMonic::from_polynomial(Polynomial::from_descending(input)).polynomial();
    double residual = 0.0;
    for (const auto& root : j.at("roots")) residual = std::max(residual, normalized_residual(s, from_json(root)));
    const double reported = j.at("residual_max").get<double>();
    EXPECT_NEAR(residual, reported, 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, reported));
  }
}

TEST(CliJson, TextAndJsonAgree) {
  const Invocation text = run({"--precision", "17", "solve", "1", "-1", "4", "-1", "2", "-3", "1"});
  const Invocation js = run({"--json", "solve", "1", "-1", "4", "-1", "2", "-3", "1"});
  ASSERT_EQ(text.code, 0);
  ASSERT_EQ(js.code, 0);
  const json j = json::parse(js.out);
  for (const auto& root : j.at("roots")) {
    EXPECT_TRUE(contains(text.out, "  " + cli::format_complex(from_json(root), 17) + "\n"));
  }
}

TEST(CliHelp, ExitsZero) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "solve"));
}
