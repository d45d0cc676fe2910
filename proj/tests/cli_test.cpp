#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "cli/commands.hpp"

namespace hrnum::cli {
namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the hrnum binary, capturing stdout (stderr is discarded).
Run run(const std::string& args) {
  const std::string cmd = std::string(HRNUM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(HRNUM_DATA_DIR) + "/" + name; }

Json run_json(const std::string& args, int expected_exit) {
  const auto r = run(args + " --json");
  EXPECT_EQ(r.exit_code, expected_exit) << args;
  return Json::parse(r.out);
}

TEST(CliParse, ConeSpecFieldContext) {
  auto msg = [](const std::string& text) -> std::string {
    try {
      parse_cone_spec(parse_json(text, "in.json"), "in.json");
    } catch (const InputError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(msg(R"({"rank": 1, "generators": [[2], ["x"]]})").find("generators[1][0]"), std::string::npos);
  EXPECT_NE(msg(R"({"generators": [[2]]})").find("'rank': missing"), std::string::npos);
  EXPECT_NE(msg(R"({"rank": 2, "generators": [[2]]})").find("coordinate-length mismatch"), std::string::npos);
  EXPECT_NE(msg("{\"rank\": 1,\n \"generators\": [[2]\n}").find("in.json:3:1"), std::string::npos);
  const auto ok = parse_cone_spec(parse_json(R"({"rank": 1, "generators": [[3], [2]], "name": "n"})", "s"), "s");
  EXPECT_EQ(ok.name, "n");
  EXPECT_EQ(ok.cone.generators().front(), LatticePoint{2});
}

TEST(CliParse, PolynomialFormatsAgree) {
  const auto a = parse_polynomial(
      parse_json(R"({"terms": [{"coeff": [1, 2], "exp": [2, 1]}, {"coeff": 3, "exp": [0, 1]}]})", "p"), 2, "p");
  const auto b = parse_polynomial(parse_json(R"([[1, 2, [2, 1]], [3, 0, [0, 1]]])", "p"), 2, "p");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.coefficient({2, 1}), Complex(1, 2));
  EXPECT_THROW(parse_polynomial(parse_json(R"([[1, 0, [1]]])", "p"), 2, "p"), InputError);
  EXPECT_THROW(parse_polynomial(parse_json(R"([[1, 0, [-1, 0]]])", "p"), 2, "p"), InputError);
}

TEST(CliParse, SampleAndPoint) {
  const auto chi = parse_sample(parse_json(R"([{"exponent": [2], "value": [0.25, 0]}])", "s"), 1, "s");
  EXPECT_EQ(chi.values.at(LatticePoint{2}), Complex(0.25));
  EXPECT_THROW(parse_sample(parse_json(R"([{"exponent": [2]}])", "s"), 1, "s"), InputError);
  EXPECT_EQ(parse_point("1,-2", 2, "--at"), (LatticePoint{1, -2}));
  EXPECT_THROW(parse_point("1,x", 2, "--at"), InputError);
  EXPECT_THROW(parse_point("1", 2, "--at"), InputError);
}

TEST(CliDump, SeventeenDigitFloats) {
  Json j{{"x", 0.1}, {"n", 3}, {"v", Json::array({1.0 / 3.0})}};
  const auto s = dump(j);
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
  EXPECT_NE(s.find("0.33333333333333331"), std::string::npos);
  EXPECT_EQ(Json::parse(s)["v"][0].get<double>(), 1.0 / 3.0);
}

TEST(CliVerify, TwoThree) {
  const auto j = run_json("verify " + data("two_three.json"), 0);
  const auto& r = j["results"];
  EXPECT_TRUE(r["higher_rank"].get<bool>());
  EXPECT_EQ(r["gaps_in_box"], Json::parse("[[1]]"));
  EXPECT_EQ(r["minimal_generators"], Json::parse("[[2], [3]]"));
  EXPECT_FALSE(r["seminormal_in_box"].get<bool>());
  EXPECT_EQ(r["seminormality_counterexample"], Json::parse("[[2], [3]]"));
  EXPECT_EQ(j["exit_code"], 0);
}

TEST(CliVerify, FreeConeAndErrors) {
  const auto j = run_json("verify " + data("free2.json"), 0);
  EXPECT_TRUE(j["results"]["higher_rank"].get<bool>());
  EXPECT_TRUE(j["results"]["seminormal_in_box"].get<bool>());
  const auto bad = run_json("verify " + data("malformed.json"), 2);
  EXPECT_NE(bad["diagnostics"]["error"].get<std::string>().find(":3:1"), std::string::npos);
  EXPECT_EQ(run("verify " + data("negative.json")).exit_code, 2);
  EXPECT_EQ(run("verify " + data("does_not_exist.json")).exit_code, 2);
  EXPECT_EQ(run("verify").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST(CliIso, Outcomes) {
  const auto yes = run_json("iso " + data("cone_a.json") + " " + data("cone_b.json"), 0);
  EXPECT_EQ(yes["results"]["permutation"], Json::parse("[2, 1]"));
  EXPECT_FALSE(yes["results"]["interpretation"].get<std::string>().empty());
  const auto no = run_json("iso " + data("two_three.json") + " " + data("three_five.json"), 1);
  EXPECT_FALSE(no["results"]["isomorphic"].get<bool>());
  const auto hyp = run_json("iso " + data("cone_a.json") + " " + data("even_axis.json"), 3);
  EXPECT_EQ(hyp["diagnostics"]["failing_axis"]["gcd"], 2);
}

TEST(CliNorm, TableAndSupport) {
  const auto j = run_json("norm " + data("two_three.json") + " " + data("z2_plus_z3.json"), 0);
  const auto& rows = j["results"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3]["bound"], Json::parse("[64]"));
  EXPECT_LT(rows[3]["gap"].get<double>(), 0.05);
  EXPECT_TRUE(j["results"]["fock_norms_nondecreasing"].get<bool>());

  const auto mono = run_json("norm " + data("two_three.json") + " " + data("monomial.json") + " --boxes 8,16", 0);
  for (const auto& row : mono["results"]["rows"]) EXPECT_NEAR(row["gap"].get<double>(), 0.0, 1e-12);

  const auto bad = run_json("norm " + data("two_three.json") + " " + data("z.json"), 4);
  EXPECT_EQ(bad["diagnostics"]["offending"], Json::parse("[[1]]"));
  EXPECT_EQ(run("norm " + data("two_three.json") + " " + data("z2_plus_z3.json") + " --boxes 16,8").exit_code, 2);
}

TEST(CliChar, Modes) {
  const auto rec = run_json("char recover " + data("two_three.json") + " " + data("sample_half.json"), 0);
  EXPECT_EQ(rec["results"]["point"], Json::parse("[[0.5, 0.0]]"));
  const auto miss = run_json("char recover " + data("two_three.json") + " " + data("sample_missing.json"), 5);
  EXPECT_NE(miss["diagnostics"]["error"].get<std::string>().find("missing consulted value"), std::string::npos);
  const auto cex = run_json("char counterexample " + data("even_axis.json"), 0);
  EXPECT_EQ(cex["results"]["points"].size(), 2u);
  EXPECT_EQ(cex["results"]["gcd"], 2);
  EXPECT_EQ(run("char counterexample " + data("two_three.json")).exit_code, 5);
  const auto ext = run_json("char extend " + data("two_three.json") + " " + data("sample_half.json") + " --at 1", 0);
  EXPECT_EQ(ext["results"]["value"], Json::parse("[0.5, 0.0]"));
  EXPECT_EQ(run("char recover " + data("even_axis.json") + " " + data("sample_half.json")).exit_code, 2);
  EXPECT_EQ(run("char recover " + data("even_axis.json") + " " + data("sample_rank2.json")).exit_code, 3);
}

TEST(CliDeterminism, ByteIdenticalReports) {
  for (const std::string args : {"verify " + data("cone_a.json"),
                                 "norm " + data("two_three.json") + " " + data("z2_plus_z3.json"),
                                 "char counterexample " + data("even_axis.json")}) {
    const auto a = run(args + " --json");
    const auto b = run(args + " --json");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

}  // namespace
}  // namespace hrnum::cli
