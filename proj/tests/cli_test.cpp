/* Copyright 2026 The Succession Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "succession/binary.hpp"

namespace succession::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Pulls "exact: p/q" out of plain output.
Rational plain_exact(const std::string& text, std::size_t which = 0) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i <= which; ++i) {
    pos = text.find("exact: ", pos);
    if (pos == std::string::npos) throw std::runtime_error("no exact field");
    pos += 7;
  }
  return Rational::parse(text.substr(pos, text.find('\n', pos) - pos));
}

void expect_record_schema(const nlohmann::json& j) {
  ASSERT_TRUE(j.is_object());
  ASSERT_EQ(j.size(), 4u);
  ASSERT_TRUE(j.at("rule").is_string());
  ASSERT_TRUE(j.at("inputs").is_object());
  for (const auto& [key, value] : j.at("inputs").items()) EXPECT_TRUE(value.is_string()) << key;
  ASSERT_TRUE(j.at("exact").is_object());
  ASSERT_EQ(j.at("exact").size(), 2u);
  ASSERT_TRUE(j.at("exact").at("num").is_string());
  ASSERT_TRUE(j.at("exact").at("den").is_string());
  ASSERT_TRUE(j.at("decimal").is_string());
}

Rational json_exact(const nlohmann::json& j) {
  return Rational::parse(j["exact"]["num"].get<std::string>() + "/" + j["exact"]["den"].get<std::string>());
}

TEST(CliPredictTest, GoldbachScaleHaldane) {
  const Result r = invoke({"predict", "--rule", "haldane", "--n", "1999999999999999999", "--digits", "40"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const BigInt d = parse_bigint("2000000000000000001");
  EXPECT_EQ(plain_exact(r.out), 1 - Rational(BigInt(1), BigInt(d * d)));
  EXPECT_NE(r.out.find("decimal: 0.9999999999999999999999999999999999997500\n"), std::string::npos);
}

TEST(CliPredictTest, KnownValues) {
  EXPECT_EQ(plain_exact(invoke({"predict", "--rule", "laplace", "--n", "100", "--block", "1000"}).out),
            Rational(101, 1101));
  EXPECT_EQ(plain_exact(invoke({"predict", "--rule", "haldane", "--n", "0"}).out), Rational(3, 4));
  EXPECT_EQ(plain_exact(invoke({"predict", "--rule", "haldane", "--n", "10", "--block", "11"}).out),
            Rational(23, 24));
  EXPECT_EQ(plain_exact(invoke({"predict", "--rule", "jeffreys-split", "--n", "1"}).out), Rational(5, 6));
  EXPECT_EQ(plain_exact(invoke({"predict", "--rule", "haldane", "--n", "4", "--alpha", "2"}).out),
            Rational(6, 7) * Rational(9, 8));
  EXPECT_EQ(plain_exact(invoke({"predict", "--rule", "haldane", "--n", "2", "--prior-odds", "1/2"}).out),
            Rational(3, 4) * Rational(6, 5));
  EXPECT_EQ(plain_exact(invoke({"predict", "--rule", "general", "--mass-theta1", "1/4", "--mass-theta0",
                                "1/4", "--n", "1"})
                            .out),
            Rational(5, 6));
}

TEST(CliPredictTest, DecimalRendering) {
  const Result r = invoke({"predict", "--rule", "laplace", "--n", "100", "--block", "1000", "--digits", "10"});
  EXPECT_NE(r.out.find("decimal: 0.0917347866\n"), std::string::npos) << r.out;
}

TEST(CliPredictTest, ExitCodes) {
  EXPECT_EQ(invoke({"predict", "--n", "abc"}).code, kUsage);
  EXPECT_EQ(invoke({"predict", "--n", "-3"}).code, kUsage);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--alpha", "0.1.2"}).code, kUsage);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--rule", "bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--block", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--digits", "10001"}).code, kUsage);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--rule", "general", "--mass-theta1", "3/2"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);

  const Result contradiction =
      invoke({"predict", "--rule", "general", "--mass-theta1", "1", "--n", "3", "--m", "1"});
  EXPECT_EQ(contradiction.code, kModelContradiction);
  EXPECT_NE(contradiction.err.find("ZeroEvidenceProbability"), std::string::npos);
  EXPECT_TRUE(contradiction.out.empty());

  const Result falsified = invoke({"posterior", "--n", "3", "--m", "1"});
  EXPECT_EQ(falsified.code, kModelContradiction);
  EXPECT_NE(falsified.err.find("UGFalsified"), std::string::npos);

  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(CliPosteriorTest, KnownValues) {
  Result r = invoke({"posterior", "--n", "10", "--alpha", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(plain_exact(r.out, 0), Rational(11, 12));
  EXPECT_EQ(plain_exact(r.out, 1), Rational(11));
  r = invoke({"posterior", "--n", "0"});
  EXPECT_EQ(plain_exact(r.out, 0), Rational(1, 2));
  EXPECT_EQ(plain_exact(r.out, 1), Rational(1));
  r = invoke({"posterior", "--n", "6", "--alpha", "3"});
  EXPECT_EQ(plain_exact(r.out, 0), Rational(3, 4));
  EXPECT_EQ(plain_exact(r.out, 1), Rational(3));
}

TEST(CliCompareTest, RowsAndCsvHeader) {
  const Result r = invoke({"compare", "--n-list", "0,10", "--rules", "laplace,haldane", "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "rule,inputs,num,den,decimal");
  EXPECT_EQ(rows[1], "laplace,n=0;m=0;alpha=1;beta=1,1,2,0.500000000000");
  EXPECT_EQ(rows[2], "laplace,n=10;m=0;alpha=1;beta=1,11,12,0.916666666667");
  EXPECT_EQ(rows[3], "haldane,n=0;m=0;alpha=1,3,4,0.750000000000");
  EXPECT_EQ(rows[4], "haldane,n=10;m=0;alpha=1,143,144,0.993055555556");

  const Result js = invoke({"compare", "--n-list", "1", "--rules", "jeffreys-split", "--format", "json"});
  const auto j = nlohmann::json::parse(js.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  expect_record_schema(j[0]);
  EXPECT_EQ(json_exact(j[0]), Rational(5, 6));

  EXPECT_EQ(invoke({"compare", "--n-list", "1", "--rules", "carnap"}).code, kUsage);
}

TEST(CliJsonTest, SchemaAndRoundTrip) {
  const std::vector<std::vector<std::string>> cases{
      {"predict", "--rule", "haldane", "--n", "10", "--format", "json"},
      {"predict", "--rule", "laplace", "--n", "100", "--block", "1000", "--format", "json"},
      {"predict", "--rule", "haldane", "--n", "1999999999999999999", "--format", "json", "--digits", "40"}};
  const std::vector<Rational> expected{
      predict_next(BinaryPrior::haldane(), Evidence(10)),
      predict_block(BinaryPrior::laplace(), Evidence(100), PredictionQuery(1000)),
      predict_next(BinaryPrior::haldane(), Evidence(parse_bigint("1999999999999999999")))};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Result r = invoke(cases[i]);
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    expect_record_schema(j);
    EXPECT_EQ(json_exact(j), expected[i]);
    EXPECT_EQ(j["decimal"].get<std::string>(), expected[i].to_decimal(i == 2 ? 40 : kDefaultDigits));
  }
  const auto posterior = nlohmann::json::parse(invoke({"posterior", "--n", "3", "--format", "json"}).out);
  ASSERT_TRUE(posterior.is_array());
  for (const auto& rec : posterior) expect_record_schema(rec);
}

TEST(CliLabTest, KnownValues) {
  Result r = invoke({"lab", "df-check", "--urn", "5,5", "--k", "3"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("bound: 6/5\n"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);

  r = invoke({"lab", "urn", "--colors", "1,1", "--k", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("P(01): 1/2\n"), std::string::npos);
  EXPECT_NE(r.out.find("P(10): 1/2\n"), std::string::npos);
  EXPECT_NE(r.out.find("extendable: false\n"), std::string::npos);

  r = invoke({"lab", "sufficientness", "--rule", "dirichlet", "--k", "1,1,1", "--max-n", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);

  r = invoke({"lab", "sufficientness", "--rule", "hintikka", "--t", "3", "--max-n", "5"});
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_NE(r.out.find("witness_counts_a"), std::string::npos);

  r = invoke({"lab", "exchangeable", "--rule", "laplace", "--length", "6", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["results"]["positive_cylinders"], "true");

  EXPECT_EQ(invoke({"lab", "exchangeable", "--rule", "markov", "--t", "2", "--length", "3"}).code,
            kCheckFailed);
}

TEST(CliLabTest, LimitsAndUsage) {
  EXPECT_EQ(invoke({"lab", "exchangeable", "--rule", "iid", "--t", "3", "--length", "13"}).code,
            kResourceLimit);
  EXPECT_EQ(invoke({"lab", "urn", "--colors", "1,1", "--k", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"lab", "df-check", "--urn", "1,1", "--k", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"lab", "exchangeable", "--rule", "carnap", "--length", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"lab", "urn", "--colors", "1,1", "--k", "2", "--format", "csv"}).code, kUsage);
  EXPECT_EQ(invoke({"lab"}).code, kUsage);
}

TEST(CliConfigTest, FileSuppliesDefaultsAndCommandLineWins) {
  const auto path = std::filesystem::temp_directory_path() / "succession_cli_test.conf";
  {
    std::ofstream f(path);
    f << "# defaults\n"
      << "rule = laplace\n"
      << "n=100\n"
      << "--block=1000\n";
  }
  Result r = invoke({"predict", "--config", path.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(plain_exact(r.out), Rational(101, 1101));

  r = invoke({"predict", "--config", path.string(), "--rule", "haldane", "--n", "10", "--block", "11"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(plain_exact(r.out), Rational(23, 24));

  {
    std::ofstream f(path);
    f << "not a pair\n";
  }
  EXPECT_EQ(invoke({"predict", "--n", "1", "--config", path.string()}).code, kUsage);
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"predict", "--n", "1", "--config", path.string()}).code, kUsage);
}

TEST(RenderTest, PlainRecordLayout) {
  const std::string text = render({{"laplace", {{"n", "1"}}, Rational(2, 3)}}, Format::kPlain, 3, true);
  EXPECT_EQ(text, "rule: laplace\ninputs: n=1\nexact: 2/3\ndecimal: 0.667\n");
}

}  // namespace
}  // namespace succession::cli
