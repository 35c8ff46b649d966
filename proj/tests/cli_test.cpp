// Copyright 2026 The gdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gdiscord/io.hpp"

namespace gdiscord::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_one_error_line(const Outcome& o, const std::string& kind) {
  EXPECT_EQ(o.err.rfind("error: " + kind + ": ", 0), 0u) << o.err;
  EXPECT_EQ(std::count(o.err.begin(), o.err.end(), '\n'), 1) << o.err;
}

TEST(Cli, DiscordBothMethods) {
  const Outcome o = call({"discord", "--normal-form", "5,2,2.449489743,-2.449489743"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_NEAR(j["discord"].get<double>(), 0.950067, 1e-6);
  EXPECT_NEAR(j["closed_form"]["discord"].get<double>(), 0.950067, 1e-6);
  EXPECT_NEAR(j["numeric_scan"]["discord"].get<double>(), 0.950067, 1e-6);
  EXPECT_LT(j["agreement_delta"].get<double>(), 1e-6);
  EXPECT_EQ(j["family"]["sign"], 1);
}

TEST(Cli, DiscordOutsideFamilyStillReportsNumeric) {
  const Outcome o = call({"discord", "--normal-form", "2,2,1,0"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_TRUE(j["closed_form"].is_null());
  EXPECT_TRUE(j["numeric_scan"]["discord"].is_number());
}

TEST(Cli, DiscordFromInlineMatrix) {
  const Outcome o = call({"discord", "--json", R"({"cm":[[2,0,1,0],[0,2,0,1],[1,0,2,0],[0,1,0,2]]})"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_NEAR(json::parse(o.out)["discord"].get<double>(), 0.459147917027, 1e-9);
}

TEST(Cli, DiscordFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "gdiscord_cli_state.json";
  std::ofstream(path) << R"({"normal_form":{"a":2,"b":2,"c":1,"cp":1}})";
  const Outcome o = call({"discord", "--input", path.string()});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_NEAR(json::parse(o.out)["closed_form"]["discord"].get<double>(), 0.459147917027, 1e-9);
  std::filesystem::remove(path);
}

TEST(Cli, NotBonaFideIsValidationError) {
  const Outcome o = call({"discord", "--normal-form", "2,2,2,-2"});
  EXPECT_EQ(o.code, kValidation);
  expect_one_error_line(o, "not_bona_fide");
  EXPECT_TRUE(o.out.empty());
}

TEST(Cli, MalformedJson) {
  const Outcome o = call({"discord", "--json", "{oops"});
  EXPECT_EQ(o.code, kValidation);
  expect_one_error_line(o, "validation");
}

TEST(Cli, MissingFile) {
  const Outcome o = call({"decompose", "--input", "/nonexistent/state.json"});
  EXPECT_EQ(o.code, kValidation);
  expect_one_error_line(o, "validation");
}

TEST(Cli, UnknownFlagIsError) {
  const Outcome o = call({"classify", "--tau", "1", "--eta", "0", "--verbose"});
  EXPECT_EQ(o.code, kValidation);
  expect_one_error_line(o, "usage");
}

TEST(Cli, SubcommandRequired) {
  const Outcome o = call({});
  EXPECT_EQ(o.code, kValidation);
  expect_one_error_line(o, "usage");
}

TEST(Cli, Help) {
  const Outcome o = call({"--help"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NE(o.out.find("discord"), std::string::npos);
}

TEST(Cli, DecomposeFamilyMember) {
  const Outcome o = call({"decompose", "--normal-form", "2,2,1,1"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_NEAR(j["tau"].get<double>(), -1.0 / 3.0, 1e-9);
  EXPECT_NEAR(j["eta"].get<double>(), 4.0 / 3.0, 1e-9);
  EXPECT_EQ(j["channel"]["label"], "D");
}

TEST(Cli, DecomposeOutOfFamily) {
  const Outcome o = call({"decompose", "--normal-form", "2,2,1,0"});
  EXPECT_EQ(o.code, kOutOfFamily);
  expect_one_error_line(o, "out_of_family");
}

TEST(Cli, Classify) {
  const Outcome o = call({"classify", "--tau", "0.5", "--eta", "0.6"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_EQ(j["label"], "C_lossy");
  EXPECT_DOUBLE_EQ(j["omega"].get<double>(), 1.2);

  const Outcome js = call({"classify", "--json", R"({"tau":-1,"eta":2})"});
  ASSERT_EQ(js.code, kOk);
  EXPECT_EQ(json::parse(js.out)["label"], "D");

  const Outcome bad = call({"classify", "--tau", "0.5", "--eta", "0.1"});
  EXPECT_EQ(bad.code, kValidation);
  expect_one_error_line(bad, "invalid_channel");
}

TEST(Cli, SampleCsvDeterministic) {
  const Outcome a = call({"sample", "--a", "2", "--b", "2", "--n", "20000", "--seed", "42", "--threads", "1"});
  const Outcome b = call({"sample", "--a", "2", "--b", "2", "--n", "20000", "--seed", "42", "--threads", "3"});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 20001);
  EXPECT_EQ(a.out.rfind("a,b,c,cp,r,tau,eta,sign\n", 0), 0u);
}

TEST(Cli, SampleGrid) {
  const Outcome o = call({"sample", "--a", "2", "--b", "4", "--n", "1000", "--seed", "1", "--format", "json", "--bins", "20"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_EQ(j["grid"].size(), 20u);
  EXPECT_EQ(j["bins"], 20);
}

TEST(Cli, SampleDomainError) {
  const Outcome o = call({"sample", "--a", "0.5", "--b", "2", "--n", "10", "--seed", "1"});
  EXPECT_EQ(o.code, kValidation);
  expect_one_error_line(o, "validation");
}

TEST(Cli, ConditionEprHeterodyne) {
  const Outcome o = call({"condition", "--normal-form", "2,2,1.7320508075688772,-1.7320508075688772",
                          "--measurement", R"({"u":1,"phi":0})", "--outcome", "1,1"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = json::parse(o.out);
  EXPECT_NEAR(j["conditional"]["cm"][0][0].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["conditional"]["mean"][0].get<double>(), std::sqrt(3.0) / 3.0, 1e-11);
  EXPECT_NEAR(j["conditional"]["mean"][1].get<double>(), -std::sqrt(3.0) / 3.0, 1e-11);
}

TEST(Cli, ConditionMixedSeedRejected) {
  const Outcome o = call({"condition", "--normal-form", "2,2,1,1", "--measurement", R"({"seed_cm":[[2,0],[0,2]]})"});
  EXPECT_EQ(o.code, kValidation);
  expect_one_error_line(o, "validation");
}

TEST(Cli, ToleranceOverride) {
  // c^2 exceeds the bound by 1e-6: rejected at the default, accepted when loosened.
  const std::string nf = "2,2,1.7320510962,-1.7320510962";
  EXPECT_EQ(call({"discord", "--normal-form", nf}).code, kValidation);
  EXPECT_EQ(call({"--tolerance", "1e-3", "discord", "--normal-form", nf}).code, kOk);
  EXPECT_EQ(call({"discord", "--tolerance", "1e-3", "--normal-form", nf}).code, kOk);

  setenv("GDISCORD_TOLERANCE", "1e-3", 1);
  EXPECT_EQ(call({"discord", "--normal-form", nf}).code, kOk);
  setenv("GDISCORD_TOLERANCE", "nope", 1);
  const Outcome bad = call({"discord", "--normal-form", nf});
  EXPECT_EQ(bad.code, kValidation);
  expect_one_error_line(bad, "validation");
  unsetenv("GDISCORD_TOLERANCE");
}

TEST(Cli, VerifySingleCriterion) {
  const Outcome o = call({"verify", "--criterion", "8"});
  EXPECT_EQ(o.code, kOk) << o.out;
  EXPECT_EQ(o.out.rfind("PASS AC8 ", 0), 0u) << o.out;
}

}  // namespace
}  // namespace gdiscord::cli
