// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "sscm/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "sscm");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = sscm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("sscm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

} // namespace

TEST_F(CliTest, RunWritesReport)
{
    const auto out = dir_ / "run";
    const auto r = invoke({"run", "--scenario", "nlos-28", "--n", "50", "--seed", "3", "--threads", "1", "--out",
                           out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(sscm::read_text_file(out / "report.json"));
    EXPECT_EQ(j.at("metrics").at("n_realizations").get<double>(), 50.0);
    EXPECT_TRUE(fs::exists(out / "stats.csv"));
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(), j.dump());
}

TEST_F(CliTest, ConfigFileOverridesFlags)
{
    sscm::write_text_file(dir_ / "cfg.json", R"({"n_realizations": 7, "seed": 11})");
    const auto r = invoke({"run", "--n", "50", "--config", (dir_ / "cfg.json").string(), "--threads", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("metrics").at("n_realizations").get<double>(), 7.0);
    EXPECT_EQ(j.at("config").at("seed").get<std::uint64_t>(), 11u);
}

TEST_F(CliTest, PdpToStdoutAndDirectory)
{
    const auto a = invoke({"pdp", "--scenario", "los-28-73", "--seed", "1", "--index", "4"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j.at("schema_version").get<int>(), sscm::kChannelSchemaVersion);

    const auto b = invoke({"pdp", "--scenario", "los-28-73", "--seed", "1", "--index", "4", "--out", dir_.string()});
    ASSERT_EQ(b.code, 0) << b.err;
    for (const char *f : {"channel.json", "pdp.csv", "spectrum_aod.csv", "spectrum_aoa.csv", "pdp_directional.csv"})
        EXPECT_TRUE(fs::exists(dir_ / f)) << f;
    EXPECT_EQ(nlohmann::json::parse(sscm::read_text_file(dir_ / "channel.json")).dump(), j.dump());
}

TEST_F(CliTest, ValidatePassAndFail)
{
    sscm::write_text_file(dir_ / "report.json", R"({"metrics": {"median_rms_ds_ns": 33.0}})");
    sscm::write_text_file(dir_ / "ok.json",
                          R"({"expectations": [{"metric": "median_rms_ds_ns", "expected": 35, "rel_tol": 0.2}]})");
    sscm::write_text_file(dir_ / "bad.json",
                          R"([{"metric": "median_rms_ds_ns", "expected": 16, "rel_tol": 0.2}])");
    sscm::write_text_file(dir_ / "empty.json", "[]");
    const auto report = (dir_ / "report.json").string();

    const auto ok = invoke({"validate", "--report", report, "--expect", (dir_ / "ok.json").string()});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("PASS median_rms_ds_ns"), std::string::npos);

    const auto bad = invoke({"validate", "--report", report, "--expect", (dir_ / "bad.json").string()});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("FAIL median_rms_ds_ns"), std::string::npos);

    const auto empty = invoke({"validate", "--report", report, "--expect", (dir_ / "empty.json").string()});
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, ConfigErrorsExitTwo)
{
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"run", "--scenario", "nlos-99", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"run", "--freq", "200e9", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"run", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"run", "--tx-hpbw-az", "-3", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"run", "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"validate"}).code, 2);
    sscm::write_text_file(dir_ / "broken.json", "{not json");
    EXPECT_EQ(invoke({"run", "--config", (dir_ / "broken.json").string()}).code, 2);
}

TEST_F(CliTest, IoErrorsExitThree)
{
    EXPECT_EQ(invoke({"run", "--config", (dir_ / "missing.json").string()}).code, 3);
    EXPECT_EQ(invoke({"validate", "--report", (dir_ / "missing.json").string(), "--expect", "x.json"}).code, 3);
    sscm::write_text_file(dir_ / "file", "x");
    EXPECT_EQ(invoke({"run", "--n", "2", "--threads", "1", "--out", (dir_ / "file" / "sub").string()}).code, 3);
}

TEST_F(CliTest, HelpExitsZero)
{
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("run"), std::string::npos);
}
