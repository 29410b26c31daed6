#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "gradreveal/error.hpp"
#include "gradreveal/serialize.hpp"
#include "json.hpp"
#include "run_config.hpp"

using namespace gradreveal;
using namespace gradreveal::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("gradreveal_cli_") +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Options options(std::string config = "desk") const {
    Options o;
    o.config = std::move(config);
    o.out = dir_;
    return o;
  }

  template <typename Command>
  int run(Command command, const Options& o) {
    out_.str("");
    err_.str("");
    return command(o, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, SetupWritesPublicAndSecretFiles) {
  ASSERT_EQ(run(cmd_setup, options()), kExitOk) << err_.str();
  EXPECT_TRUE(fs::exists(dir_ / "bulletin.json"));
  EXPECT_TRUE(fs::exists(dir_ / "secret.json"));
  EXPECT_TRUE(fs::exists(dir_ / "codes.csv"));
  EXPECT_NE(out_.str().find("n = "), std::string::npos);
  EXPECT_NE(out_.str().find("codes.csv"), std::string::npos);

  const auto perms = fs::status(dir_ / "secret.json").permissions();
  EXPECT_EQ(perms & (fs::perms::group_all | fs::perms::others_all), fs::perms::none);

  const auto secret = secret_from_json(read_file(dir_ / "secret.json"));
  const std::string bulletin = read_file(dir_ / "bulletin.json");
  EXPECT_EQ(bulletin.find(secret.p.to_string()), std::string::npos);
  EXPECT_EQ(bulletin.find(secret.q.to_string()), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(bulletin).count("w"), 0u);
}

TEST_F(CliTest, SameSeedByteIdenticalBulletin) {
  Options o = options();
  o.seed = 99;
  ASSERT_EQ(run(cmd_setup, o), kExitOk);
  const std::string first = read_file(dir_ / "bulletin.json");
  ASSERT_EQ(run(cmd_setup, o), kExitOk);
  EXPECT_EQ(read_file(dir_ / "bulletin.json"), first);
  o.seed = 100;
  ASSERT_EQ(run(cmd_setup, o), kExitOk);
  EXPECT_NE(read_file(dir_ / "bulletin.json"), first);
}

TEST_F(CliTest, InvalidConfigRejectedWithoutWritingFiles) {
  fs::create_directories(dir_);
  const fs::path config = dir_ / "bad.json";
  write_file_atomic(config, R"({"numCodes": 10, "digits": 4, "days": 4, "payout": 100})");
  EXPECT_EQ(run(cmd_setup, options(config.string())), kExitError);
  EXPECT_NE(err_.str().find("digits"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "bulletin.json"));

  write_file_atomic(config, R"({"numCodes": 10, "digits": 8, "days": 9, "payout": 100})");
  EXPECT_EQ(run(cmd_setup, options(config.string())), kExitError);
  EXPECT_EQ(run(cmd_setup, options((dir_ / "absent.json").string())), kExitError);
}

TEST_F(CliTest, RevealCrackVerifyLifecycle) {
  ASSERT_EQ(run(cmd_setup, options()), kExitOk);
  const auto secret = secret_from_json(read_file(dir_ / "secret.json"));
  const std::string p = secret.p.to_string();

  Options o = options();
  EXPECT_EQ(run(cmd_crack, o), kExitError);  // nothing revealed yet
  EXPECT_NE(err_.str().find("NoDigitsRevealed"), std::string::npos);

  ASSERT_EQ(run(cmd_reveal, o), kExitOk);
  EXPECT_NE(out_.str().find("revealed: " + p.substr(0, 1)), std::string::npos);
  EXPECT_NE(out_.str().find("23 remaining"), std::string::npos);

  o.count = 17;
  ASSERT_EQ(run(cmd_reveal, o), kExitOk);  // day 18

  o.budget = 1000;
  EXPECT_EQ(run(cmd_crack, o), kExitBudgetExceeded);
  EXPECT_EQ(nlohmann::json::parse(out_.str()).at("candidateCount"), "400000");

  o.budget = 1'000'000;
  ASSERT_EQ(run(cmd_crack, o), kExitOk);
  const auto report = nlohmann::json::parse(out_.str());
  EXPECT_EQ(report.at("outcome"), "Found");
  EXPECT_EQ(report.at("p"), p);
  EXPECT_EQ(report.at("w"), secret.w.value);

  EXPECT_EQ(run(cmd_verify, o), kExitError);  // incomplete

  o.count = 7;
  EXPECT_EQ(run(cmd_reveal, o), kExitError);  // only 6 remain
  EXPECT_EQ(read_file(dir_ / "bulletin.json").find("\"day\": 19"), std::string::npos);
  o.count = 6;
  ASSERT_EQ(run(cmd_reveal, o), kExitOk);
  o.count = 1;
  EXPECT_EQ(run(cmd_reveal, o), kExitError);
  EXPECT_NE(err_.str().find("ProtocolComplete"), std::string::npos);

  o.budget = 1;
  EXPECT_EQ(run(cmd_crack, o), kExitOk);
  ASSERT_EQ(run(cmd_verify, o), kExitOk);
  EXPECT_NE(out_.str().find("payout: $1000000000"), std::string::npos);
}

TEST_F(CliTest, TamperedBulletinFailsVerification) {
  ASSERT_EQ(run(cmd_setup, options()), kExitOk);
  Options o = options();
  o.count = 24;
  ASSERT_EQ(run(cmd_reveal, o), kExitOk);

  auto bulletin = bulletin_from_json(read_file(dir_ / "bulletin.json"));
  bulletin.revealed[5] = bulletin.revealed[5] == '0' ? '1' : '0';
  const fs::path tampered = dir_ / "tampered.json";
  write_file_atomic(tampered, bulletin_to_json(bulletin));
  o.bulletin = tampered;
  EXPECT_EQ(run(cmd_verify, o), kExitVerifyFailed);
  EXPECT_NE(out_.str().find("FAIL"), std::string::npos);

  o.budget = 1;
  EXPECT_EQ(run(cmd_crack, o), kExitNotFound);
}

TEST_F(CliTest, SimulateDeskWritesCsvs) {
  ASSERT_EQ(run(cmd_simulate, options()), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("jumpDay = 18 of 24"), std::string::npos);

  const std::string summary = read_file(dir_ / "summary.csv");
  EXPECT_NE(summary.find("jump_day,,18"), std::string::npos);
  EXPECT_NE(summary.find("crack_day,agent-1e6,18"), std::string::npos);
  EXPECT_NE(summary.find("crack_day,agent-1e3,21"), std::string::npos);

  std::istringstream timeline(read_file(dir_ / "timeline.csv"));
  std::string line;
  std::size_t rows = 0;
  std::getline(timeline, line);
  EXPECT_EQ(line, "day,code,posterior,price");
  while (std::getline(timeline, line)) ++rows;
  EXPECT_EQ(rows, 24u * 100u);
}

TEST(RunConfig, ParsesFileAndPresets) {
  const auto run = run_config_from_json(R"({
    "numCodes": 10, "digits": 8, "days": 8, "payout": 5000,
    "baseCapDefault": 77, "seed": 5, "outputDir": "o",
    "agents": [{"name": "x", "budget": 40}]})");
  EXPECT_EQ(run.protocol.num_codes, 10u);
  EXPECT_EQ(run.protocol.code_labels.size(), 10u);
  EXPECT_EQ(run.base_caps(), std::vector<Dollars>(10, 77));
  ASSERT_EQ(run.agents.size(), 1u);
  EXPECT_EQ(run.agents[0].budget.max_candidates, 40u);
  EXPECT_EQ(run.seed, 5u);

  EXPECT_EQ(load_run_config("paper").protocol.digits, 300u);
  const auto desk = load_run_config("desk");
  EXPECT_EQ(desk.protocol.digits, 24u);
  ASSERT_EQ(desk.agents.size(), 2u);
  EXPECT_EQ(desk.agents[0].budget.max_candidates, 1000u);
  EXPECT_EQ(desk.agents[1].budget.max_candidates, 1000000u);

  EXPECT_THROW(run_config_from_json(R"({"numCodes": 10})"), Error);
  EXPECT_THROW(run_config_from_json(
                   R"({"numCodes": 10, "digits": 8, "days": 8, "payout": 5, "agents": [{"name": "x", "budget": 0}]})"),
               Error);
}
