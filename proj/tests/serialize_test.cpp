#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gradreveal/error.hpp"
#include "gradreveal/report.hpp"
#include "gradreveal/serialize.hpp"
#include "json.hpp"

using namespace gradreveal;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("gradreveal_serialize_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST(BulletinJson, FieldsAndRoundTrip) {
  auto rng = RandomStream::seeded(10);
  auto [secret, bulletin] = setup(ProtocolConfig::desk(), rng);
  bulletin = reveal_next(secret, bulletin);
  bulletin = reveal_next(secret, bulletin);

  const std::string text = bulletin_to_json(bulletin);
  const auto object = nlohmann::json::parse(text);
  EXPECT_EQ(object.at("n").get<std::string>(), bulletin.n.to_string());
  EXPECT_EQ(object.at("revealed").get<std::string>(), secret.p.to_string().substr(0, 2));
  EXPECT_EQ(object.at("day").get<int>(), 2);
  EXPECT_EQ(object.at("config").at("numCodes").get<int>(), 100);
  EXPECT_EQ(object.at("config").at("codeLabels").size(), 100u);

  EXPECT_EQ(bulletin_from_json(text), bulletin);
}

TEST(BulletinJson, NeverContainsSecretMaterial) {
  auto rng = RandomStream::seeded(11);
  const auto [secret, bulletin] = setup(ProtocolConfig::paper(), rng);
  const std::string text = bulletin_to_json(bulletin);
  EXPECT_EQ(text.find(secret.p.to_string()), std::string::npos);
  EXPECT_EQ(text.find(secret.q.to_string()), std::string::npos);
  const auto object = nlohmann::json::parse(text);
  EXPECT_FALSE(object.contains("w"));
  EXPECT_FALSE(object.contains("p"));
  EXPECT_FALSE(object.contains("q"));
}

TEST(BulletinJson, RejectsInconsistentFiles) {
  auto rng = RandomStream::seeded(12);
  const auto [secret, bulletin] = setup(ProtocolConfig::desk(), rng);
  auto object = nlohmann::json::parse(bulletin_to_json(bulletin));

  auto bad = object;
  bad["day"] = 3;
  EXPECT_THROW(bulletin_from_json(bad.dump()), Error);
  bad = object;
  bad["n"] = "-5";
  EXPECT_THROW(bulletin_from_json(bad.dump()), Error);
  bad = object;
  bad["revealed"] = "1x";
  bad["day"] = 2;
  EXPECT_THROW(bulletin_from_json(bad.dump()), Error);
  bad = object;
  bad["config"]["days"] = 25;
  EXPECT_THROW(bulletin_from_json(bad.dump()), Error);
  EXPECT_THROW(bulletin_from_json("{"), Error);
}

TEST(SecretJson, RoundTrip) {
  auto rng = RandomStream::seeded(13);
  const auto [secret, bulletin] = setup(ProtocolConfig::desk(), rng);
  const auto object = nlohmann::json::parse(secret_to_json(secret));
  EXPECT_EQ(object.at("w").get<unsigned>(), secret.w.value);
  EXPECT_EQ(object.at("p").get<std::string>(), secret.p.to_string());
  EXPECT_EQ(secret_from_json(secret_to_json(secret)), secret);
}

TEST(CrackReport, CarriesOutcomeCountsAndTime) {
  CrackResult result;
  result.outcome = CrackOutcome::BudgetExceeded;
  result.required = ArbInt(400000);
  const auto object = nlohmann::json::parse(crack_report_to_json(result, 0.25));
  EXPECT_EQ(object.at("outcome"), "BudgetExceeded");
  EXPECT_EQ(object.at("candidateCount"), "400000");
  EXPECT_EQ(object.at("testsUsed"), 0);
  EXPECT_DOUBLE_EQ(object.at("elapsedSeconds").get<double>(), 0.25);
  EXPECT_FALSE(object.contains("p"));
}

TEST(Files, OwnerOnlyPermissions) {
  TempDir dir;
  write_file_atomic(dir.path / "secret.json", "{}", FileMode::OwnerOnly);
  write_file_atomic(dir.path / "bulletin.json", "{}");
  const auto secret_perms = fs::status(dir.path / "secret.json").permissions();
  EXPECT_EQ(secret_perms & (fs::perms::group_all | fs::perms::others_all), fs::perms::none);
  EXPECT_EQ(read_file(dir.path / "bulletin.json"), "{}");
}

TEST(Files, UncommittedTransactionLeavesNothing) {
  TempDir dir;
  {
    FileTransaction files;
    files.stage(dir.path / "a.txt", "a");
    files.stage(dir.path / "b.txt", "b");
  }
  EXPECT_TRUE(fs::is_empty(dir.path));
  EXPECT_THROW(write_file_atomic(dir.path / "missing" / "x.txt", "x"), Error);
  EXPECT_THROW(read_file(dir.path / "nope"), Error);
}

TEST(Csv, TimelineAndSummaryLayout) {
  SimulationReport report;
  report.winner = Code{1};
  report.jump_day = 2;
  report.per_day.push_back({1, {0.5, 0.5}, {510, 520}, std::nullopt});
  report.per_day.push_back({2, {0.0, 1.0}, {10, 1020}, std::string("a")});
  report.crack_days = {{"a", 2}, {"b", std::nullopt}};

  std::ostringstream timeline;
  write_timeline_csv(timeline, report);
  EXPECT_EQ(timeline.str(),
            "day,code,posterior,price\n"
            "1,0,0.5,510\n1,1,0.5,520\n2,0,0,10\n2,1,1,1020\n");

  std::ostringstream summary;
  write_summary_csv(summary, report);
  EXPECT_EQ(summary.str(),
            "record,label,value\njump_day,,2\nwinner,,1\ncrack_day,a,2\ncrack_day,b,never\n");
}
