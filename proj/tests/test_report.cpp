#include <gtest/gtest.h>

#include <sstream>

#include "chordwitness/generators.hpp"
#include "chordwitness/io.hpp"
#include "chordwitness/report.hpp"
#include "support/oracles.hpp"

using namespace chordwitness;

namespace {

std::vector<nlohmann::json> lines_of(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Check, Cube) {
  Report r = check_graph(cube());
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_TRUE(r.three_connected);
  EXPECT_EQ(r.k33_minor_free, std::optional<bool>(true));
  EXPECT_EQ(r.longest_length, 8u);
  std::size_t hamiltonian = 0;
  for (const auto& c : oracle::naive_all_cycles(cube())) hamiltonian += c.size() == 8 ? 1 : 0;
  EXPECT_EQ(hamiltonian, 6u);
  EXPECT_EQ(r.longest_count, hamiltonian);
  EXPECT_EQ(r.chord_histogram, (std::map<std::size_t, std::size_t>{{4, hamiltonian}}));
  EXPECT_EQ(r.chordless_count, 0u);
  EXPECT_EQ(exit_code(r.status), 0);
}

TEST(Check, PetersenHasMinorAndChords) {
  Report r = check_graph(petersen());
  EXPECT_EQ(r.k33_minor_free, std::optional<bool>(false));
  EXPECT_EQ(r.longest_length, 9u);
  EXPECT_EQ(r.status, CheckStatus::pass);
}

TEST(Check, NotThreeConnected) {
  Report r = check_graph(cycle_graph(5));
  EXPECT_EQ(r.status, CheckStatus::not_three_connected);
  EXPECT_FALSE(r.k33_minor_free.has_value());
  EXPECT_EQ(exit_code(r.status), 4);
}

TEST(Check, ExitCodes) {
  EXPECT_EQ(exit_code(CheckStatus::pass), 0);
  EXPECT_EQ(exit_code(CheckStatus::exempt), 0);
  EXPECT_EQ(exit_code(CheckStatus::violation), 1);
  EXPECT_EQ(exit_code(CheckStatus::not_three_connected), 4);
}

TEST(Check, GuardOnLargeInputs) {
  try {
    check_graph(prism(18));
    FAIL() << "expected guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::guard_exceeded);
  }
  CheckOptions assume;
  assume.assume_minor_free = true;
  Report r = check_graph(prism(18), assume);
  EXPECT_TRUE(r.minor_free_assumed);
  EXPECT_EQ(r.status, CheckStatus::pass);
}

TEST(Check, JsonHasNoTimingByDefault) {
  auto j = report_to_json(check_graph(wheel(7)));
  EXPECT_EQ(j["schema"], "chordwitness.report/1");
  EXPECT_FALSE(j.contains("millis"));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["input_hash"].get<std::string>().size(), 16u);
  EXPECT_TRUE(report_to_json(check_graph(wheel(7)), true).contains("millis"));
}

TEST(Campaign, EmptyCampaign) {
  std::ostringstream out;
  CampaignOptions o;
  o.count = 0;
  auto s = run_campaign(o, out);
  EXPECT_EQ(s.instances, 0u);
  auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["schema"], "chordwitness.campaign/1");
  EXPECT_EQ(lines[0]["summary"]["instances"], 0);
}

TEST(Campaign, ApollonianAllPass) {
  std::ostringstream out;
  CampaignOptions o;
  o.spec = {Family::apollonian, 10, 0};
  o.count = 200;
  o.seed = 1;
  auto s = run_campaign(o, out);
  EXPECT_EQ(s.instances, 200u);
  EXPECT_EQ(s.passes, 200u);
  EXPECT_EQ(s.violations, 0u);
  EXPECT_EQ(s.errors, 0u);
  EXPECT_EQ(lines_of(out.str()).size(), 201u);
}

TEST(Campaign, TutteWheelReportsMinors) {
  std::ostringstream out;
  CampaignOptions o;
  o.spec = {Family::tutte_wheel, 10, 0, -1, 18};
  o.count = 200;
  o.seed = 2;
  auto s = run_campaign(o, out);
  EXPECT_EQ(s.violations, 0u);
  EXPECT_EQ(s.errors, 0u);
  EXPECT_EQ(s.passes + s.exempt, 200u);
  std::size_t with_minor = 0;
  for (const auto& j : lines_of(out.str()))
    if (j.contains("k33_minor_free") && j["k33_minor_free"] == false) ++with_minor;
  EXPECT_GT(with_minor, 0u);
}

TEST(Campaign, ParallelOutputIdentical) {
  CampaignOptions o;
  o.spec = {Family::flip_triangulation, 9, 0};
  o.count = 40;
  o.seed = 99;
  std::ostringstream serial, parallel;
  run_campaign(o, serial);
  o.parallel = 4;
  run_campaign(o, parallel);
  EXPECT_EQ(serial.str(), parallel.str());
}

TEST(Campaign, ErrorsAreRecordedPerInstance) {
  std::ostringstream out;
  CampaignOptions o;
  o.spec = {Family::tutte_wheel, 6, 0, -1, 40};
  o.count = 3;
  auto s = run_campaign(o, out);
  EXPECT_EQ(s.errors, 3u);
  auto lines = lines_of(out.str());
  EXPECT_EQ(lines[0]["error"], "invalid_input");
}
