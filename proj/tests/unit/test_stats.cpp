#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "ocelkit/errors.hpp"
#include "ocelkit/stats.hpp"

using namespace ocelkit;
using namespace ocelkit::testing;
using nlohmann::json;

TEST(Summarize, Table1) {
  const LogSummary s = summarize(table1_log());
  EXPECT_EQ(s.events, 24u);
  EXPECT_EQ(s.objects, 15u);
  EXPECT_EQ(s.object_types, 5u);
  EXPECT_EQ(s.activities, 6u);
  EXPECT_EQ(s.incidences, 68u);
  ASSERT_EQ(s.types.size(), 5u);
  EXPECT_EQ(s.types[0].type, "Deliveries");
  EXPECT_EQ(s.types[0].objects, 4u);
  EXPECT_EQ(s.types[0].events, 10u);
  EXPECT_EQ(s.types[0].activity_ratio, (Ratio{8, 10}));
  EXPECT_EQ(s.types[4].type, "Weight Classes");
  EXPECT_EQ(s.types[4].events, 24u);
  ASSERT_EQ(s.activity_counts.size(), 6u);
  EXPECT_EQ(s.activity_counts[0].activity, "Create Order");
  EXPECT_EQ(s.activity_counts[0].events, 3u);
}

TEST(Summarize, EmptyLog) {
  const LogSummary s = summarize(OcelLog{});
  EXPECT_EQ(s, LogSummary{});
}

TEST(RelationMatrix, CoversEveryCombination) {
  const RelationMatrix m = relation_matrix(table1_log());
  EXPECT_EQ(m.types.size(), 5u);
  EXPECT_EQ(m.activities.size(), 6u);
  EXPECT_EQ(m.cells.size(), 30u);
  const RelationCell* c = m.find("Orders", "Pick Item");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->co_occurs);
  EXPECT_EQ(c->ratio, (Ratio{3, 7}));
  const RelationCell* never = m.find("Goods Issues", "Pay Order");
  ASSERT_NE(never, nullptr);
  EXPECT_FALSE(never->co_occurs);
  EXPECT_EQ(never->ratio, (Ratio{1, 1}));
  EXPECT_EQ(m.find("Ships", "Pay Order"), nullptr);
}

TEST(Diff, PercentsRoundDown) {
  LogSummary before, after;
  before.events = 24;
  after.events = 16;
  before.objects = after.objects = 13;
  before.object_types = 5;
  after.object_types = 3;
  before.incidences = 4077;
  after.incidences = 2686;
  const StepDiff d = diff(before, after, "OE2");
  EXPECT_EQ(d.step, "OE2");
  EXPECT_EQ(d.events.percent(), 66u);
  EXPECT_EQ(d.events.removed(), 8u);
  EXPECT_EQ(d.objects.percent(), 100u);
  EXPECT_EQ(d.object_types.percent(), 60u);
  EXPECT_EQ(d.incidences.percent(), 65u);
}

TEST(Diff, ZeroBeforeIsFullRetentionAndGrowthIsRejected) {
  LogSummary zero, one;
  one.events = 1;
  EXPECT_EQ(diff(zero, zero).events.percent(), 100u);
  EXPECT_EQ(diff(one, zero).events.percent(), 0u);
  EXPECT_THROW(diff(zero, one), InconsistentSummary);
}

TEST(StatsJson, SummaryShape) {
  const json j = json::parse(to_json(summarize(table1_log())));
  EXPECT_EQ(j["events"], 24);
  EXPECT_EQ(j["incidences"], 68);
  EXPECT_EQ(j["types"].size(), 5u);
  EXPECT_EQ(j["types"][4]["activity_ratio"]["num"], 6);
  EXPECT_EQ(j["types"][4]["activity_ratio"]["den"], 24);
  EXPECT_DOUBLE_EQ(j["types"][4]["activity_ratio"]["value"].get<double>(), 0.25);
}

TEST(StatsJson, DiffShape) {
  LogSummary before, after;
  before.events = 24;
  after.events = 16;
  DiffReport report;
  report.steps.push_back(diff(before, after, "OE2"));
  const json j = json::parse(to_json(report));
  ASSERT_EQ(j["steps"].size(), 1u);
  EXPECT_EQ(j["steps"][0]["step"], "OE2");
  EXPECT_EQ(j["steps"][0]["events"]["before"], 24);
  EXPECT_EQ(j["steps"][0]["events"]["after"], 16);
  EXPECT_EQ(j["steps"][0]["events"]["removed"], 8);
  EXPECT_EQ(j["steps"][0]["events"]["percent"], 66);
}

TEST(StatsText, MentionsCountsAndPercents) {
  const std::string s = to_text(summarize(table1_log()));
  EXPECT_NE(s.find("24 events"), std::string::npos);
  EXPECT_NE(s.find("Weight Classes"), std::string::npos);
  LogSummary before, after;
  before.events = 24;
  after.events = 16;
  EXPECT_NE(to_text(diff(before, after)).find("24 -> 16 (66%)"), std::string::npos);
}
