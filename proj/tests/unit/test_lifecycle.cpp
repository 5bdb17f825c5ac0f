#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ocelkit/errors.hpp"
#include "ocelkit/filters.hpp"
#include "ocelkit/lifecycle.hpp"
#include "ocelkit/model.hpp"
#include "oracles.hpp"

using namespace ocelkit;
using namespace ocelkit::testing;

namespace {

std::vector<std::string> ids(const OcelLog& log, const std::vector<EventId>& v) {
  std::vector<std::string> out;
  for (EventId e : v) out.push_back(log.name(e));
  return out;
}

std::set<std::string> tagged(const OcelLog& log) {
  std::set<std::string> out;
  for (const auto& t : essential_events(log)) out.insert(log.name(t.event));
  return out;
}

/// Table 1 restricted to three types, then without (Orders, Pick Item).
OcelLog table2_log() {
  const OcelLog log = table1_log();
  const OcelLog t2 =
      project_object_types(log, resolve_object_types(log, std::vector<std::string>{"Orders", "Items", "Deliveries"}));
  RelationSet allowed;
  const auto orders = *t2.lookup_object_type("Orders");
  const auto pick = *t2.lookup_activity("Pick Item");
  for (const auto& [t, a] : co_occurring_relations(t2).pairs())
    if (!(t == orders && a == pick)) allowed.insert(t, a);
  return restrict_relations(t2, allowed);
}

}  // namespace

TEST(Lifecycle, Table1Examples) {
  const OcelLog log = table1_log();
  EXPECT_EQ(ids(log, lifecycle(log, *log.lookup_object("o1"))), (std::vector<std::string>{"e1", "e2", "e4", "e7"}));
  EXPECT_EQ(ids(log, lifecycle(log, *log.lookup_object("r1"))), (std::vector<std::string>{"e12"}));
  EXPECT_EQ(lifecycle(log, *log.lookup_object("Normal")).size(), 24u);
}

TEST(Lifecycle, EmptyForObjectWithoutEvents) {
  LogBuilder b;
  b.add_object("idle", "T");
  const OcelLog log = std::move(b).build();
  EXPECT_TRUE(lifecycle(log, *log.lookup_object("idle")).empty());
  EXPECT_THROW(lifecycle(log, ObjectId{5}), InvalidArgument);
}

TEST(InteractionLifecycle, Table1Examples) {
  const OcelLog log = table1_log();
  const auto o = [&](const char* n) { return *log.lookup_object(n); };
  EXPECT_EQ(ids(log, interaction_lifecycle(log, o("o1"), o("i1"))), (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(ids(log, interaction_lifecycle(log, o("i1"), o("d1"))), (std::vector<std::string>{"e3"}));
  EXPECT_TRUE(interaction_lifecycle(log, o("o1"), o("d1")).empty());
  EXPECT_EQ(interaction_lifecycle(log, o("i5"), o("o2")), interaction_lifecycle(log, o("o2"), o("i5")));
  EXPECT_THROW(interaction_lifecycle(log, o("o1"), o("o1")), InvalidArgument);
}

TEST(LifecycleIndex, StoresOnlyCoOccurringPairs) {
  const OcelLog log = table1_log();
  const LifecycleIndex index(log);
  for (const auto& p : index.pairs()) {
    EXPECT_LT(p.first, p.second);
    EXPECT_GT(p.size, 0u);
  }
  EXPECT_TRUE(index.interaction(*log.lookup_object("o1"), *log.lookup_object("d1")).empty());
  EXPECT_EQ(index.interaction(*log.lookup_object("o2"), *log.lookup_object("i5")).size(), 3u);
}

TEST(EssentialEvents, Table2BoldRows) {
  const OcelLog log = table2_log();
  EXPECT_EQ(tagged(log), table2_bold_events());
}

TEST(EssentialEvents, KeepingOrderPicksTagsEverything) {
  // With (Orders, Pick Item) kept, every pick starts, ends or interrupts an
  // order-item interaction.
  const OcelLog log = table1_log();
  const OcelLog t2 =
      project_object_types(log, resolve_object_types(log, std::vector<std::string>{"Orders", "Items", "Deliveries"}));
  EXPECT_EQ(tagged(t2).size(), 24u);
  EXPECT_EQ(tagged(t2), oracle::essential_events(to_plain(t2)));
}

TEST(EssentialEvents, RawTable1TagsEverything) {
  const OcelLog log = table1_log();
  EXPECT_EQ(tagged(log).size(), 24u);
  EXPECT_EQ(tagged(log), oracle::essential_events(to_plain(log)));
}

TEST(EssentialEvents, SingleEventStartsAndEnds) {
  LogBuilder b;
  b.add_object("a", "T");
  b.add_event("only", "X", at("2020-01-01T00:00:00"), {"a"});
  const OcelLog log = std::move(b).build();
  const auto tags = essential_events(log);
  ASSERT_EQ(tags.size(), 1u);
  EXPECT_TRUE(tags[0].has(EssentialRule::StartsLifecycle));
  EXPECT_TRUE(tags[0].has(EssentialRule::EndsLifecycle));
  EXPECT_FALSE(tags[0].has(EssentialRule::Synchronizes));
}

TEST(EssentialEvents, EventWithoutObjectsIsNeverEssential) {
  LogBuilder b;
  b.add_object("a", "T");
  const auto t = at("2020-01-01T00:00:00");
  b.add_event("e1", "X", t, {"a"});
  b.add_event("e2", "X", t + std::chrono::minutes(1), {});
  b.add_event("e3", "X", t + std::chrono::minutes(2), {"a"});
  const OcelLog log = std::move(b).build();
  EXPECT_EQ(tagged(log), (std::set<std::string>{"e1", "e3"}));
}

TEST(EssentialEvents, SynchronizationWitnessIsConsistent) {
  // a and b interact at e1 and e4; e2 touches only a, e3 only b.
  LogBuilder b;
  b.add_object("a", "T");
  b.add_object("b", "T");
  b.add_object("c", "T");
  const auto t = at("2020-01-01T00:00:00");
  b.add_event("e1", "X", t, {"a", "b"});
  b.add_event("e2", "Y", t + std::chrono::minutes(1), {"a", "c"});
  b.add_event("e3", "Y", t + std::chrono::minutes(2), {"b", "c"});
  b.add_event("e4", "Z", t + std::chrono::minutes(3), {"a", "b"});
  b.add_event("e5", "Z", t + std::chrono::minutes(4), {"a", "b"});
  const OcelLog log = std::move(b).build();
  const LifecycleIndex index(log);
  bool saw_sync = false;
  for (const auto& tag : essential_events(index)) {
    if (!tag.has(EssentialRule::Synchronizes)) continue;
    saw_sync = true;
    const Witness w = tag.witness(EssentialRule::Synchronizes);
    EXPECT_NE(w.first, w.second);
    const auto inter = index.interaction(w.first, w.second);
    ASSERT_GE(inter.size(), 2u);
    EXPECT_GT(tag.position, inter.front());
    EXPECT_LT(tag.position, inter.back());
    EXPECT_EQ(std::find(inter.begin(), inter.end(), tag.position), inter.end());
    const auto& omap = log.events()[tag.position].omap;
    EXPECT_TRUE(std::binary_search(omap.begin(), omap.end(), w.first) ||
                std::binary_search(omap.begin(), omap.end(), w.second));
  }
  EXPECT_TRUE(saw_sync);
  EXPECT_EQ(tagged(log), oracle::essential_events(to_plain(log)));
}

TEST(EssentialEvents, MiddleOfPlainLifecycleIsNotEssential) {
  LogBuilder b;
  b.add_object("a", "T");
  const auto t = at("2020-01-01T00:00:00");
  for (int i = 0; i < 5; ++i) b.add_event("e" + std::to_string(i), "X", t + std::chrono::minutes(i), {"a"});
  const OcelLog log = std::move(b).build();
  EXPECT_EQ(tagged(log), (std::set<std::string>{"e0", "e4"}));
}
