#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ocelkit/log.hpp"

namespace ocelkit::testing {

std::filesystem::path data_dir();
std::filesystem::path table1_path();

Timestamp at(const char* text);

/// The order-to-cash log of the three orders, built in code (independent of
/// the JSON fixture). "Deliver Successful" on e6 is spelled "Delivery
/// Successful" like the other three deliveries.
OcelLog table1_log();

/// Bold rows of the filtered table: the events kept when essential events
/// are computed after dropping the (Orders, Pick Item) relations.
std::set<std::string> table2_bold_events();

struct RandomShape {
  std::uint32_t max_events = 40;
  std::uint32_t max_objects = 20;
  std::uint32_t max_types = 4;
  std::uint32_t max_activities = 5;
  std::uint32_t max_omap = 4;
  /// Timestamps drawn from this many distinct minutes; small values force
  /// ties that the identifier order must break.
  std::uint32_t time_slots = 30;
  bool attributes = false;
  /// Allow events with an empty omap and objects in no event.
  bool sparse = true;
};

/// Hand-rolled random log. Every identifier is unique and every omap entry
/// names a declared object, so the result always validates.
OcelLog random_log(std::uint64_t seed, const RandomShape& shape = {});

/// Name-level view of a log used by the oracles, which never touch the
/// library's indices.
struct PlainEvent {
  std::string id;
  std::string activity;
  Timestamp time;
  std::set<std::string> omap;
};

struct PlainLog {
  std::vector<PlainEvent> events;               // sorted by (time, id) independently of the library
  std::map<std::string, std::string> objects;   // object -> type
  std::set<std::string> types;
};

PlainLog to_plain(const OcelLog& log);

std::set<std::string> event_names(const OcelLog& log);
std::set<std::string> object_names(const OcelLog& log);
std::set<std::string> type_names(const OcelLog& log);
std::set<std::string> names(const OcelLog& log, const std::vector<EventId>& ids);
std::set<std::string> names(const OcelLog& log, const std::vector<ObjectTypeId>& ids);

}  // namespace ocelkit::testing
