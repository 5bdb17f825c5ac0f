#pragma once

#include <cstdint>
#include <vector>

#include "ocelkit/log.hpp"
#include "ocelkit/model.hpp"
#include "ocelkit/ratio.hpp"

namespace ocelkit {

// Selectors. Each returns the set to hand to the matching projection in
// model.hpp; sets are sorted by token. Thresholds compare with >=.
// Ratio thresholds outside [0, 1] throw InvalidArgument.

/// Object types with at least `n` objects (OTF1).
std::vector<ObjectTypeId> select_types_min_objects(const OcelLog& log, std::uint64_t n);

/// Object types related to at least `n` distinct events (OTF2).
std::vector<ObjectTypeId> select_types_min_events(const OcelLog& log, std::uint64_t n);

/// Sum over the objects of `type` of distinct activities in their lifecycle,
/// over the sum of lifecycle lengths. A type whose objects occur in no event
/// has ratio 1/1.
Ratio unique_activity_ratio(const OcelLog& log, ObjectTypeId type);

/// Object types whose unique-activity ratio is at least `r` (OTF3).
std::vector<ObjectTypeId> select_types_min_activity_ratio(const OcelLog& log, double r);

/// Events whose activity occurs at least `n` times (OE1).
std::vector<EventId> select_events_min_activity_count(const OcelLog& log, std::uint64_t n);

/// Essential events (OE2).
std::vector<EventId> select_events_essential(const OcelLog& log);

/// Union of OE1(n) and OE2 (OE3).
std::vector<EventId> select_events_essential_or_frequent(const OcelLog& log, std::uint64_t n);

/// Objects of `type` touching at least one event of `activity`, over the
/// number of (object, event) incidences of that type with that activity.
/// Pairs that never co-occur have ratio 1/1 and `incidences == 0`.
struct RelationStat {
  ObjectTypeId type;
  ActivityId activity;
  std::uint64_t unique_objects = 0;
  std::uint64_t incidences = 0;

  Ratio ratio() const noexcept { return incidences == 0 ? Ratio{1, 1} : Ratio{unique_objects, incidences}; }
};

/// One entry per (type in the log) x (activity occurring in the log), sorted
/// by (type, activity).
std::vector<RelationStat> relation_stats(const OcelLog& log);

/// Pairs whose unique-object ratio is at least `r`. Pairs that never
/// co-occur are included.
RelationSet select_relations_min_unique_ratio(const OcelLog& log, double r);

/// Events whose omap is empty are removed.
OcelLog drop_empty_events(const OcelLog& log);

/// Objects that occur in no event are removed.
OcelLog drop_orphan_objects(const OcelLog& log);

}  // namespace ocelkit
