#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocelkit/filters.hpp"
#include "ocelkit/log.hpp"
#include "ocelkit/ratio.hpp"

namespace ocelkit {

struct TypeSummary {
  std::string type;
  std::uint64_t objects = 0;
  /// Events related to at least one object of the type.
  std::uint64_t events = 0;
  /// Unique-activity ratio used by the activity-ratio type filter.
  Ratio activity_ratio;

  friend bool operator==(const TypeSummary&, const TypeSummary&) = default;
};

struct ActivitySummary {
  std::string activity;
  std::uint64_t events = 0;

  friend bool operator==(const ActivitySummary&, const ActivitySummary&) = default;
};

struct LogSummary {
  std::uint64_t events = 0;
  std::uint64_t objects = 0;
  std::uint64_t object_types = 0;
  std::uint64_t activities = 0;
  /// (event, object) pairs over all omaps.
  std::uint64_t incidences = 0;
  std::vector<TypeSummary> types;            // sorted by name
  std::vector<ActivitySummary> activity_counts;  // sorted by name

  friend bool operator==(const LogSummary&, const LogSummary&) = default;
};

LogSummary summarize(const OcelLog& log);

struct RelationCell {
  std::string type;
  std::string activity;
  std::uint64_t incidences = 0;
  std::uint64_t unique_objects = 0;
  /// unique / incidences, or 1/1 for a pair that never co-occurs.
  Ratio ratio;
  bool co_occurs = false;
};

/// Every (object type, activity) combination of the log, sorted by
/// (type, activity) name. Combinations that never share an event carry
/// `co_occurs == false`.
struct RelationMatrix {
  std::vector<std::string> types;
  std::vector<std::string> activities;
  std::vector<RelationCell> cells;

  const RelationCell* find(std::string_view type, std::string_view activity) const;
};

RelationMatrix relation_matrix(const OcelLog& log);

struct Retention {
  std::uint64_t before = 0;
  std::uint64_t after = 0;

  std::uint64_t removed() const noexcept { return before > after ? before - after : 0; }
  /// after / before; 1/1 when both are zero.
  Ratio ratio() const noexcept { return before == 0 ? Ratio{1, 1} : Ratio{after, before}; }
  /// Whole percent, rounded down.
  std::uint64_t percent() const noexcept { return ratio().percent_floor(); }
};

struct StepDiff {
  std::string step;
  Retention events;
  Retention objects;
  Retention object_types;
  Retention incidences;
};

struct DiffReport {
  std::vector<StepDiff> steps;
};

/// Retention per dimension. Throws InconsistentSummary when a dimension goes
/// from zero to a positive count.
StepDiff diff(const LogSummary& before, const LogSummary& after, std::string step = "diff");

// Machine-readable renderings (JSON text).
std::string to_json(const LogSummary& s);
std::string to_json(const RelationMatrix& m);
std::string to_json(const StepDiff& d);
std::string to_json(const DiffReport& d);

// Human-readable renderings.
std::string to_text(const LogSummary& s);
std::string to_text(const StepDiff& d);

}  // namespace ocelkit
