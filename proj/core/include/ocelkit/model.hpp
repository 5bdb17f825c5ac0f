#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocelkit/log.hpp"

namespace ocelkit {

enum class ViolationKind : std::uint8_t {
  DanglingObjectReference,
  UnknownObjectType,
  DuplicateEventId,
  EventOrder,
  UnsortedObjectMap,
  AttributeTypeMismatch,
  UndeclaredAttribute,
  IndexMismatch,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  /// Identifier of the offending event or object.
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks every structural invariant of the log; never throws.
ValidationReport validate(const OcelLog& log);

/// Allowed (object type, activity) pairs.
class RelationSet {
 public:
  using Pair = std::pair<ObjectTypeId, ActivityId>;

  RelationSet() = default;
  explicit RelationSet(std::vector<Pair> pairs);

  void insert(ObjectTypeId t, ActivityId a);
  bool contains(ObjectTypeId t, ActivityId a) const;
  std::span<const Pair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Pairs whose type is not in the log or whose activity never occurs.
  std::vector<Pair> vacuous_pairs(const OcelLog& log) const;

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

 private:
  std::vector<Pair> pairs_;  // sorted, unique
};

/// Every (type, activity) pair that co-occurs on at least one event.
RelationSet co_occurring_relations(const OcelLog& log);

/// Keeps only objects whose type is in `kept` and drops the rest from every
/// omap. Events and their order are untouched.
/// Throws InvalidArgument when a type is not part of the log.
OcelLog project_object_types(const OcelLog& log, std::span<const ObjectTypeId> kept);

/// Keeps the events in `kept`, preserving order. Objects are untouched.
/// Throws InvalidArgument on an unknown event.
OcelLog project_events(const OcelLog& log, std::span<const EventId> kept);

/// Keeps the objects in `kept` and intersects every omap with them. The set
/// of object types stays as it was.
/// Throws InvalidArgument on an unknown object.
OcelLog project_objects(const OcelLog& log, std::span<const ObjectId> kept);

/// Removes from each event the objects whose (type, activity) pair is not
/// allowed. Pairs that never occur have no effect.
OcelLog restrict_relations(const OcelLog& log, const RelationSet& allowed);

// Name resolution for callers that hold strings (CLI, service, pipelines).
// Each throws InvalidArgument naming the first unknown entry.
std::vector<ObjectTypeId> resolve_object_types(const OcelLog& log, std::span<const std::string> names);
std::vector<EventId> resolve_events(const OcelLog& log, std::span<const std::string> names);
std::vector<ObjectId> resolve_objects(const OcelLog& log, std::span<const std::string> names);
RelationSet resolve_relations(const OcelLog& log, std::span<const std::pair<std::string, std::string>> pairs);

}  // namespace ocelkit
