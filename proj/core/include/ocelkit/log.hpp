#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocelkit/attribute.hpp"
#include "ocelkit/symbols.hpp"

namespace ocelkit {

struct Event {
  EventId id;
  ActivityId activity;
  Timestamp time;
  AttributeMap vmap;
  /// Related objects, sorted by token and free of duplicates.
  std::vector<ObjectId> omap;
};

struct ObjectRecord {
  ObjectId id;
  ObjectTypeId type;
  AttributeMap ovmap;
};

/// Immutable object-centric event log.
///
/// Events are kept in the log's total order: ascending timestamp, ties broken
/// by comparing event identifiers as strings. Inverted indices (object to
/// event positions, activity to event positions, type to objects) are built
/// once on construction. All strings live in a Dictionary shared with every
/// log projected from this one.
///
/// Construction does not reject content that breaks the log invariants
/// (dangling object references, duplicate event ids, ...); run validate()
/// to list them. The readers in io never produce such logs.
class OcelLog {
 public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  OcelLog();
  OcelLog(std::shared_ptr<const Dictionary> dict, std::vector<Event> events, std::vector<ObjectRecord> objects,
          std::vector<ObjectTypeId> object_types, AttributeSchema schema);

  const Dictionary& dict() const noexcept { return *dict_; }
  const std::shared_ptr<const Dictionary>& shared_dict() const noexcept { return dict_; }

  std::span<const Event> events() const noexcept { return events_; }
  /// Sorted by object token.
  std::span<const ObjectRecord> objects() const noexcept { return objects_; }
  /// Sorted by type token.
  std::span<const ObjectTypeId> object_types() const noexcept { return object_types_; }
  const AttributeSchema& schema() const noexcept { return schema_; }

  std::size_t event_count() const noexcept { return events_.size(); }
  std::size_t object_count() const noexcept { return objects_.size(); }

  const ObjectRecord* find_object(ObjectId id) const;
  bool has_object(ObjectId id) const { return find_object(id) != nullptr; }
  bool has_object_type(ObjectTypeId t) const;
  /// Position of the event in events(), or npos.
  std::uint32_t position_of(EventId id) const;

  /// Positions of the events whose omap contains `id`, ascending.
  std::span<const std::uint32_t> positions_of_object(ObjectId id) const;
  /// Positions of the events carrying `a`, ascending.
  std::span<const std::uint32_t> positions_of_activity(ActivityId a) const;
  /// Objects of type `t`, sorted by token.
  std::span<const ObjectId> objects_of_type(ObjectTypeId t) const;
  /// Distinct activities occurring in the log, sorted by token.
  std::span<const ActivityId> activities() const noexcept { return activities_; }

  /// Total number of (event, object) incidences over all omaps.
  std::size_t incidence_count() const noexcept { return incidences_; }

  template <class Id>
  const std::string& name(Id id) const {
    return dict_->name(id);
  }

  std::optional<EventId> lookup_event(std::string_view s) const;
  std::optional<ActivityId> lookup_activity(std::string_view s) const;
  std::optional<ObjectId> lookup_object(std::string_view s) const;
  std::optional<ObjectTypeId> lookup_object_type(std::string_view s) const;
  std::optional<AttributeId> lookup_attribute(std::string_view s) const;

 private:
  void build_indices();

  std::shared_ptr<const Dictionary> dict_;
  std::vector<Event> events_;
  std::vector<ObjectRecord> objects_;
  std::vector<ObjectTypeId> object_types_;
  AttributeSchema schema_;

  // Dense tables indexed by token value (dictionary-sized).
  std::vector<std::uint32_t> event_pos_;
  std::vector<std::uint32_t> object_slot_;
  std::vector<std::uint32_t> type_slot_;

  // CSR layouts: offsets are indexed by object slot / activity token / type slot.
  std::vector<std::uint32_t> obj_offsets_, obj_positions_;
  std::vector<std::uint32_t> act_offsets_, act_positions_;
  std::vector<std::uint32_t> type_offsets_;
  std::vector<ObjectId> type_objects_;
  std::vector<ActivityId> activities_;
  std::size_t incidences_ = 0;
};

/// Log total order: timestamp, then event identifier string.
bool event_before(const Dictionary& dict, const Event& a, const Event& b);

/// Structural equality by names, independent of token assignment. Compares
/// events (in order), objects, object types and every attribute value
/// (values carry their type). Schema entries no value uses are ignored.
bool equivalent(const OcelLog& a, const OcelLog& b, std::string* first_difference = nullptr);

/// Assembles a log from strings. Meant for fixtures, generators and readers;
/// values are interned as they are added.
class LogBuilder {
 public:
  LogBuilder();

  ObjectTypeId add_object_type(std::string_view type);
  ObjectId add_object(std::string_view id, std::string_view type, AttributeMap ovmap = {});
  EventId add_event(std::string_view id, std::string_view activity, Timestamp time,
                    const std::vector<std::string_view>& objects, AttributeMap vmap = {});
  /// Declares an attribute and returns its id; throws InvalidArgument on a
  /// type conflict with an earlier declaration.
  AttributeId attribute(std::string_view name, AttributeType type);

  Dictionary& dict() { return *dict_; }
  std::size_t event_count() const noexcept { return events_.size(); }

  OcelLog build() &&;

 private:
  std::shared_ptr<Dictionary> dict_;
  std::vector<Event> events_;
  std::vector<ObjectRecord> objects_;
  std::vector<ObjectTypeId> types_;
  std::vector<bool> type_seen_;
  AttributeSchema schema_;
};

}  // namespace ocelkit
