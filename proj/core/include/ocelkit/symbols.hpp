#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace ocelkit {

/// Interned identifier. The tag keeps activities, objects, types etc. apart
/// at compile time; the value indexes the owning SymbolTable.
template <class Tag>
struct Token {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(Token, Token) = default;
};

struct EventTag {};
struct ActivityTag {};
struct ObjectTag {};
struct ObjectTypeTag {};
struct AttributeTag {};

using EventId = Token<EventTag>;
using ActivityId = Token<ActivityTag>;
using ObjectId = Token<ObjectTag>;
using ObjectTypeId = Token<ObjectTypeTag>;
using AttributeId = Token<AttributeTag>;

class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(const SymbolTable&) = delete;
  SymbolTable& operator=(const SymbolTable&) = delete;
  SymbolTable(SymbolTable&&) noexcept = default;
  SymbolTable& operator=(SymbolTable&&) noexcept = default;

  std::uint32_t intern(std::string_view name);
  std::optional<std::uint32_t> find(std::string_view name) const;
  const std::string& name(std::uint32_t token) const { return names_[token]; }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  // deque keeps element addresses stable, so the map can key on views.
  std::deque<std::string> names_;
  std::unordered_map<std::string_view, std::uint32_t> index_;
};

/// String tables shared by a log and every log projected from it.
struct Dictionary {
  SymbolTable events;
  SymbolTable activities;
  SymbolTable objects;
  SymbolTable object_types;
  SymbolTable attributes;

  EventId event(std::string_view s) { return {events.intern(s)}; }
  ActivityId activity(std::string_view s) { return {activities.intern(s)}; }
  ObjectId object(std::string_view s) { return {objects.intern(s)}; }
  ObjectTypeId object_type(std::string_view s) { return {object_types.intern(s)}; }
  AttributeId attribute(std::string_view s) { return {attributes.intern(s)}; }

  const std::string& name(EventId id) const { return events.name(id.value); }
  const std::string& name(ActivityId id) const { return activities.name(id.value); }
  const std::string& name(ObjectId id) const { return objects.name(id.value); }
  const std::string& name(ObjectTypeId id) const { return object_types.name(id.value); }
  const std::string& name(AttributeId id) const { return attributes.name(id.value); }
};

}  // namespace ocelkit

template <class Tag>
struct std::hash<ocelkit::Token<Tag>> {
  std::size_t operator()(ocelkit::Token<Tag> t) const noexcept { return std::hash<std::uint32_t>{}(t.value); }
};
