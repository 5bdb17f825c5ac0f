#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ocelkit/symbols.hpp"

namespace ocelkit {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

/// Order matches the alternatives of AttributeValue.
enum class AttributeType : std::uint8_t { String, Integer, Float, Boolean, Timestamp };

using AttributeValue = std::variant<std::string, std::int64_t, double, bool, Timestamp>;

inline AttributeType type_of(const AttributeValue& v) { return static_cast<AttributeType>(v.index()); }

std::string_view to_string(AttributeType t);
std::optional<AttributeType> attribute_type_from_string(std::string_view s);

/// Attribute assignments of one event or object, sorted by attribute id.
using AttributeMap = std::vector<std::pair<AttributeId, AttributeValue>>;

/// Names and value types of the attributes used in a log.
class AttributeSchema {
 public:
  /// Records the type of `name` on first sight. Returns false when the name
  /// is already declared with a different type.
  bool declare(AttributeId name, AttributeType type);
  std::optional<AttributeType> type_of(AttributeId name) const;
  const std::map<AttributeId, AttributeType>& entries() const noexcept { return types_; }
  std::size_t size() const noexcept { return types_.size(); }

  friend bool operator==(const AttributeSchema&, const AttributeSchema&) = default;

 private:
  std::map<AttributeId, AttributeType> types_;
};

/// Parses ISO-8601 instants: `YYYY-MM-DD`, optionally followed by `T` or a
/// space and `HH:MM[:SS[.fraction]]`, optionally followed by `Z` or `±HH[:]MM`.
/// Missing offsets mean UTC. Fractions are truncated to milliseconds.
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// True when `text` has the full `YYYY-MM-DDTHH:MM:SS` shape this library
/// writes; used to recognise timestamp-typed attributes in JSON.
bool looks_like_timestamp(std::string_view text);

/// `YYYY-MM-DDTHH:MM:SS[.mmm]+00:00`
std::string format_timestamp(Timestamp t);

std::string format_value(const AttributeValue& v);

}  // namespace ocelkit
