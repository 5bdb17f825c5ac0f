#pragma once

// Shared bookkeeping for the JSON and XML readers. Not installed.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ocelkit/errors.hpp"
#include "ocelkit/io.hpp"
#include "ocelkit/log.hpp"

namespace ocelkit::detail {

/// Accumulates a log while a reader walks a document.
class LogAssembler {
 public:
  explicit LogAssembler(Warnings* warnings) : warnings_(warnings), dict_(std::make_shared<Dictionary>()) {}

  Dictionary& dict() { return *dict_; }
  void warn(std::string message) {
    if (warnings_) warnings_->push_back(std::move(message));
  }

  void declare_type(std::string_view type);
  void declare_attribute_name(std::string_view name) { declared_attrs_.push_back(std::string(name)); }

  /// `where` names the entity in errors.
  void add_object(std::string_view id, std::string_view type, AttributeMap ovmap, const std::string& where);
  void add_event(std::string_view id, std::string_view activity, Timestamp time,
                 const std::vector<std::string>& omap, AttributeMap vmap, const std::string& where);

  std::optional<AttributeType> declared_type(std::string_view name) const {
    const auto id = dict_->attributes.find(name);
    return id ? schema_.type_of(AttributeId{*id}) : std::nullopt;
  }

  /// Coerces `value` to the schema type of `name`, declaring it on first
  /// use. Throws ParseError on a conflict.
  std::pair<AttributeId, AttributeValue> attribute(std::string_view name, AttributeValue value, const std::string& where);

  OcelLog finish();

 private:
  Warnings* warnings_;
  std::shared_ptr<Dictionary> dict_;
  std::vector<ObjectTypeId> types_;
  std::vector<bool> type_declared_;
  std::vector<std::string> declared_attrs_;
  AttributeSchema schema_;
  std::vector<ObjectRecord> objects_;
  std::vector<bool> object_seen_;
  std::vector<bool> event_seen_;
  std::vector<Event> events_;
};

/// Sorted (name, value) view of an attribute map for deterministic output.
std::vector<std::pair<std::string, const AttributeValue*>> sorted_attributes(const Dictionary& d, const AttributeMap& m);
std::vector<std::string> sorted_names(const Dictionary& d, const std::vector<ObjectId>& omap);

}  // namespace ocelkit::detail
