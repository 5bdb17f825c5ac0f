#include "io_common.hpp"

#include <algorithm>

namespace ocelkit::detail {

void LogAssembler::declare_type(std::string_view type) {
  const ObjectTypeId t = dict_->object_type(type);
  if (type_declared_.size() <= t.value) type_declared_.resize(t.value + 1, false);
  if (!type_declared_[t.value]) {
    type_declared_[t.value] = true;
    types_.push_back(t);
  }
}

void LogAssembler::add_object(std::string_view id, std::string_view type, AttributeMap ovmap, const std::string& where) {
  if (auto t = dict_->object_types.find(type); !t || *t >= type_declared_.size() || !type_declared_[*t]) {
    warn(where + ": object type '" + std::string(type) + "' not declared in the global log; adding it");
    declare_type(type);
  }
  const ObjectId o = dict_->object(id);
  if (object_seen_.size() <= o.value) object_seen_.resize(o.value + 1, false);
  if (object_seen_[o.value]) throw ParseError(where, "duplicate object id");
  object_seen_[o.value] = true;
  std::sort(ovmap.begin(), ovmap.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  objects_.push_back({o, dict_->object_type(type), std::move(ovmap)});
}

void LogAssembler::add_event(std::string_view id, std::string_view activity, Timestamp time,
                             const std::vector<std::string>& omap, AttributeMap vmap, const std::string& where) {
  Event e;
  e.id = dict_->event(id);
  if (event_seen_.size() <= e.id.value) event_seen_.resize(e.id.value + 1, false);
  if (event_seen_[e.id.value]) throw ParseError(where, "duplicate event id");
  event_seen_[e.id.value] = true;
  e.activity = dict_->activity(activity);
  e.time = time;
  for (const auto& name : omap) {
    const auto o = dict_->objects.find(name);
    if (!o || *o >= object_seen_.size() || !object_seen_[*o])
      throw ParseError(where, "omap references undeclared object '" + name + "'");
    e.omap.push_back(ObjectId{*o});
  }
  std::sort(e.omap.begin(), e.omap.end());
  e.omap.erase(std::unique(e.omap.begin(), e.omap.end()), e.omap.end());
  std::sort(vmap.begin(), vmap.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  e.vmap = std::move(vmap);
  events_.push_back(std::move(e));
}

std::pair<AttributeId, AttributeValue> LogAssembler::attribute(std::string_view name, AttributeValue value,
                                                               const std::string& where) {
  const AttributeId id = dict_->attribute(name);
  if (const auto declared = schema_.type_of(id)) {
    const AttributeType got = type_of(value);
    if (*declared == got) return {id, std::move(value)};
    if (*declared == AttributeType::Float && got == AttributeType::Integer)
      return {id, static_cast<double>(std::get<std::int64_t>(value))};
    throw ParseError(where, "attribute '" + std::string(name) + "' has type " + std::string(to_string(got)) +
                                " but was first seen as " + std::string(to_string(*declared)));
  }
  schema_.declare(id, type_of(value));
  return {id, std::move(value)};
}

OcelLog LogAssembler::finish() {
  for (const auto& name : declared_attrs_) {
    const auto id = dict_->attributes.find(name);
    if (!id || !schema_.type_of(AttributeId{*id}))
      warn("attribute '" + name + "' declared but never used; its type is unknown and it is dropped");
  }
  std::sort(objects_.begin(), objects_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return OcelLog(std::move(dict_), std::move(events_), std::move(objects_), std::move(types_), std::move(schema_));
}

std::vector<std::pair<std::string, const AttributeValue*>> sorted_attributes(const Dictionary& d,
                                                                             const AttributeMap& m) {
  std::vector<std::pair<std::string, const AttributeValue*>> out;
  out.reserve(m.size());
  for (const auto& [k, v] : m) out.emplace_back(d.name(k), &v);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::string> sorted_names(const Dictionary& d, const std::vector<ObjectId>& omap) {
  std::vector<std::string> out;
  out.reserve(omap.size());
  for (ObjectId o : omap) out.push_back(d.name(o));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ocelkit::detail
