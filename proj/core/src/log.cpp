#include "ocelkit/log.hpp"

#include <algorithm>

#include "ocelkit/errors.hpp"

namespace ocelkit {

namespace {

template <class Id>
std::optional<Id> lookup(const SymbolTable& table, std::string_view s) {
  if (auto t = table.find(s)) return Id{*t};
  return std::nullopt;
}

}  // namespace

bool event_before(const Dictionary& dict, const Event& a, const Event& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.id == b.id) return false;
  return dict.name(a.id) < dict.name(b.id);
}

OcelLog::OcelLog() : dict_(std::make_shared<const Dictionary>()) { build_indices(); }

OcelLog::OcelLog(std::shared_ptr<const Dictionary> dict, std::vector<Event> events, std::vector<ObjectRecord> objects,
                 std::vector<ObjectTypeId> object_types, AttributeSchema schema)
    : dict_(std::move(dict)),
      events_(std::move(events)),
      objects_(std::move(objects)),
      object_types_(std::move(object_types)),
      schema_(std::move(schema)) {
  const auto before = [this](const Event& a, const Event& b) { return event_before(*dict_, a, b); };
  if (!std::is_sorted(events_.begin(), events_.end(), before)) std::stable_sort(events_.begin(), events_.end(), before);

  const auto by_id = [](const ObjectRecord& a, const ObjectRecord& b) { return a.id < b.id; };
  if (!std::is_sorted(objects_.begin(), objects_.end(), by_id)) std::stable_sort(objects_.begin(), objects_.end(), by_id);

  std::sort(object_types_.begin(), object_types_.end());
  object_types_.erase(std::unique(object_types_.begin(), object_types_.end()), object_types_.end());
  build_indices();
}

void OcelLog::build_indices() {
  const Dictionary& d = *dict_;

  event_pos_.assign(d.events.size(), npos);
  for (std::uint32_t i = 0; i < events_.size(); ++i) event_pos_[events_[i].id.value] = i;

  object_slot_.assign(d.objects.size(), npos);
  for (std::uint32_t i = 0; i < objects_.size(); ++i) object_slot_[objects_[i].id.value] = i;

  type_slot_.assign(d.object_types.size(), npos);
  for (std::uint32_t i = 0; i < object_types_.size(); ++i) type_slot_[object_types_[i].value] = i;

  // object -> event positions
  obj_offsets_.assign(objects_.size() + 1, 0);
  incidences_ = 0;
  for (const Event& e : events_) {
    incidences_ += e.omap.size();
    for (ObjectId o : e.omap)
      if (o.value < object_slot_.size() && object_slot_[o.value] != npos) ++obj_offsets_[object_slot_[o.value] + 1];
  }
  for (std::size_t i = 1; i < obj_offsets_.size(); ++i) obj_offsets_[i] += obj_offsets_[i - 1];
  obj_positions_.assign(obj_offsets_.back(), 0);
  {
    std::vector<std::uint32_t> cursor(obj_offsets_.begin(), obj_offsets_.end() - 1);
    for (std::uint32_t p = 0; p < events_.size(); ++p)
      for (ObjectId o : events_[p].omap)
        if (o.value < object_slot_.size() && object_slot_[o.value] != npos)
          obj_positions_[cursor[object_slot_[o.value]]++] = p;
  }

  // activity -> event positions
  act_offsets_.assign(d.activities.size() + 1, 0);
  for (const Event& e : events_) ++act_offsets_[e.activity.value + 1];
  activities_.clear();
  for (std::uint32_t a = 0; a < d.activities.size(); ++a)
    if (act_offsets_[a + 1] != 0) activities_.push_back(ActivityId{a});
  for (std::size_t i = 1; i < act_offsets_.size(); ++i) act_offsets_[i] += act_offsets_[i - 1];
  act_positions_.assign(act_offsets_.back(), 0);
  {
    std::vector<std::uint32_t> cursor(act_offsets_.begin(), act_offsets_.end() - 1);
    for (std::uint32_t p = 0; p < events_.size(); ++p) act_positions_[cursor[events_[p].activity.value]++] = p;
  }

  // type -> objects
  type_offsets_.assign(object_types_.size() + 1, 0);
  for (const ObjectRecord& o : objects_)
    if (o.type.value < type_slot_.size() && type_slot_[o.type.value] != npos) ++type_offsets_[type_slot_[o.type.value] + 1];
  for (std::size_t i = 1; i < type_offsets_.size(); ++i) type_offsets_[i] += type_offsets_[i - 1];
  type_objects_.assign(type_offsets_.back(), ObjectId{});
  {
    std::vector<std::uint32_t> cursor(type_offsets_.begin(), type_offsets_.end() - 1);
    for (const ObjectRecord& o : objects_)
      if (o.type.value < type_slot_.size() && type_slot_[o.type.value] != npos)
        type_objects_[cursor[type_slot_[o.type.value]]++] = o.id;
  }
}

const ObjectRecord* OcelLog::find_object(ObjectId id) const {
  if (id.value >= object_slot_.size() || object_slot_[id.value] == npos) return nullptr;
  return &objects_[object_slot_[id.value]];
}

bool OcelLog::has_object_type(ObjectTypeId t) const { return t.value < type_slot_.size() && type_slot_[t.value] != npos; }

std::uint32_t OcelLog::position_of(EventId id) const {
  return id.value < event_pos_.size() ? event_pos_[id.value] : npos;
}

std::span<const std::uint32_t> OcelLog::positions_of_object(ObjectId id) const {
  if (id.value >= object_slot_.size() || object_slot_[id.value] == npos) return {};
  const auto slot = object_slot_[id.value];
  return std::span(obj_positions_).subspan(obj_offsets_[slot], obj_offsets_[slot + 1] - obj_offsets_[slot]);
}

std::span<const std::uint32_t> OcelLog::positions_of_activity(ActivityId a) const {
  if (a.value + 1 >= act_offsets_.size()) return {};
  return std::span(act_positions_).subspan(act_offsets_[a.value], act_offsets_[a.value + 1] - act_offsets_[a.value]);
}

std::span<const ObjectId> OcelLog::objects_of_type(ObjectTypeId t) const {
  if (!has_object_type(t)) return {};
  const auto slot = type_slot_[t.value];
  return std::span(type_objects_).subspan(type_offsets_[slot], type_offsets_[slot + 1] - type_offsets_[slot]);
}

std::optional<EventId> OcelLog::lookup_event(std::string_view s) const { return lookup<EventId>(dict_->events, s); }
std::optional<ActivityId> OcelLog::lookup_activity(std::string_view s) const {
  return lookup<ActivityId>(dict_->activities, s);
}
std::optional<ObjectId> OcelLog::lookup_object(std::string_view s) const { return lookup<ObjectId>(dict_->objects, s); }
std::optional<ObjectTypeId> OcelLog::lookup_object_type(std::string_view s) const {
  return lookup<ObjectTypeId>(dict_->object_types, s);
}
std::optional<AttributeId> OcelLog::lookup_attribute(std::string_view s) const {
  return lookup<AttributeId>(dict_->attributes, s);
}

// ---------------------------------------------------------------------------

namespace {

using NamedAttributes = std::vector<std::pair<std::string, AttributeValue>>;

NamedAttributes named(const Dictionary& d, const AttributeMap& m) {
  NamedAttributes out;
  out.reserve(m.size());
  for (const auto& [k, v] : m) out.emplace_back(d.name(k), v);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::string> named(const Dictionary& d, const std::vector<ObjectId>& omap) {
  std::vector<std::string> out;
  out.reserve(omap.size());
  for (ObjectId o : omap) out.push_back(d.name(o));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool equivalent(const OcelLog& a, const OcelLog& b, std::string* first_difference) {
  const auto fail = [&](std::string msg) {
    if (first_difference) *first_difference = std::move(msg);
    return false;
  };
  const Dictionary& da = a.dict();
  const Dictionary& db = b.dict();

  if (a.event_count() != b.event_count())
    return fail("event count " + std::to_string(a.event_count()) + " vs " + std::to_string(b.event_count()));
  for (std::size_t i = 0; i < a.event_count(); ++i) {
    const Event& x = a.events()[i];
    const Event& y = b.events()[i];
    const std::string& id = da.name(x.id);
    if (id != db.name(y.id)) return fail("event at position " + std::to_string(i) + ": " + id + " vs " + db.name(y.id));
    if (da.name(x.activity) != db.name(y.activity)) return fail("activity of " + id);
    if (x.time != y.time) return fail("timestamp of " + id);
    if (named(da, x.omap) != named(db, y.omap)) return fail("omap of " + id);
    if (named(da, x.vmap) != named(db, y.vmap)) return fail("vmap of " + id);
  }

  if (a.object_count() != b.object_count())
    return fail("object count " + std::to_string(a.object_count()) + " vs " + std::to_string(b.object_count()));
  std::vector<std::pair<std::string, const ObjectRecord*>> oa, ob;
  for (const auto& o : a.objects()) oa.emplace_back(da.name(o.id), &o);
  for (const auto& o : b.objects()) ob.emplace_back(db.name(o.id), &o);
  const auto by_name = [](const auto& l, const auto& r) { return l.first < r.first; };
  std::sort(oa.begin(), oa.end(), by_name);
  std::sort(ob.begin(), ob.end(), by_name);
  for (std::size_t i = 0; i < oa.size(); ++i) {
    if (oa[i].first != ob[i].first) return fail("object " + oa[i].first + " vs " + ob[i].first);
    if (da.name(oa[i].second->type) != db.name(ob[i].second->type)) return fail("type of object " + oa[i].first);
    if (named(da, oa[i].second->ovmap) != named(db, ob[i].second->ovmap)) return fail("ovmap of object " + oa[i].first);
  }

  std::vector<std::string> ta, tb;
  for (auto t : a.object_types()) ta.push_back(da.name(t));
  for (auto t : b.object_types()) tb.push_back(db.name(t));
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  if (ta != tb) return fail("object types differ");

  return true;
}

// ---------------------------------------------------------------------------

LogBuilder::LogBuilder() : dict_(std::make_shared<Dictionary>()) {}

ObjectTypeId LogBuilder::add_object_type(std::string_view type) {
  const ObjectTypeId t = dict_->object_type(type);
  if (type_seen_.size() <= t.value) type_seen_.resize(t.value + 1, false);
  if (!type_seen_[t.value]) {
    type_seen_[t.value] = true;
    types_.push_back(t);
  }
  return t;
}

ObjectId LogBuilder::add_object(std::string_view id, std::string_view type, AttributeMap ovmap) {
  const ObjectTypeId t = add_object_type(type);
  const ObjectId o = dict_->object(id);
  std::sort(ovmap.begin(), ovmap.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  objects_.push_back({o, t, std::move(ovmap)});
  return o;
}

EventId LogBuilder::add_event(std::string_view id, std::string_view activity, Timestamp time,
                              const std::vector<std::string_view>& objects, AttributeMap vmap) {
  Event e;
  e.id = dict_->event(id);
  e.activity = dict_->activity(activity);
  e.time = time;
  e.omap.reserve(objects.size());
  for (auto o : objects) e.omap.push_back(dict_->object(o));
  std::sort(e.omap.begin(), e.omap.end());
  e.omap.erase(std::unique(e.omap.begin(), e.omap.end()), e.omap.end());
  std::sort(vmap.begin(), vmap.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  e.vmap = std::move(vmap);
  events_.push_back(std::move(e));
  return events_.back().id;
}

AttributeId LogBuilder::attribute(std::string_view name, AttributeType type) {
  const AttributeId id = dict_->attribute(name);
  if (!schema_.declare(id, type))
    throw InvalidArgument("attribute '" + std::string(name) + "' already declared with another type");
  return id;
}

OcelLog LogBuilder::build() && {
  std::sort(objects_.begin(), objects_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return OcelLog(std::move(dict_), std::move(events_), std::move(objects_), std::move(types_), std::move(schema_));
}

}  // namespace ocelkit
