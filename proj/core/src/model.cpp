#include "ocelkit/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "ocelkit/errors.hpp"

namespace ocelkit {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DanglingObjectReference: return "dangling object reference";
    case ViolationKind::UnknownObjectType: return "unknown object type";
    case ViolationKind::DuplicateEventId: return "duplicate event id";
    case ViolationKind::EventOrder: return "event order";
    case ViolationKind::UnsortedObjectMap: return "unsorted object map";
    case ViolationKind::AttributeTypeMismatch: return "attribute type mismatch";
    case ViolationKind::UndeclaredAttribute: return "undeclared attribute";
    case ViolationKind::IndexMismatch: return "index mismatch";
  }
  return "unknown";
}

namespace {

void check_attributes(const OcelLog& log, const AttributeMap& attrs, const std::string& subject,
                      std::vector<Violation>& out) {
  const Dictionary& d = log.dict();
  for (const auto& [name, value] : attrs) {
    const auto declared = log.schema().type_of(name);
    if (!declared) {
      out.push_back({ViolationKind::UndeclaredAttribute, subject, "attribute '" + d.name(name) + "' not in schema"});
    } else if (*declared != type_of(value)) {
      out.push_back({ViolationKind::AttributeTypeMismatch, subject,
                     "attribute '" + d.name(name) + "' is " + std::string(to_string(type_of(value))) +
                         ", schema says " + std::string(to_string(*declared))});
    }
  }
}

}  // namespace

ValidationReport validate(const OcelLog& log) {
  ValidationReport report;
  auto& out = report.violations;
  const Dictionary& d = log.dict();
  const auto events = log.events();

  std::unordered_set<EventId> seen;
  seen.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    const std::string& id = d.name(e.id);
    if (!seen.insert(e.id).second) out.push_back({ViolationKind::DuplicateEventId, id, "event id occurs twice"});
    if (i > 0 && !event_before(d, events[i - 1], e))
      out.push_back({ViolationKind::EventOrder, id, "event not after its predecessor"});
    if (!std::is_sorted(e.omap.begin(), e.omap.end()) ||
        std::adjacent_find(e.omap.begin(), e.omap.end()) != e.omap.end())
      out.push_back({ViolationKind::UnsortedObjectMap, id, "omap not sorted or has duplicates"});
    for (ObjectId o : e.omap)
      if (!log.has_object(o))
        out.push_back({ViolationKind::DanglingObjectReference, id, "dangling object reference '" + d.name(o) + "'"});
    check_attributes(log, e.vmap, id, out);
  }

  for (const ObjectRecord& o : log.objects()) {
    const std::string& id = d.name(o.id);
    if (!log.has_object_type(o.type))
      out.push_back({ViolationKind::UnknownObjectType, id, "object type '" + d.name(o.type) + "' not in log"});
    check_attributes(log, o.ovmap, id, out);
  }

  // Recompute the inverted indices from scratch and compare.
  std::vector<std::vector<std::uint32_t>> incidence(d.objects.size());
  for (std::uint32_t p = 0; p < events.size(); ++p)
    for (ObjectId o : events[p].omap)
      if (incidence[o.value].empty() || incidence[o.value].back() != p) incidence[o.value].push_back(p);
  for (const ObjectRecord& o : log.objects()) {
    const auto& expected = incidence[o.id.value];
    const auto got = log.positions_of_object(o.id);
    if (!std::equal(expected.begin(), expected.end(), got.begin(), got.end()))
      out.push_back({ViolationKind::IndexMismatch, d.name(o.id), "object index disagrees with omaps"});
  }
  std::vector<std::size_t> per_activity(d.activities.size(), 0);
  for (const Event& e : events) ++per_activity[e.activity.value];
  for (ActivityId a : log.activities()) {
    const auto got = log.positions_of_activity(a);
    const bool ok = got.size() == per_activity[a.value] &&
                    std::all_of(got.begin(), got.end(), [&](auto p) { return events[p].activity == a; });
    if (!ok) out.push_back({ViolationKind::IndexMismatch, d.name(a), "activity index disagrees with events"});
  }
  std::vector<std::size_t> per_type(d.object_types.size(), 0);
  for (const ObjectRecord& o : log.objects()) ++per_type[o.type.value];
  for (ObjectTypeId t : log.object_types()) {
    const auto got = log.objects_of_type(t);
    const bool ok = got.size() == per_type[t.value] &&
                    std::all_of(got.begin(), got.end(), [&](ObjectId o) { return log.find_object(o)->type == t; });
    if (!ok) out.push_back({ViolationKind::IndexMismatch, d.name(t), "type index disagrees with objects"});
  }
  return report;
}

// ---------------------------------------------------------------------------

RelationSet::RelationSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

void RelationSet::insert(ObjectTypeId t, ActivityId a) {
  const Pair p{t, a};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

bool RelationSet::contains(ObjectTypeId t, ActivityId a) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{t, a});
}

std::vector<RelationSet::Pair> RelationSet::vacuous_pairs(const OcelLog& log) const {
  std::vector<Pair> out;
  for (const auto& p : pairs_)
    if (!log.has_object_type(p.first) || log.positions_of_activity(p.second).empty()) out.push_back(p);
  return out;
}

RelationSet co_occurring_relations(const OcelLog& log) {
  std::vector<RelationSet::Pair> pairs;
  for (const Event& e : log.events())
    for (ObjectId o : e.omap)
      if (const ObjectRecord* rec = log.find_object(o)) pairs.emplace_back(rec->type, e.activity);
  return RelationSet(std::move(pairs));
}

// ---------------------------------------------------------------------------

namespace {

// Dense membership mask over a dictionary-sized token space.
template <class Id>
std::vector<bool> mask_of(std::span<const Id> ids, std::size_t universe) {
  std::vector<bool> mask(universe, false);
  for (Id id : ids) mask[id.value] = true;
  return mask;
}

std::vector<Event> filter_omaps(std::span<const Event> events, const std::vector<bool>& keep_object) {
  std::vector<Event> out(events.begin(), events.end());
  for (Event& e : out)
    std::erase_if(e.omap, [&](ObjectId o) { return o.value >= keep_object.size() || !keep_object[o.value]; });
  return out;
}

std::vector<ObjectTypeId> copy_types(const OcelLog& log) {
  return {log.object_types().begin(), log.object_types().end()};
}

}  // namespace

OcelLog project_object_types(const OcelLog& log, std::span<const ObjectTypeId> kept) {
  for (ObjectTypeId t : kept)
    if (!log.has_object_type(t))
      throw InvalidArgument("unknown object type '" +
                            (t.value < log.dict().object_types.size() ? log.name(t) : std::to_string(t.value)) + "'");
  const auto keep_type = mask_of(kept, log.dict().object_types.size());

  std::vector<ObjectRecord> objects;
  std::vector<bool> keep_object(log.dict().objects.size(), false);
  for (const ObjectRecord& o : log.objects()) {
    if (keep_type[o.type.value]) {
      objects.push_back(o);
      keep_object[o.id.value] = true;
    }
  }
  std::vector<ObjectTypeId> types(kept.begin(), kept.end());
  return OcelLog(log.shared_dict(), filter_omaps(log.events(), keep_object), std::move(objects), std::move(types),
                 log.schema());
}

OcelLog project_events(const OcelLog& log, std::span<const EventId> kept) {
  std::vector<std::uint32_t> positions;
  positions.reserve(kept.size());
  for (EventId e : kept) {
    const auto p = log.position_of(e);
    if (p == OcelLog::npos)
      throw InvalidArgument("unknown event '" +
                            (e.value < log.dict().events.size() ? log.name(e) : std::to_string(e.value)) + "'");
    positions.push_back(p);
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  std::vector<Event> events;
  events.reserve(positions.size());
  for (auto p : positions) events.push_back(log.events()[p]);
  return OcelLog(log.shared_dict(), std::move(events), {log.objects().begin(), log.objects().end()}, copy_types(log),
                 log.schema());
}

OcelLog project_objects(const OcelLog& log, std::span<const ObjectId> kept) {
  for (ObjectId o : kept)
    if (!log.has_object(o))
      throw InvalidArgument("unknown object '" +
                            (o.value < log.dict().objects.size() ? log.name(o) : std::to_string(o.value)) + "'");
  const auto keep_object = mask_of(kept, log.dict().objects.size());
  std::vector<ObjectRecord> objects;
  for (const ObjectRecord& o : log.objects())
    if (keep_object[o.id.value]) objects.push_back(o);
  return OcelLog(log.shared_dict(), filter_omaps(log.events(), keep_object), std::move(objects), copy_types(log),
                 log.schema());
}

OcelLog restrict_relations(const OcelLog& log, const RelationSet& allowed) {
  const std::size_t n_types = log.dict().object_types.size();
  const std::size_t n_acts = log.dict().activities.size();
  std::vector<bool> allow(n_types * n_acts, false);
  for (const auto& [t, a] : allowed.pairs())
    if (t.value < n_types && a.value < n_acts) allow[t.value * n_acts + a.value] = true;

  std::vector<Event> events(log.events().begin(), log.events().end());
  for (Event& e : events) {
    std::erase_if(e.omap, [&](ObjectId o) {
      const ObjectRecord* rec = log.find_object(o);
      return rec == nullptr || !allow[rec->type.value * n_acts + e.activity.value];
    });
  }
  return OcelLog(log.shared_dict(), std::move(events), {log.objects().begin(), log.objects().end()}, copy_types(log),
                 log.schema());
}

// ---------------------------------------------------------------------------

std::vector<ObjectTypeId> resolve_object_types(const OcelLog& log, std::span<const std::string> names) {
  std::vector<ObjectTypeId> out;
  for (const auto& n : names) {
    auto t = log.lookup_object_type(n);
    if (!t || !log.has_object_type(*t)) throw InvalidArgument("unknown object type '" + n + "'");
    out.push_back(*t);
  }
  return out;
}

std::vector<EventId> resolve_events(const OcelLog& log, std::span<const std::string> names) {
  std::vector<EventId> out;
  for (const auto& n : names) {
    auto e = log.lookup_event(n);
    if (!e || log.position_of(*e) == OcelLog::npos) throw InvalidArgument("unknown event '" + n + "'");
    out.push_back(*e);
  }
  return out;
}

std::vector<ObjectId> resolve_objects(const OcelLog& log, std::span<const std::string> names) {
  std::vector<ObjectId> out;
  for (const auto& n : names) {
    auto o = log.lookup_object(n);
    if (!o || !log.has_object(*o)) throw InvalidArgument("unknown object '" + n + "'");
    out.push_back(*o);
  }
  return out;
}

RelationSet resolve_relations(const OcelLog& log, std::span<const std::pair<std::string, std::string>> pairs) {
  RelationSet out;
  for (const auto& [type, activity] : pairs) {
    auto t = log.lookup_object_type(type);
    if (!t || !log.has_object_type(*t)) throw InvalidArgument("unknown object type '" + type + "'");
    auto a = log.lookup_activity(activity);
    if (!a || log.positions_of_activity(*a).empty()) throw InvalidArgument("unknown activity '" + activity + "'");
    out.insert(*t, *a);
  }
  return out;
}

}  // namespace ocelkit
