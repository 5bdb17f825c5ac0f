#include "ocelkit/filters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ocelkit/errors.hpp"
#include "ocelkit/lifecycle.hpp"

namespace ocelkit {

namespace {

void require_ratio(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidArgument("ratio out of range [0, 1]: " + std::to_string(r));
}

std::vector<EventId> ids_at(const OcelLog& log, const std::vector<bool>& keep) {
  std::vector<EventId> out;
  for (std::uint32_t p = 0; p < keep.size(); ++p)
    if (keep[p]) out.push_back(log.events()[p].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> frequent_mask(const OcelLog& log, std::uint64_t n) {
  std::vector<bool> keep(log.event_count(), false);
  for (ActivityId a : log.activities()) {
    const auto positions = log.positions_of_activity(a);
    if (positions.size() >= n)
      for (auto p : positions) keep[p] = true;
  }
  return keep;
}

std::vector<bool> essential_mask(const OcelLog& log) {
  std::vector<bool> keep(log.event_count(), false);
  for (const auto& tag : essential_events(log)) keep[tag.position] = true;
  return keep;
}

}  // namespace

std::vector<ObjectTypeId> select_types_min_objects(const OcelLog& log, std::uint64_t n) {
  std::vector<ObjectTypeId> out;
  for (ObjectTypeId t : log.object_types())
    if (log.objects_of_type(t).size() >= n) out.push_back(t);
  return out;
}

std::vector<ObjectTypeId> select_types_min_events(const OcelLog& log, std::uint64_t n) {
  // Count each event once per type, however many objects of the type it has.
  std::vector<std::uint64_t> count(log.dict().object_types.size(), 0);
  std::vector<std::uint32_t> last_seen(log.dict().object_types.size(), OcelLog::npos);
  const auto events = log.events();
  for (std::uint32_t p = 0; p < events.size(); ++p) {
    for (ObjectId o : events[p].omap) {
      const ObjectRecord* rec = log.find_object(o);
      if (rec == nullptr || last_seen[rec->type.value] == p) continue;
      last_seen[rec->type.value] = p;
      ++count[rec->type.value];
    }
  }
  std::vector<ObjectTypeId> out;
  for (ObjectTypeId t : log.object_types())
    if (count[t.value] >= n) out.push_back(t);
  return out;
}

Ratio unique_activity_ratio(const OcelLog& log, ObjectTypeId type) {
  std::uint64_t unique = 0;
  std::uint64_t total = 0;
  std::vector<ActivityId> acts;
  for (ObjectId o : log.objects_of_type(type)) {
    const auto lif = log.positions_of_object(o);
    acts.clear();
    for (auto p : lif) acts.push_back(log.events()[p].activity);
    std::sort(acts.begin(), acts.end());
    unique += static_cast<std::uint64_t>(std::unique(acts.begin(), acts.end()) - acts.begin());
    total += lif.size();
  }
  if (total == 0) return {1, 1};
  return {unique, total};
}

std::vector<ObjectTypeId> select_types_min_activity_ratio(const OcelLog& log, double r) {
  require_ratio(r);
  std::vector<ObjectTypeId> out;
  for (ObjectTypeId t : log.object_types())
    if (unique_activity_ratio(log, t).at_least(r)) out.push_back(t);
  return out;
}

std::vector<EventId> select_events_min_activity_count(const OcelLog& log, std::uint64_t n) {
  return ids_at(log, frequent_mask(log, n));
}

std::vector<EventId> select_events_essential(const OcelLog& log) { return ids_at(log, essential_mask(log)); }

std::vector<EventId> select_events_essential_or_frequent(const OcelLog& log, std::uint64_t n) {
  auto keep = frequent_mask(log, n);
  const auto essential = essential_mask(log);
  for (std::size_t p = 0; p < keep.size(); ++p) keep[p] = keep[p] || essential[p];
  return ids_at(log, keep);
}

std::vector<RelationStat> relation_stats(const OcelLog& log) {
  const auto types = log.object_types();
  const auto acts = log.activities();
  const std::size_t n_acts_dict = log.dict().activities.size();

  // Dense (type slot, activity token) table.
  std::vector<std::uint32_t> type_slot(log.dict().object_types.size(), OcelLog::npos);
  for (std::uint32_t i = 0; i < types.size(); ++i) type_slot[types[i].value] = i;
  std::vector<RelationStat> table(types.size() * n_acts_dict);
  for (std::uint32_t i = 0; i < types.size(); ++i)
    for (std::uint32_t a = 0; a < n_acts_dict; ++a) {
      table[i * n_acts_dict + a].type = types[i];
      table[i * n_acts_dict + a].activity = ActivityId{a};
    }

  // Per object: incidences per activity, plus one unique hit per distinct activity.
  std::vector<ActivityId> seen;
  for (const ObjectRecord& o : log.objects()) {
    const auto slot = o.type.value < type_slot.size() ? type_slot[o.type.value] : OcelLog::npos;
    if (slot == OcelLog::npos) continue;
    seen.clear();
    for (auto p : log.positions_of_object(o.id)) {
      const ActivityId a = log.events()[p].activity;
      ++table[slot * n_acts_dict + a.value].incidences;
      seen.push_back(a);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (ActivityId a : seen) ++table[slot * n_acts_dict + a.value].unique_objects;
  }

  std::vector<RelationStat> out;
  out.reserve(types.size() * acts.size());
  for (std::uint32_t i = 0; i < types.size(); ++i)
    for (ActivityId a : acts) out.push_back(table[i * n_acts_dict + a.value]);
  return out;
}

RelationSet select_relations_min_unique_ratio(const OcelLog& log, double r) {
  require_ratio(r);
  std::vector<RelationSet::Pair> pairs;
  for (const auto& s : relation_stats(log))
    if (s.ratio().at_least(r)) pairs.emplace_back(s.type, s.activity);
  return RelationSet(std::move(pairs));
}

OcelLog drop_empty_events(const OcelLog& log) {
  std::vector<EventId> kept;
  for (const Event& e : log.events())
    if (!e.omap.empty()) kept.push_back(e.id);
  return project_events(log, kept);
}

OcelLog drop_orphan_objects(const OcelLog& log) {
  std::vector<ObjectId> kept;
  for (const ObjectRecord& o : log.objects())
    if (!log.positions_of_object(o.id).empty()) kept.push_back(o.id);
  return project_objects(log, kept);
}

}  // namespace ocelkit
