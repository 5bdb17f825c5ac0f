#include "ocelkit/stats.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "json_codec.hpp"
#include "ocelkit/errors.hpp"

namespace ocelkit {

LogSummary summarize(const OcelLog& log) {
  LogSummary s;
  s.events = log.event_count();
  s.objects = log.object_count();
  s.object_types = log.object_types().size();
  s.activities = log.activities().size();
  s.incidences = log.incidence_count();

  std::vector<std::uint64_t> type_events(log.dict().object_types.size(), 0);
  std::vector<std::uint32_t> last_seen(log.dict().object_types.size(), OcelLog::npos);
  for (std::uint32_t p = 0; p < log.event_count(); ++p) {
    for (ObjectId o : log.events()[p].omap) {
      const ObjectRecord* rec = log.find_object(o);
      if (rec == nullptr || last_seen[rec->type.value] == p) continue;
      last_seen[rec->type.value] = p;
      ++type_events[rec->type.value];
    }
  }
  for (ObjectTypeId t : log.object_types())
    s.types.push_back({log.name(t), log.objects_of_type(t).size(), type_events[t.value], unique_activity_ratio(log, t)});
  std::sort(s.types.begin(), s.types.end(), [](const auto& a, const auto& b) { return a.type < b.type; });

  for (ActivityId a : log.activities()) s.activity_counts.push_back({log.name(a), log.positions_of_activity(a).size()});
  std::sort(s.activity_counts.begin(), s.activity_counts.end(),
            [](const auto& a, const auto& b) { return a.activity < b.activity; });
  return s;
}

const RelationCell* RelationMatrix::find(std::string_view type, std::string_view activity) const {
  for (const auto& c : cells)
    if (c.type == type && c.activity == activity) return &c;
  return nullptr;
}

RelationMatrix relation_matrix(const OcelLog& log) {
  RelationMatrix m;
  for (ObjectTypeId t : log.object_types()) m.types.push_back(log.name(t));
  for (ActivityId a : log.activities()) m.activities.push_back(log.name(a));
  std::sort(m.types.begin(), m.types.end());
  std::sort(m.activities.begin(), m.activities.end());
  for (const auto& st : relation_stats(log))
    m.cells.push_back({log.name(st.type), log.name(st.activity), st.incidences, st.unique_objects, st.ratio(),
                       st.incidences > 0});
  std::sort(m.cells.begin(), m.cells.end(), [](const auto& a, const auto& b) {
    return std::tie(a.type, a.activity) < std::tie(b.type, b.activity);
  });
  return m;
}

namespace {

Retention retention(std::uint64_t before, std::uint64_t after, const char* what) {
  if (before == 0 && after != 0)
    throw InconsistentSummary(std::string(what) + ": zero before but " + std::to_string(after) + " after");
  return {before, after};
}

}  // namespace

StepDiff diff(const LogSummary& before, const LogSummary& after, std::string step) {
  return {std::move(step), retention(before.events, after.events, "events"),
          retention(before.objects, after.objects, "objects"),
          retention(before.object_types, after.object_types, "object types"),
          retention(before.incidences, after.incidences, "incidences")};
}

std::string to_json(const LogSummary& s) { return detail::encode(s).dump(2); }
std::string to_json(const RelationMatrix& m) { return detail::encode(m).dump(2); }
std::string to_json(const StepDiff& d) { return detail::encode(d).dump(2); }
std::string to_json(const DiffReport& d) { return detail::encode(d).dump(2); }

std::string to_text(const LogSummary& s) {
  std::ostringstream os;
  os << s.events << " events, " << s.objects << " objects, " << s.object_types << " object types\n";
  for (const auto& t : s.types)
    os << "  type " << t.type << ": " << t.objects << " objects, " << t.events << " events, activity ratio "
       << t.activity_ratio.num << '/' << t.activity_ratio.den << '\n';
  for (const auto& a : s.activity_counts) os << "  activity " << a.activity << ": " << a.events << " events\n";
  return os.str();
}

std::string to_text(const StepDiff& d) {
  std::ostringstream os;
  const auto dim = [&](const char* name, const Retention& r) {
    os << "  " << name << ' ' << r.before << " -> " << r.after << " (" << r.percent() << "%)\n";
  };
  os << d.step << '\n';
  dim("events", d.events);
  dim("objects", d.objects);
  dim("object types", d.object_types);
  dim("incidences", d.incidences);
  return os.str();
}

namespace detail {

json encode(const Ratio& r) { return {{"num", r.num}, {"den", r.den}, {"value", r.value()}}; }

json encode(const LogSummary& s) {
  json types = json::array();
  for (const auto& t : s.types)
    types.push_back({{"type", t.type},
                     {"objects", t.objects},
                     {"events", t.events},
                     {"activity_ratio", encode(t.activity_ratio)}});
  json acts = json::array();
  for (const auto& a : s.activity_counts) acts.push_back({{"activity", a.activity}, {"events", a.events}});
  return {{"events", s.events},
          {"objects", s.objects},
          {"object_types", s.object_types},
          {"activities", s.activities},
          {"incidences", s.incidences},
          {"types", std::move(types)},
          {"activity_counts", std::move(acts)}};
}

json encode(const RelationMatrix& m) {
  json cells = json::array();
  for (const auto& c : m.cells)
    cells.push_back({{"type", c.type},
                     {"activity", c.activity},
                     {"incidences", c.incidences},
                     {"unique_objects", c.unique_objects},
                     {"ratio", encode(c.ratio)},
                     {"co_occurs", c.co_occurs}});
  return {{"types", m.types}, {"activities", m.activities}, {"cells", std::move(cells)}};
}

namespace {
json encode_retention(const Retention& r) {
  return {{"before", r.before},
          {"after", r.after},
          {"removed", r.removed()},
          {"retention", encode(r.ratio())},
          {"percent", r.percent()}};
}
}  // namespace

json encode(const StepDiff& d) {
  return {{"step", d.step},
          {"events", encode_retention(d.events)},
          {"objects", encode_retention(d.objects)},
          {"object_types", encode_retention(d.object_types)},
          {"incidences", encode_retention(d.incidences)}};
}

json encode(const DiffReport& d) {
  json steps = json::array();
  for (const auto& s : d.steps) steps.push_back(encode(s));
  return {{"steps", std::move(steps)}};
}

}  // namespace detail
}  // namespace ocelkit
