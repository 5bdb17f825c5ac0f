#include "fixtures.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ocelkit/attribute.hpp"

namespace ocelkit::testing {

std::filesystem::path data_dir() { return OCELKIT_TEST_DATA_DIR; }
std::filesystem::path table1_path() { return data_dir() / "table1.jsonocel"; }

Timestamp at(const char* text) {
  auto t = parse_timestamp(text);
  if (!t) throw std::runtime_error(std::string("bad fixture timestamp ") + text);
  return *t;
}

OcelLog table1_log() {
  struct Row {
    const char* id;
    const char* activity;
    const char* time;
    std::vector<std::string_view> objects;
  };
  const std::vector<Row> rows = {
      {"e1", "Create Order", "2007-04-01 07:29", {"o1", "i1", "i2", "Normal"}},
      {"e2", "Pick Item", "2007-04-01 15:36", {"o1", "i1", "Normal"}},
      {"e3", "Pack Item", "2007-04-01 22:01", {"i1", "d1", "Normal"}},
      {"e4", "Pick Item", "2007-04-01 22:15", {"o1", "i2", "Normal"}},
      {"e5", "Pack Item", "2007-04-01 23:19", {"i2", "d1", "Normal"}},
      {"e6", "Delivery Successful", "2007-04-02 10:01", {"d1", "Normal"}},
      {"e7", "Pay Order", "2007-04-02 11:15", {"o1", "Normal"}},
      {"e8", "Create Order", "2007-04-02 12:15", {"o2", "i4", "i5", "i6", "Normal"}},
      {"e9", "Pick Item", "2007-04-03 02:19", {"o2", "i4", "Normal"}},
      {"e10", "Pack Item", "2007-04-03 03:17", {"i4", "d2", "Normal"}},
      {"e11", "Pick Item", "2007-04-03 05:02", {"o2", "i5", "Normal"}},
      {"e12", "Record Goods Issue", "2007-04-03 05:07", {"i5", "Normal", "r1"}},
      {"e13", "Pick Item", "2007-04-03 05:15", {"o2", "i5", "Normal"}},
      {"e14", "Pack Item", "2007-04-03 05:21", {"i5", "d3", "Normal"}},
      {"e15", "Pick Item", "2007-04-03 05:36", {"o2", "i6", "Normal"}},
      {"e16", "Pack Item", "2007-04-03 05:37", {"i6", "d3", "Normal"}},
      {"e17", "Delivery Successful", "2007-04-03 16:01", {"d2", "Normal"}},
      {"e18", "Delivery Successful", "2007-04-03 17:59", {"d3", "Normal"}},
      {"e19", "Pay Order", "2007-04-06 08:00", {"o2", "Normal"}},
      {"e20", "Create Order", "2007-04-08 19:38", {"o3", "i7", "Normal"}},
      {"e21", "Pick Item", "2007-04-08 23:54", {"o3", "i7", "Normal"}},
      {"e22", "Pack Item", "2007-04-08 23:58", {"i7", "d4", "Normal"}},
      {"e23", "Delivery Successful", "2007-04-10 11:15", {"d4", "Normal"}},
      {"e24", "Pay Order", "2007-04-10 12:19", {"o3", "Normal"}},
  };
  LogBuilder b;
  for (const char* o : {"o1", "o2", "o3"}) b.add_object(o, "Orders");
  for (const char* o : {"i1", "i2", "i4", "i5", "i6", "i7"}) b.add_object(o, "Items");
  for (const char* o : {"d1", "d2", "d3", "d4"}) b.add_object(o, "Deliveries");
  b.add_object("Normal", "Weight Classes");
  b.add_object("r1", "Goods Issues");
  for (const auto& r : rows) b.add_event(r.id, r.activity, at(r.time), r.objects);
  return std::move(b).build();
}

std::set<std::string> table2_bold_events() {
  return {"e1", "e3", "e5", "e6", "e7", "e8", "e10", "e14", "e16", "e17", "e18", "e19", "e20", "e22", "e23", "e24"};
}

OcelLog random_log(std::uint64_t seed, const RandomShape& shape) {
  std::mt19937_64 rng(seed);
  const auto below = [&](std::uint64_t n) { return n == 0 ? 0 : std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); };

  LogBuilder b;
  const std::uint32_t n_types = 1 + static_cast<std::uint32_t>(below(shape.max_types));
  const std::uint32_t n_objects = static_cast<std::uint32_t>(below(shape.max_objects + 1));
  const std::uint32_t n_events = static_cast<std::uint32_t>(below(shape.max_events + 1));
  const std::uint32_t n_acts = 1 + static_cast<std::uint32_t>(below(shape.max_activities));

  // Attribute names with fixed types; string values include characters that
  // need escaping in both formats.
  static const std::vector<std::string> kStrings = {"plain", "with \"quotes\"", "a<b>&c", "tab\there",
                                                    "line\nbreak", "ünïcödé", "comma,separated", ""};
  std::vector<std::pair<AttributeId, AttributeType>> attrs;
  if (shape.attributes) {
    const char* attr_names[] = {"label", "count", "weight", "flag", "due"};
    const AttributeType attr_types[] = {AttributeType::String, AttributeType::Integer, AttributeType::Float,
                                        AttributeType::Boolean, AttributeType::Timestamp};
    for (int i = 0; i < 5; ++i) attrs.emplace_back(b.attribute(attr_names[i], attr_types[i]), attr_types[i]);
  }
  const auto random_attrs = [&]() {
    AttributeMap m;
    for (const auto& [id, type] : attrs) {
      if (below(2) == 0) continue;
      switch (type) {
        case AttributeType::String: m.emplace_back(id, kStrings[below(kStrings.size())]); break;
        case AttributeType::Integer: m.emplace_back(id, static_cast<std::int64_t>(below(2000)) - 1000); break;
        case AttributeType::Float: m.emplace_back(id, static_cast<double>(below(100000)) / 7.0 + 0.5); break;
        case AttributeType::Boolean: m.emplace_back(id, below(2) == 1); break;
        case AttributeType::Timestamp:
          m.emplace_back(id, at("2020-01-01T00:00:00") + std::chrono::milliseconds(below(1'000'000'000)));
          break;
      }
    }
    return m;
  };

  std::vector<std::string> objects;
  for (std::uint32_t i = 0; i < n_objects; ++i) {
    objects.push_back("ob" + std::to_string(i));
    b.add_object(objects.back(), "T" + std::to_string(below(n_types)), random_attrs());
  }
  const Timestamp base = at("2021-06-01T08:00:00");
  std::vector<std::string_view> omap;
  for (std::uint32_t i = 0; i < n_events; ++i) {
    omap.clear();
    if (!objects.empty()) {
      const std::uint64_t k = shape.sparse ? below(shape.max_omap + 1) : 1 + below(shape.max_omap);
      for (std::uint64_t j = 0; j < k; ++j) omap.push_back(objects[below(objects.size())]);
    }
    const auto minute = std::chrono::minutes(below(std::max<std::uint32_t>(shape.time_slots, 1)));
    b.add_event("ev" + std::to_string(i), "A" + std::to_string(below(n_acts)), base + minute, omap, random_attrs());
  }
  return std::move(b).build();
}

PlainLog to_plain(const OcelLog& log) {
  PlainLog p;
  for (const Event& e : log.events()) {
    PlainEvent pe{log.name(e.id), log.name(e.activity), e.time, {}};
    for (ObjectId o : e.omap) pe.omap.insert(log.name(o));
    p.events.push_back(std::move(pe));
  }
  std::sort(p.events.begin(), p.events.end(), [](const PlainEvent& a, const PlainEvent& b) {
    return a.time != b.time ? a.time < b.time : a.id < b.id;
  });
  for (const auto& o : log.objects()) p.objects[log.name(o.id)] = log.name(o.type);
  for (ObjectTypeId t : log.object_types()) p.types.insert(log.name(t));
  return p;
}

std::set<std::string> event_names(const OcelLog& log) {
  std::set<std::string> out;
  for (const Event& e : log.events()) out.insert(log.name(e.id));
  return out;
}

std::set<std::string> object_names(const OcelLog& log) {
  std::set<std::string> out;
  for (const auto& o : log.objects()) out.insert(log.name(o.id));
  return out;
}

std::set<std::string> type_names(const OcelLog& log) {
  std::set<std::string> out;
  for (ObjectTypeId t : log.object_types()) out.insert(log.name(t));
  return out;
}

std::set<std::string> names(const OcelLog& log, const std::vector<EventId>& ids) {
  std::set<std::string> out;
  for (EventId e : ids) out.insert(log.name(e));
  return out;
}

std::set<std::string> names(const OcelLog& log, const std::vector<ObjectTypeId>& ids) {
  std::set<std::string> out;
  for (ObjectTypeId t : ids) out.insert(log.name(t));
  return out;
}

}  // namespace ocelkit::testing
