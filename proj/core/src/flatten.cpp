#include <algorithm>
#include <set>

#include "io_common.hpp"
#include "json.hpp"
#include "ocelkit/io.hpp"

namespace ocelkit {

std::size_t FlatLog::event_count() const {
  std::size_t n = 0;
  for (const auto& [id, events] : cases) n += events.size();
  return n;
}

FlatLog flatten(const OcelLog& log, ObjectTypeId type) {
  if (!log.has_object_type(type)) throw InvalidArgument("flatten: type is not part of the log");
  const Dictionary& d = log.dict();
  FlatLog flat;
  flat.case_type = d.name(type);
  for (ObjectId o : log.objects_of_type(type)) {
    auto& trace = flat.cases[d.name(o)];
    const auto positions = log.positions_of_object(o);
    trace.reserve(positions.size());
    for (std::uint32_t p : positions) {
      const Event& e = log.events()[p];
      FlatEvent fe{d.name(e.id), d.name(e.activity), e.time, {}};
      for (const auto& [name, value] : detail::sorted_attributes(d, e.vmap)) fe.vmap.emplace_back(name, *value);
      trace.push_back(std::move(fe));
    }
  }
  return flat;
}

FlatLog flatten(const OcelLog& log, std::string_view type) {
  const auto t = log.lookup_object_type(type);
  if (!t || !log.has_object_type(*t)) throw InvalidArgument("flatten: unknown object type '" + std::string(type) + "'");
  return flatten(log, *t);
}

namespace {

void csv_field(std::string& out, std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    out += s;
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

std::string write_flat_csv(const FlatLog& flat) {
  std::set<std::string, std::less<>> columns;
  for (const auto& [id, trace] : flat.cases)
    for (const auto& e : trace)
      for (const auto& [name, value] : e.vmap) columns.insert(name);

  std::string out = "case_id,event_id,activity,timestamp";
  for (const auto& c : columns) {
    out += ',';
    csv_field(out, c);
  }
  out += "\r\n";
  for (const auto& [id, trace] : flat.cases) {
    for (const auto& e : trace) {
      csv_field(out, id);
      out += ',';
      csv_field(out, e.event_id);
      out += ',';
      csv_field(out, e.activity);
      out += ',';
      out += format_timestamp(e.time);
      auto it = e.vmap.begin();
      for (const auto& c : columns) {
        out += ',';
        if (it != e.vmap.end() && it->first == c) {
          csv_field(out, format_value(it->second));
          ++it;
        }
      }
      out += "\r\n";
    }
  }
  return out;
}

std::string write_flat_json(const FlatLog& flat) {
  using json = nlohmann::ordered_json;
  json cases = json::object();
  for (const auto& [id, trace] : flat.cases) {
    json events = json::array();
    for (const auto& e : trace) {
      json vmap = json::object();
      for (const auto& [name, value] : e.vmap) {
        std::visit(
            [&](const auto& x) {
              if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Timestamp>) vmap[name] = format_timestamp(x);
              else vmap[name] = x;
            },
            value);
      }
      events.push_back({{"ocel:eid", e.event_id},
                        {"ocel:activity", e.activity},
                        {"ocel:timestamp", format_timestamp(e.time)},
                        {"ocel:vmap", std::move(vmap)}});
    }
    cases[id] = std::move(events);
  }
  json doc = {{"case_type", flat.case_type}, {"cases", std::move(cases)}};
  return doc.dump(2) + "\n";
}

}  // namespace ocelkit
