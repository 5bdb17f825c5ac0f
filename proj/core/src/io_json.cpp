#include <algorithm>
#include <limits>
#include <string>

#include "io_common.hpp"
#include "json.hpp"
#include "ocelkit/io.hpp"

namespace ocelkit {

namespace {

using json = nlohmann::json;

constexpr const char* kGlobalLog = "ocel:global-log";
constexpr const char* kEvents = "ocel:events";
constexpr const char* kObjects = "ocel:objects";

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing mandatory key \"") + key + "\"");
  return *it;
}

const std::string& require_string(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) throw ParseError(where, std::string("\"") + key + "\" must be a string");
  return v.get_ref<const std::string&>();
}

void warn_unknown_keys(detail::LogAssembler& out, const json& j, std::initializer_list<std::string_view> known,
                       const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      out.warn(where + ": ignoring unknown key \"" + key + "\"");
  }
}

AttributeValue scalar(const json& v, const std::string& where, const std::string& name) {
  switch (v.type()) {
    case json::value_t::string: {
      const auto& s = v.get_ref<const std::string&>();
      if (looks_like_timestamp(s)) return *parse_timestamp(s);
      return s;
    }
    case json::value_t::boolean: return v.get<bool>();
    case json::value_t::number_integer: return v.get<std::int64_t>();
    case json::value_t::number_unsigned: {
      const auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ParseError(where, "attribute '" + name + "' exceeds the 64-bit integer range");
      return static_cast<std::int64_t>(u);
    }
    case json::value_t::number_float: return v.get<double>();
    default:
      throw ParseError(where, "attribute '" + name + "' must be a scalar (string, number, boolean), got " +
                                  std::string(v.type_name()));
  }
}

AttributeMap attributes(detail::LogAssembler& out, const json& j, const char* key, const std::string& where) {
  AttributeMap m;
  auto it = j.find(key);
  if (it == j.end()) return m;
  if (!it->is_object()) throw ParseError(where, std::string("\"") + key + "\" must be an object");
  for (const auto& [name, value] : it->items()) {
    // A name first seen as a plain string stays a string whatever it looks like.
    AttributeValue v = value.is_string() && out.declared_type(name) == AttributeType::String
                           ? AttributeValue(value.get<std::string>())
                           : scalar(value, where, name);
    m.push_back(out.attribute(name, std::move(v), where));
  }
  return m;
}

std::string json_string(std::string_view s) { return json(s).dump(); }

std::string encode_value(const AttributeValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Timestamp>) {
          return json_string(format_timestamp(x));
        } else {
          return json(x).dump();
        }
      },
      v);
}

void write_attributes(std::string& out, const Dictionary& d, const AttributeMap& m) {
  out += '{';
  bool first = true;
  for (const auto& [name, value] : detail::sorted_attributes(d, m)) {
    if (!first) out += ", ";
    first = false;
    out += json_string(name);
    out += ": ";
    out += encode_value(*value);
  }
  out += '}';
}

}  // namespace

OcelLog parse_json_ocel(std::string_view text, Warnings* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document", "top level must be an object");

  detail::LogAssembler out(warnings);
  warn_unknown_keys(out, doc, {kGlobalLog, kEvents, kObjects, "ocel:global-event", "ocel:global-object"}, "document");

  const json& global = require(doc, kGlobalLog, "document");
  if (!global.is_object()) throw ParseError(kGlobalLog, "must be an object");
  const json& types = require(global, "ocel:object-types", kGlobalLog);
  const json& attr_names = require(global, "ocel:attribute-names", kGlobalLog);
  require(global, "ocel:version", kGlobalLog);
  if (!types.is_array()) throw ParseError(kGlobalLog, "\"ocel:object-types\" must be an array");
  if (!attr_names.is_array()) throw ParseError(kGlobalLog, "\"ocel:attribute-names\" must be an array");
  for (const auto& t : types) {
    if (!t.is_string()) throw ParseError(kGlobalLog, "object types must be strings");
    out.declare_type(t.get_ref<const std::string&>());
  }
  for (const auto& a : attr_names) {
    if (!a.is_string()) throw ParseError(kGlobalLog, "attribute names must be strings");
    out.declare_attribute_name(a.get_ref<const std::string&>());
  }

  const json& objects = require(doc, kObjects, "document");
  if (!objects.is_object()) throw ParseError(kObjects, "must be an object keyed by object id");
  for (const auto& [id, obj] : objects.items()) {
    const std::string where = "object '" + id + "'";
    if (!obj.is_object()) throw ParseError(where, "must be an object");
    warn_unknown_keys(out, obj, {"ocel:type", "ocel:ovmap"}, where);
    const std::string& type = require_string(obj, "ocel:type", where);
    out.add_object(id, type, attributes(out, obj, "ocel:ovmap", where), where);
  }

  const json& events = require(doc, kEvents, "document");
  if (!events.is_object()) throw ParseError(kEvents, "must be an object keyed by event id");
  std::vector<std::string> omap;
  for (const auto& [id, ev] : events.items()) {
    const std::string where = "event '" + id + "'";
    if (!ev.is_object()) throw ParseError(where, "must be an object");
    warn_unknown_keys(out, ev, {"ocel:activity", "ocel:timestamp", "ocel:omap", "ocel:vmap"}, where);
    const std::string& activity = require_string(ev, "ocel:activity", where);
    const std::string& ts_text = require_string(ev, "ocel:timestamp", where);
    const auto ts = parse_timestamp(ts_text);
    if (!ts) throw ParseError(where, "unparseable timestamp \"" + ts_text + "\"");
    const json& om = require(ev, "ocel:omap", where);
    if (!om.is_array()) throw ParseError(where, "\"ocel:omap\" must be an array");
    omap.clear();
    for (const auto& o : om) {
      if (!o.is_string()) throw ParseError(where, "\"ocel:omap\" entries must be strings");
      omap.push_back(o.get<std::string>());
    }
    out.add_event(id, activity, *ts, omap, attributes(out, ev, "ocel:vmap", where), where);
  }
  return out.finish();
}

std::string write_json_ocel(const OcelLog& log) {
  const Dictionary& d = log.dict();
  std::string out;
  out.reserve(256 + log.event_count() * 160 + log.object_count() * 64);

  std::vector<std::string> attr_names;
  for (const auto& [id, type] : log.schema().entries()) attr_names.push_back(d.name(id));
  std::sort(attr_names.begin(), attr_names.end());
  std::vector<std::string> type_names;
  for (auto t : log.object_types()) type_names.push_back(d.name(t));
  std::sort(type_names.begin(), type_names.end());

  const auto list = [&](const std::vector<std::string>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      out += json_string(xs[i]);
    }
    out += ']';
  };

  out += "{\n  \"ocel:global-event\": {\"ocel:activity\": \"__INVALID__\"},\n";
  out += "  \"ocel:global-object\": {\"ocel:type\": \"__INVALID__\"},\n";
  out += "  \"ocel:global-log\": {\n    \"ocel:attribute-names\": ";
  list(attr_names);
  out += ",\n    \"ocel:object-types\": ";
  list(type_names);
  out += ",\n    \"ocel:version\": \"1.0\",\n    \"ocel:ordering\": \"timestamp\"\n  },\n";

  out += "  \"ocel:events\": {";
  bool first = true;
  for (const Event& e : log.events()) {
    out += first ? "\n    " : ",\n    ";
    first = false;
    out += json_string(d.name(e.id));
    out += ": {\"ocel:activity\": ";
    out += json_string(d.name(e.activity));
    out += ", \"ocel:timestamp\": ";
    out += json_string(format_timestamp(e.time));
    out += ", \"ocel:omap\": ";
    list(detail::sorted_names(d, e.omap));
    out += ", \"ocel:vmap\": ";
    write_attributes(out, d, e.vmap);
    out += '}';
  }
  out += first ? "},\n" : "\n  },\n";

  std::vector<const ObjectRecord*> objects;
  for (const auto& o : log.objects()) objects.push_back(&o);
  std::sort(objects.begin(), objects.end(), [&](auto* a, auto* b) { return d.name(a->id) < d.name(b->id); });
  out += "  \"ocel:objects\": {";
  first = true;
  for (const ObjectRecord* o : objects) {
    out += first ? "\n    " : ",\n    ";
    first = false;
    out += json_string(d.name(o->id));
    out += ": {\"ocel:type\": ";
    out += json_string(d.name(o->type));
    out += ", \"ocel:ovmap\": ";
    write_attributes(out, d, o->ovmap);
    out += '}';
  }
  out += first ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

}  // namespace ocelkit
