#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "io_common.hpp"
#include "ocelkit/io.hpp"

namespace ocelkit {

namespace {

using boost::property_tree::ptree;

std::string attr(const ptree& node, const char* name) {
  if (auto a = node.get_child_optional("<xmlattr>")) return a->get<std::string>(name, "");
  return {};
}

bool has_attr(const ptree& node, const char* name) {
  auto a = node.get_child_optional("<xmlattr>");
  return a && a->get_child_optional(name);
}

AttributeValue typed_value(const std::string& tag, const std::string& text, const std::string& where,
                           const std::string& key) {
  const auto bad = [&]() -> ParseError {
    return ParseError(where, "attribute '" + key + "': cannot read \"" + text + "\" as " + tag);
  };
  if (tag == "string") return text;
  if (tag == "int") {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size()) throw bad();
    return v;
  }
  if (tag == "float") {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw bad();
      return v;
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  if (tag == "boolean") {
    if (text == "true") return true;
    if (text == "false") return false;
    throw bad();
  }
  if (tag == "date") {
    if (auto t = parse_timestamp(text)) return *t;
    throw bad();
  }
  throw ParseError(where, "attribute '" + key + "': unsupported element <" + tag + ">");
}

AttributeMap read_attribute_list(detail::LogAssembler& out, const ptree& list, const std::string& where) {
  AttributeMap m;
  for (const auto& [tag, child] : list) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
    const std::string key = attr(child, "key");
    if (key.empty()) throw ParseError(where, "attribute element <" + tag + "> without key");
    if (!has_attr(child, "value")) throw ParseError(where, "attribute '" + key + "' without value");
    m.push_back(out.attribute(key, typed_value(tag, attr(child, "value"), where, key), where));
  }
  return m;
}

const char* xml_tag(AttributeType t) {
  switch (t) {
    case AttributeType::String: return "string";
    case AttributeType::Integer: return "int";
    case AttributeType::Float: return "float";
    case AttributeType::Boolean: return "boolean";
    case AttributeType::Timestamp: return "date";
  }
  return "string";
}

void escape_into(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
}

void element(std::string& out, int indent, const char* tag, std::string_view key, std::string_view value) {
  out.append(static_cast<std::size_t>(indent), ' ');
  out += '<';
  out += tag;
  out += " key=\"";
  escape_into(out, key);
  out += "\" value=\"";
  escape_into(out, value);
  out += "\"/>\n";
}

void write_attribute_list(std::string& out, int indent, const char* key, const Dictionary& d, const AttributeMap& m) {
  out.append(static_cast<std::size_t>(indent), ' ');
  out += "<list key=\"";
  out += key;
  out += "\">\n";
  for (const auto& [name, value] : detail::sorted_attributes(d, m))
    element(out, indent + 2, xml_tag(type_of(*value)), name, format_value(*value));
  out.append(static_cast<std::size_t>(indent), ' ');
  out += "</list>\n";
}

}  // namespace

OcelLog parse_xml_ocel(std::string_view text, Warnings* warnings) {
  ptree doc;
  try {
    std::istringstream in{std::string(text)};
    boost::property_tree::read_xml(in, doc);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw ParseError("line " + std::to_string(e.line()), "malformed XML: " + e.message());
  }
  const auto root = doc.get_child_optional("log");
  if (!root) throw ParseError("document", "missing root element <log>");

  detail::LogAssembler out(warnings);

  bool saw_global_log = false;
  for (const auto& [tag, node] : *root) {
    if (tag != "global" || attr(node, "scope") != "log") continue;
    saw_global_log = true;
    for (const auto& [ctag, child] : node) {
      if (ctag != "list") continue;
      const std::string key = attr(child, "key");
      for (const auto& [etag, entry] : child) {
        if (etag == "<xmlattr>") continue;
        if (key == "object-types") out.declare_type(attr(entry, "value"));
        if (key == "attribute-names") out.declare_attribute_name(attr(entry, "value"));
      }
    }
  }
  if (!saw_global_log) throw ParseError("document", "missing mandatory element <global scope=\"log\">");

  const auto objects = root->get_child_optional("objects");
  const auto events = root->get_child_optional("events");
  if (!objects) throw ParseError("document", "missing mandatory element <objects>");
  if (!events) throw ParseError("document", "missing mandatory element <events>");

  for (const auto& [tag, node] : *root)
    if (tag != "global" && tag != "objects" && tag != "events" && tag != "<xmlattr>" && tag != "<xmlcomment>")
      out.warn("document: ignoring unknown element <" + tag + ">");

  std::size_t index = 0;
  for (const auto& [tag, obj] : *objects) {
    if (tag != "object") continue;
    ++index;
    std::string id, type;
    AttributeMap ovmap;
    const std::string pending = "object #" + std::to_string(index);
    for (const auto& [ctag, child] : obj) {
      const std::string key = attr(child, "key");
      if (ctag == "string" && key == "id") id = attr(child, "value");
      else if (ctag == "string" && key == "type") type = attr(child, "value");
    }
    const std::string where = id.empty() ? pending : "object '" + id + "'";
    if (id.empty()) throw ParseError(where, "missing mandatory key \"id\"");
    if (type.empty()) throw ParseError(where, "missing mandatory key \"type\"");
    for (const auto& [ctag, child] : obj) {
      const std::string key = attr(child, "key");
      if (ctag == "list" && key == "ovmap") ovmap = read_attribute_list(out, child, where);
      else if (!(ctag == "string" && (key == "id" || key == "type")))
        out.warn(where + ": ignoring unknown element <" + ctag + " key=\"" + key + "\">");
    }
    out.add_object(id, type, std::move(ovmap), where);
  }

  index = 0;
  std::vector<std::string> omap;
  for (const auto& [tag, ev] : *events) {
    if (tag != "event") continue;
    ++index;
    std::string id, activity, ts_text;
    bool has_ts = false, has_omap = false;
    for (const auto& [ctag, child] : ev) {
      const std::string key = attr(child, "key");
      if (key == "id") id = attr(child, "value");
    }
    const std::string where = id.empty() ? "event #" + std::to_string(index) : "event '" + id + "'";
    if (id.empty()) throw ParseError(where, "missing mandatory key \"id\"");
    AttributeMap vmap;
    omap.clear();
    for (const auto& [ctag, child] : ev) {
      const std::string key = attr(child, "key");
      if (key == "id") continue;
      if (key == "activity") {
        activity = attr(child, "value");
      } else if (key == "timestamp") {
        has_ts = true;
        ts_text = attr(child, "value");
      } else if (ctag == "list" && key == "omap") {
        has_omap = true;
        for (const auto& [otag, o] : child)
          if (otag != "<xmlattr>") omap.push_back(attr(o, "value"));
      } else if (ctag == "list" && key == "vmap") {
        vmap = read_attribute_list(out, child, where);
      } else {
        out.warn(where + ": ignoring unknown element <" + ctag + " key=\"" + key + "\">");
      }
    }
    if (activity.empty()) throw ParseError(where, "missing mandatory key \"activity\"");
    if (!has_ts) throw ParseError(where, "missing mandatory key \"timestamp\"");
    if (!has_omap) throw ParseError(where, "missing mandatory key \"omap\"");
    const auto ts = parse_timestamp(ts_text);
    if (!ts) throw ParseError(where, "unparseable timestamp \"" + ts_text + "\"");
    out.add_event(id, activity, *ts, omap, std::move(vmap), where);
  }
  return out.finish();
}

std::string write_xml_ocel(const OcelLog& log) {
  const Dictionary& d = log.dict();
  std::string out;
  out.reserve(512 + log.event_count() * 400 + log.object_count() * 160);
  out += "<?xml version='1.0' encoding='UTF-8'?>\n<log ocel.version=\"1.0\" ocel.ordering=\"timestamp\">\n";
  out += "  <global scope=\"event\">\n    <string key=\"activity\" value=\"__INVALID__\"/>\n  </global>\n";
  out += "  <global scope=\"object\">\n    <string key=\"type\" value=\"__INVALID__\"/>\n  </global>\n";
  out += "  <global scope=\"log\">\n    <list key=\"attribute-names\">\n";
  std::vector<std::string> names;
  for (const auto& [id, type] : log.schema().entries()) names.push_back(d.name(id));
  std::sort(names.begin(), names.end());
  for (const auto& n : names) element(out, 6, "string", "attribute-name", n);
  out += "    </list>\n    <list key=\"object-types\">\n";
  names.clear();
  for (auto t : log.object_types()) names.push_back(d.name(t));
  std::sort(names.begin(), names.end());
  for (const auto& n : names) element(out, 6, "string", "object-type", n);
  out += "    </list>\n    <string key=\"version\" value=\"1.0\"/>\n    <string key=\"ordering\" value=\"timestamp\"/>\n";
  out += "  </global>\n  <events>\n";
  for (const Event& e : log.events()) {
    out += "    <event>\n";
    element(out, 6, "string", "id", d.name(e.id));
    element(out, 6, "string", "activity", d.name(e.activity));
    element(out, 6, "date", "timestamp", format_timestamp(e.time));
    out += "      <list key=\"omap\">\n";
    for (const auto& o : detail::sorted_names(d, e.omap)) element(out, 8, "string", "object-id", o);
    out += "      </list>\n";
    write_attribute_list(out, 6, "vmap", d, e.vmap);
    out += "    </event>\n";
  }
  out += "  </events>\n  <objects>\n";
  std::vector<const ObjectRecord*> objects;
  for (const auto& o : log.objects()) objects.push_back(&o);
  std::sort(objects.begin(), objects.end(), [&](auto* a, auto* b) { return d.name(a->id) < d.name(b->id); });
  for (const ObjectRecord* o : objects) {
    out += "    <object>\n";
    element(out, 6, "string", "id", d.name(o->id));
    element(out, 6, "string", "type", d.name(o->type));
    write_attribute_list(out, 6, "ovmap", d, o->ovmap);
    out += "    </object>\n";
  }
  out += "  </objects>\n</log>\n";
  return out;
}

}  // namespace ocelkit
