#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ocelkit/log.hpp"

namespace ocelkit {

/// Non-fatal remarks collected while reading (unknown keys, implicitly
/// declared types and attributes).
using Warnings = std::vector<std::string>;

/// Reads a JSON-OCEL document. Events come out in the log order; attribute
/// types are taken from the first occurrence of each name and enforced
/// afterwards (an integer literal is accepted where a float is expected).
/// Strings of the form YYYY-MM-DDTHH:MM:SS... are read as timestamps.
/// Throws ParseError naming the offending event, object or key.
OcelLog parse_json_ocel(std::string_view text, Warnings* warnings = nullptr);

/// Writes a JSON-OCEL document: events in log order, objects by identifier.
std::string write_json_ocel(const OcelLog& log);

/// Reads an XML-OCEL document. Same error contract as parse_json_ocel.
OcelLog parse_xml_ocel(std::string_view text, Warnings* warnings = nullptr);

std::string write_xml_ocel(const OcelLog& log);

enum class OcelFormat { Json, Xml };

/// `.xmlocel` / `.xml` select XML, anything else JSON.
OcelFormat format_for_path(const std::filesystem::path& path);

/// Reads a file in the format implied by its extension. Throws
/// std::system_error when the file cannot be opened.
OcelLog read_ocel_file(const std::filesystem::path& path, Warnings* warnings = nullptr);
void write_ocel_file(const OcelLog& log, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// ---------------------------------------------------------------------------
// Flattening

struct FlatEvent {
  std::string event_id;
  std::string activity;
  Timestamp time;
  std::vector<std::pair<std::string, AttributeValue>> vmap;  // sorted by name
};

/// Traditional case-based log obtained by picking one object type as case
/// notion. Events related to several objects of that type are copied into
/// each of their cases.
struct FlatLog {
  std::string case_type;
  std::map<std::string, std::vector<FlatEvent>> cases;

  std::size_t event_count() const;
};

/// Throws InvalidArgument when `type` is not an object type of the log.
FlatLog flatten(const OcelLog& log, ObjectTypeId type);
FlatLog flatten(const OcelLog& log, std::string_view type);

/// Columns: case_id, event_id, activity, timestamp, then one column per
/// event attribute name (sorted). RFC 4180 quoting.
std::string write_flat_csv(const FlatLog& flat);

/// {"case_type": ..., "cases": {"<case>": [{"ocel:eid", "ocel:activity",
/// "ocel:timestamp", "ocel:vmap"}...]}}
std::string write_flat_json(const FlatLog& flat);

}  // namespace ocelkit
