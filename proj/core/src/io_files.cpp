#include <algorithm>
#include <cctype>
#include <cerrno>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ocelkit/io.hpp"

namespace ocelkit {

OcelFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".xmlocel" || ext == ".xml" ? OcelFormat::Xml : OcelFormat::Json;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno ? errno : ENOENT, std::generic_category(), path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::system_error(errno ? errno : EACCES, std::generic_category(), path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out.flush()) throw std::system_error(EIO, std::generic_category(), path.string());
}

OcelLog read_ocel_file(const std::filesystem::path& path, Warnings* warnings) {
  const std::string text = read_text_file(path);
  return format_for_path(path) == OcelFormat::Xml ? parse_xml_ocel(text, warnings) : parse_json_ocel(text, warnings);
}

void write_ocel_file(const OcelLog& log, const std::filesystem::path& path) {
  write_text_file(path, format_for_path(path) == OcelFormat::Xml ? write_xml_ocel(log) : write_json_ocel(log));
}

}  // namespace ocelkit
