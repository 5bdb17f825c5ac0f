#include "ocelkit/symbols.hpp"

namespace ocelkit {

std::uint32_t SymbolTable::intern(std::string_view name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const auto token = static_cast<std::uint32_t>(names_.size());
  const std::string& stored = names_.emplace_back(name);
  index_.emplace(stored, token);
  return token;
}

std::optional<std::uint32_t> SymbolTable::find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

}  // namespace ocelkit
