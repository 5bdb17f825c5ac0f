#pragma once

#include <stdexcept>
#include <string>

namespace ocelkit {

/// Raised when an argument names an entity that does not exist in the log,
/// or a threshold lies outside its domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the OCEL readers. `where()` names the offending element
/// (an event id, object id, key path or line number).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Two summaries that cannot describe a before/after pair.
class InconsistentSummary : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ocelkit
