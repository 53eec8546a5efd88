#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

// Precondition on n, a coloring, or a numeric argument is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A gluing does not fit together (mismatched vertex maps, edge cycles that
// fail to close, fans that do not correspond across a pairing).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. The message starts with the JSON location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(location) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace hyp
