#pragma once

#include <stdexcept>
#include <string>

namespace pptkit {

/// Raised when an input violates a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace pptkit
