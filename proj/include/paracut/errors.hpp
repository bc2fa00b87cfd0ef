#pragma once

#include <stdexcept>
#include <string>

namespace paracut {

// Malformed instance text or command-line value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge cost is negative at a parameter value the caller asked about.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance exceeds a hard size limit (brute-force enumeration).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paracut
