#pragma once

#include <stdexcept>
#include <string>

namespace fuchs {

/// Thrown when a computation would exceed a configured size cap
/// (endomorphism enumeration order cap, unit enumeration dimension cap).
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown on mismatched vector/matrix/group dimensions.
class dimension_error : public std::invalid_argument {
 public:
  explicit dimension_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace fuchs
