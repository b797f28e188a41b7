#pragma once

#include <stdexcept>
#include <string>

namespace symlim {

/// Thrown when an argument violates an operation's precondition
/// (degree mismatch, malformed partition, invalid cycle type, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured resource cap
/// (materialized points, tableau count, representation dimension).
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace detail

}  // namespace symlim
