#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wplat {

/// An operation was called with arguments outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A query about elements that do not stand in the required relation
/// (e.g. mu(x, y) with x not below y, or a chain that is not decreasing).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed the configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computation routes that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& detail = {})
      : std::runtime_error(format(position, expected, detail)),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  static std::string format(std::size_t pos, const std::string& expected, const std::string& detail) {
    std::string msg = "parse error at position " + std::to_string(pos) + ": expected " + expected;
    if (!detail.empty()) msg += " (" + detail + ")";
    return msg;
  }

  std::size_t position_;
  std::string expected_;
};

}  // namespace wplat
