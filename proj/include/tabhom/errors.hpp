#pragma once

#include <stdexcept>
#include <string>

namespace tabhom {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The brute-force oracle refused an instance larger than its cap.
class OracleCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A Hecke algebra element is not in the span of the tabloid basis x_la T_d.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace tabhom
