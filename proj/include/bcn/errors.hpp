#pragma once

#include <stdexcept>
#include <string>

namespace bcn {

/// Two values of different rank were combined, or an index is out of range
/// for the ambient rank.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. The message names the offending line or token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource guard (enumeration size, orbit size) would be exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant of a domain value does not hold.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bcn
