#pragma once

#include <stdexcept>
#include <string>

namespace c2i {

// A value failed one of its declared invariants at construction time.
class InvariantViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bytes that are not the canonical encoding of any message.
class MalformedMessage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExpiredInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoActiveMeasurement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EmptyWindow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A postcondition the engine relies on was broken at runtime; maps to exit code 3.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace c2i
