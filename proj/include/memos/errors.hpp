#pragma once

#include <stdexcept>
#include <string>

namespace memos {

struct InvalidCoding : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Overflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnloweredGate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WidthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoPassingFrequency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace memos
