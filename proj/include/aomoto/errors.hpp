#pragma once

#include <stdexcept>
#include <string>

namespace aomoto {

// A mathematical precondition does not hold (not PD, alpha^2 != 0, point outside MC, ...).
class PreconditionError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

// Malformed input text or a request outside the supported parameter ranges.
class ParseError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured point cap.
class ResourceError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace aomoto
