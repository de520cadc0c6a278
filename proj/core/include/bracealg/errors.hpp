#pragma once

#include <stdexcept>
#include <string>

namespace bracealg {

/// Malformed or mismatched input: wrong arity, unknown basis name, bad shape.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bracealg
