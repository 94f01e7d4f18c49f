#pragma once

#include <stdexcept>
#include <string>

namespace scs {

// Input reduced to nothing after normalization.
class EmptyInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact oracle or search was asked to go past its hard size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A bounded search finished without success. This is not a proof of absence.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scs
