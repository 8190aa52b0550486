#pragma once

#include <stdexcept>
#include <string>

namespace flatperm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity disagreed with an identity it is known to satisfy.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

/// An exact division left a remainder or produced a non-integral coefficient.
class InexactDivision : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};

/// A request exceeded a configured size limit (enumeration size, r, order).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace flatperm
