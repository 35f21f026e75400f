#pragma once

#include <stdexcept>
#include <string>

namespace oddred {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values: wrong parity, out-of-range vertex, malformed cycle.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Desk-scale ceilings (labeling counts, minor enumeration, cut enumeration).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or CSV payloads.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A certificate could not be produced: the constraint is invalid or not a facet.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace oddred
