#pragma once

#include <stdexcept>
#include <string>

namespace qcap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Remainder of an exact division was non-zero.
struct NonDivisible : Error {
  using Error::Error;
};

// q -> 1/q requested on a one-sided truncated series.
struct TruncatedInput : Error {
  using Error::Error;
};

struct NegativeLength : Error {
  using Error::Error;
};

// A monomial specialization leaves a series with exponents unbounded below,
// or hits a zero factor.
struct UnboundedBelow : Error {
  using Error::Error;
};

struct ParamOutOfRange : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qcap
