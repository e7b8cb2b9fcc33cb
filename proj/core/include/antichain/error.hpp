#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace antichain {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or an argument outside the documented range.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A mathematical hypothesis required by a construction does not hold.
/// hypothesis() names it (e.g. "Sperner", "intersecting", "even-size").
class PreconditionError : public Error {
public:
  PreconditionError(std::string hypothesis, const std::string &detail)
      : Error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

  const std::string &hypothesis() const noexcept { return hypothesis_; }

private:
  std::string hypothesis_;
};

/// Instance too large for exhaustive treatment.
class SizeCapError : public Error {
public:
  using Error::Error;
};

/// An invariant the mathematics guarantees was observed to fail.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace antichain
