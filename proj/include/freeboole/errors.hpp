#pragma once

#include <stdexcept>
#include <string>

namespace freeboole {

// Base class for all library errors so callers can catch them in one place.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live over different ground sets.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// An element was used with an algebra it does not belong to.
class MembershipError : public Error {
public:
  explicit MembershipError(const std::string& what) : Error(what) {}
};

// A search or enumeration exceeded its configured budget.  The message names
// the limit that was hit.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

// A documented precondition of an operation was violated.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Malformed input file; message carries the line number.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace freeboole
