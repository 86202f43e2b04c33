#ifndef REXCALC_ERROR_HPP
#define REXCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rexcalc {

/// Bad input: out-of-range letters, rank mismatch, malformed text.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A graph has several sources or sinks where a unique one is required.
class NonUniqueSourceSink : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoDirectSubpath : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The operation is not defined for this element (see simplify_path).
class UnsupportedElement : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace rexcalc

#endif
