#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpeval {

// Error taxonomy shared by the library, the CLI (which maps kinds onto the
// machine-readable error JSON) and the python bindings.
enum class ErrorKind {
  parse,            // malformed input text
  bounds,           // vertex id out of range
  parameter,        // invalid argument value
  undefined_ratio,  // imbalance ratio has no denominator
  degenerate_split, // split would produce an empty test or train set
  resource,         // estimated memory footprint exceeds the configured budget
  consistency,      // inputs that must belong together do not
  wrong_curve_kind, // PR metric applied to a ROC curve or vice versa
  division,         // zero reference metric in a relative table
  io,               // file could not be read or written
};

std::string_view to_string(ErrorKind kind);

class LpError : public std::runtime_error {
public:
  LpError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace lpeval
