#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kv {

// Bad input: malformed text, violated preconditions (non-homogeneous
// generators, wrong codimension, zero divisors, ...).  The CLI reports
// these on stderr and exits with status 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a byte offset into the offending string.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Internal invariant violation: a reduction that must terminate did not,
// a certified stabilization check failed, a theorem consistency check
// broke.  These are bugs, not bad input; the CLI exits with status 2.
class EngineError : public std::logic_error {
 public:
  explicit EngineError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kv
