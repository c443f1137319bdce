// freedl/errors.hpp — error types shared across the toolkit.

#ifndef FREEDL_ERRORS_HPP
#define FREEDL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freedl {

// Position of a token in a source text, 1-based line/column.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, SourceSpan span)
      : std::runtime_error(msg + " at " + std::to_string(span.line) + ":" +
                           std::to_string(span.column)),
        span_(span) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Work cap or explicit bound exceeded while searching/enumerating.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is outside the fragment an operation accepts.
class FragmentError : public std::runtime_error {
 public:
  explicit FragmentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input was required to be in normal form but is not.
class NotNormalFormError : public std::runtime_error {
 public:
  explicit NotNormalFormError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates the intermediate CI shapes an ELO transformation expects.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation applied in a semantics mode where it is known to be unsound.
class ModeError : public std::runtime_error {
 public:
  explicit ModeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace freedl

#endif  // FREEDL_ERRORS_HPP
