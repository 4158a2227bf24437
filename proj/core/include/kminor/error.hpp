#pragma once

#include <stdexcept>
#include <string>

namespace kminor {

/// Broad failure classes. The CLI maps them onto exit codes.
enum class ErrorKind {
  input,         // malformed input, failed validation, capacity exceeded
  inapplicable,  // a method's preconditions do not hold for this graph/spectrum
  budget,        // search or iteration budget exhausted
  numeric,       // eigensolver or root isolation trouble
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return {ErrorKind::input, what}; }
inline Error inapplicable_error(const std::string& what) { return {ErrorKind::inapplicable, what}; }
inline Error budget_error(const std::string& what) { return {ErrorKind::budget, what}; }
inline Error numeric_error(const std::string& what) { return {ErrorKind::numeric, what}; }

}  // namespace kminor
