#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ontoforge {

/// Broad failure classes. Each maps to one C status code and one HTTP status.
enum class ErrorKind {
  invalid_argument,  // precondition violated, bad payload
  not_found,         // page, file, phrase, session, element
  network,           // retryable transport failure
  parse,             // malformed record, syntax error
  conflict,          // duplicate, already decided, element in use
  validation,        // ontology rule rejected (cycle, dangling reference)
  io,
  internal,
};

/// Exception carrying a machine-readable code such as "is-a-cycle" or
/// "page-not-found" alongside the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

}  // namespace ontoforge
