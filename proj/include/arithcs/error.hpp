#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arithcs {

/// Coarse error classes; the CLI maps these onto exit codes.
enum class ErrorCategory {
  kValidation,   // malformed input objects (not a group, not a hom, ...)
  kComputation,  // a well-formed request with no answer (no trivialization, no lift, ...)
  kParse,        // unreadable documents
};

const char* to_string(ErrorCategory category);

/// Base exception for every failure raised by the library.
///
/// `kind` is a stable machine-readable tag such as "NotAGroup" or
/// "NoGlobalTrivialization". `witness` carries element indices (or a tuple
/// index) exhibiting the failure when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string kind, const std::string& message,
        std::vector<std::uint64_t> witness = {})
      : std::runtime_error(message),
        category_(category),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  ErrorCategory category() const { return category_; }
  const std::string& kind() const { return kind_; }
  const std::vector<std::uint64_t>& witness() const { return witness_; }

 private:
  ErrorCategory category_;
  std::string kind_;
  std::vector<std::uint64_t> witness_;
};

inline Error validation_error(std::string kind, const std::string& message,
                              std::vector<std::uint64_t> witness = {}) {
  return Error(ErrorCategory::kValidation, std::move(kind), message, std::move(witness));
}

inline Error computation_error(std::string kind, const std::string& message,
                               std::vector<std::uint64_t> witness = {}) {
  return Error(ErrorCategory::kComputation, std::move(kind), message, std::move(witness));
}

inline Error parse_error(const std::string& message, std::vector<std::uint64_t> witness = {}) {
  return Error(ErrorCategory::kParse, "ParseError", message, std::move(witness));
}

inline const char* to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kValidation:
      return "validation";
    case ErrorCategory::kComputation:
      return "computation";
    case ErrorCategory::kParse:
      return "parse";
  }
  return "unknown";
}

}  // namespace arithcs
