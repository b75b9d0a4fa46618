#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace globalize {

/// Broad class of a failure; the CLI maps it to an exit code.
enum class ErrorKind {
  Input,     // malformed data or an axiom violated by the input
  Math,      // a mathematical check failed (not globalizable, ...)
  Cap,       // an enumeration or size cap was exceeded
  Internal,  // a theorem-backed assertion failed: library defect
};

/// Exception carrying a stable error code and a human-readable witness.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string witness, ErrorKind kind = ErrorKind::Input)
      : std::runtime_error(code + (witness.empty() ? "" : ": " + witness)),
        code_(std::move(code)),
        witness_(std::move(witness)),
        kind_(kind) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string code_;
  std::string witness_;
  ErrorKind kind_;
};

/// Outcome of a check that reports rather than throws.
struct Verdict {
  bool ok = true;
  std::string code;     // empty on pass
  std::string witness;  // first counterexample, if any

  static Verdict pass() { return {}; }
  static Verdict fail(std::string code, std::string witness) {
    return {false, std::move(code), std::move(witness)};
  }
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

[[noreturn]] inline void internal_error(const std::string& code, const std::string& witness) {
  throw Error(code, witness, ErrorKind::Internal);
}

}  // namespace detail

}  // namespace globalize
