#pragma once

#include <stdexcept>
#include <string>

namespace specrep {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kParse,                  // malformed polynomial or JSON input
  kUsage,                  // bad flags or arguments
  kInvalidArgument,        // structural precondition (non-square, zero, ...)
  kNotMonic,
  kNotSquarefree,
  kNotSmooth,
  kBranchPointNotRational,
  kRealRamification,
  kNotRealRooted,
  kNotHyperbolic,
  kRankDeficient,
  kNotInvertible,
  kIndefiniteForm,
  kNonTermination,
  kTooLarge,
  kNotFound,               // bounded search exhausted (not a disproof)
  kInternalCheckFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

/// Raises kInternalCheckFailed; used for identities that hold by
/// construction and whose failure means a bug.
inline void check_internal(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::kInternalCheckFailed, what);
}

}  // namespace specrep
