#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace suspla {

/* Exit-code contract shared by the library and the CLI driver:
 *   0 pass, 1 verified failure (with witness), 2 indeterminate/overflow,
 *   3 malformed input. */
enum class ExitCode : int { Pass = 0, Failure = 1, Indeterminate = 2, Schema = 3 };

struct Error : std::runtime_error {
  ExitCode code;
  Error(ExitCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(ExitCode::Schema, msg) {}
};

struct KindMismatch : SchemaError {
  explicit KindMismatch(const std::string& msg) : SchemaError("scalar kind mismatch: " + msg) {}
};

struct NotSubspace : SchemaError {
  explicit NotSubspace(const std::string& msg) : SchemaError("not a subspace: " + msg) {}
};

struct InvalidBound : SchemaError {
  explicit InvalidBound(const std::string& msg) : SchemaError("invalid bound: " + msg) {}
};

/* A required computation left the declared degree window or the Lie cap.
 * Callers either surface this as an indeterminate verdict or enlarge the
 * truncation; it is never silently treated as zero. */
struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error(ExitCode::Indeterminate, "overflow: " + msg) {}
};

struct WindowTooSmall : Error {
  explicit WindowTooSmall(const std::string& msg) : Error(ExitCode::Indeterminate, "window too small: " + msg) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(ExitCode::Indeterminate, "cap exceeded: " + msg) {}
};

struct NonLinearMonoid : Error {
  explicit NonLinearMonoid(const std::string& msg) : Error(ExitCode::Failure, "nonlinear monoid: " + msg) {}
};

struct NonTorsionInput : Error {
  explicit NonTorsionInput(const std::string& msg) : Error(ExitCode::Failure, "non-torsion input: " + msg) {}
};

struct NotClosedUnderBracket : Error {
  explicit NotClosedUnderBracket(const std::string& msg)
      : Error(ExitCode::Failure, "generalized primitives not closed under bracket: " + msg) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& msg) : Error(ExitCode::Schema, "not applicable: " + msg) {}
};

/* Tri-state outcome of a structural check.  A fail carries at least one
 * human-readable witness; indeterminate carries the reason the window or cap
 * was insufficient to decide. */
enum class Status { Pass, Fail, Indeterminate };

struct Verdict {
  Status status = Status::Pass;
  std::vector<std::string> witnesses;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {Status::Fail, {std::move(w)}}; }
  static Verdict indeterminate(std::string w) { return {Status::Indeterminate, {std::move(w)}}; }

  bool ok() const { return status == Status::Pass; }

  /* Combine: fail dominates indeterminate dominates pass; witnesses append. */
  Verdict& operator&=(const Verdict& other) {
    if (other.status == Status::Fail) status = Status::Fail;
    else if (other.status == Status::Indeterminate && status == Status::Pass)
      status = Status::Indeterminate;
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    return *this;
  }
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "indeterminate";
  }
}

}  // namespace suspla
