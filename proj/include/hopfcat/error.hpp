#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>
#include <string_view>

namespace hopfcat {

enum class ErrorKind {
  shape_mismatch,
  not_invertible,
  not_in_subspace,
  not_coreflexive,
  axiom_violation,
  not_a_monoid,
  no_antipode,
  non_unique,
  not_hopf,
  inconsistent,
  factorization_failure,
  snake_failure,
  field_mismatch,
  parse_error,
  invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::not_invertible: return "NotInvertible";
    case ErrorKind::not_in_subspace: return "NotInSubspace";
    case ErrorKind::not_coreflexive: return "NotCoreflexive";
    case ErrorKind::axiom_violation: return "AxiomViolation";
    case ErrorKind::not_a_monoid: return "NotAMonoid";
    case ErrorKind::no_antipode: return "NoAntipode";
    case ErrorKind::non_unique: return "NonUnique";
    case ErrorKind::not_hopf: return "NotHopf";
    case ErrorKind::inconsistent: return "Inconsistent";
    case ErrorKind::factorization_failure: return "FactorizationFailure";
    case ErrorKind::snake_failure: return "SnakeFailure";
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the toolkit. The kind is what callers dispatch on;
/// the message names the offending object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

/// Same, with the message built only on failure.
template <class F>
  requires std::is_invocable_r_v<std::string, F>
void require(bool condition, ErrorKind kind, F&& what) {
  if (!condition) fail(kind, what());
}

}  // namespace hopfcat
