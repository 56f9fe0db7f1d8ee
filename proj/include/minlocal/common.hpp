#pragma once

#include <stdexcept>
#include <string>

namespace minlocal {

/// Three-valued answer: predicates over p-adic data may be undecidable at the
/// available precision, and some minimality questions are genuinely open.
enum class Tri { yes, no, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    default:
      return "unknown";
  }
}

/// Conjunction with unknown-propagation: no dominates, then unknown.
inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return Tri::yes;
}

/// Default relative precision (digits) for p-adic computations.
inline constexpr int kDefaultPrecision = 12;

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& msg) : std::runtime_error(msg) {}
};

/// A result would claim digits the inputs do not justify.
struct InsufficientPrecision : std::runtime_error {
  explicit InsufficientPrecision(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scalars of incompatible kinds met in one expression.
struct KindMismatch : std::runtime_error {
  explicit KindMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated mathematical precondition (matrix not in the stated group, wrong
/// field, excluded characteristic, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal cross-check failed to stabilize or an identity that must hold
/// did not; signals a bug in this library, never a mathematical fact.
struct OracleFailure : std::runtime_error {
  explicit OracleFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace minlocal
