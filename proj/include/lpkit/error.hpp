#ifndef LPKIT_ERROR_HPP
#define LPKIT_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpkit {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ShapeMismatch,
  InvalidField,
  InvalidSystem,
  NotMultiplicityFree,
  HintInvalid,
  IndexOutOfRange,
  EqualIndices,
  NotAnEigenvalue,
  ZeroTarget,
  CosineVanishes,
  PreconditionViolated,
  NotConstant,
  RouteUnavailable,
  NotQPolynomial,
  CharacteristicTooSmall,
  ZeroScale,
  GenerationFailed,
  ParseError,
  Unsupported,
  // An identity that must hold by construction failed; always a bug.
  InvariantViolated,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<int> index = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

  /// Offending index for index-bearing errors (CosineVanishes, IndexOutOfRange, ParseError line).
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<int> index_;
  std::string message_;
};

// Throws InvariantViolated when `cond` is false.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::InvariantViolated, what);
}

}  // namespace lpkit

#endif  // LPKIT_ERROR_HPP
