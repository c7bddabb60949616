// Exact scalar types for lpkit: arbitrary-precision rationals and prime-field
// residues, together with the Eigen glue that lets both be used as the scalar
// type of dense Eigen matrices.
#ifndef LPKIT_FIELD_HPP
#define LPKIT_FIELD_HPP

#include <Eigen/Core>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lpkit/error.hpp"

namespace lpkit {

enum class FieldKind { Rationals, PrimeField };

/// The ground field. `modulus` is meaningful for prime fields only.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InvalidField unless `p` is a prime in [2, 2^62).
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" (or "QQ", "rationals") and "GF(p)" (or a bare prime "p").
  static FieldSpec parse(std::string_view text);

  std::uint64_t characteristic() const { return kind == FieldKind::Rationals ? 0 : modulus; }
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_u64(std::uint64_t n);

// ---------------------------------------------------------------------------

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  /// Throws DivisionByZero when `den` is zero.
  Rational(const mpz_class& num, const mpz_class& den);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  FieldSpec field() const { return FieldSpec::rationals(); }
  Rational inverse() const;
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }
  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }

 private:
  mpq_class q_;
};

// ---------------------------------------------------------------------------

/// Residue modulo a prime.
///
/// A ModP built from a bare integer is *unbound*: it holds that integer and
/// adopts the modulus of the first bound operand it meets. Eigen constructs
/// Scalar(0) and Scalar(1) internally, so the generic constants must exist
/// before a modulus is known. Values produced through a FieldSpec are always
/// bound; mixing two different moduli throws FieldMismatch.
class ModP {
 public:
  ModP() = default;
  ModP(int v) : raw_(v) {}
  ModP(long v) : raw_(v) {}
  /// Bound residue of `v` modulo `modulus` (which must already be validated prime).
  ModP(std::int64_t v, std::uint64_t modulus);

  bool bound() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }
  /// Residue in [0, p). For an unbound value, the raw integer (must be >= 0).
  std::uint64_t residue() const;
  bool is_zero() const { return raw_ == 0; }
  FieldSpec field() const;
  ModP inverse() const;
  std::string str() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o);

  friend ModP operator+(ModP x, const ModP& y) { return x += y; }
  friend ModP operator-(ModP x, const ModP& y) { return x -= y; }
  friend ModP operator*(ModP x, const ModP& y) { return x *= y; }
  friend ModP operator/(ModP x, const ModP& y) { return x /= y; }
  friend ModP operator-(const ModP& x);
  friend bool operator==(const ModP& x, const ModP& y);

 private:
  // Bound: residue in [0, p). Unbound: the plain integer.
  std::int64_t raw_ = 0;
  std::uint64_t modulus_ = 0;

  static std::uint64_t common_modulus(const ModP& x, const ModP& y);
  ModP bound_to(std::uint64_t m) const;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, const ModP& x);

// ---------------------------------------------------------------------------

/// Per-scalar-type field services used by the generic algorithms.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr FieldKind kind = FieldKind::Rationals;
  static Rational from_int(std::int64_t v, const FieldSpec& field);
  /// Accepts "n" or "n/m" (decimal, optional sign on n). Rejects floats.
  static Rational parse(std::string_view text, const FieldSpec& field);
  static std::string format(const Rational& x) { return x.str(); }
  /// Canonical spectrum order: lexicographic on (numerator, denominator).
  static bool canonical_less(const Rational& x, const Rational& y);
  static void check_field(const FieldSpec& field);
};

template <>
struct ScalarTraits<ModP> {
  static constexpr FieldKind kind = FieldKind::PrimeField;
  static ModP from_int(std::int64_t v, const FieldSpec& field);
  static ModP parse(std::string_view text, const FieldSpec& field);
  static std::string format(const ModP& x) { return x.str(); }
  static bool canonical_less(const ModP& x, const ModP& y) { return x.residue() < y.residue(); }
  static void check_field(const FieldSpec& field);
};

template <class S>
S scalar(std::int64_t v, const FieldSpec& field) {
  return ScalarTraits<S>::from_int(v, field);
}

template <class S>
std::string to_string(const S& x) {
  return ScalarTraits<S>::format(x);
}

}  // namespace lpkit

namespace Eigen {

template <>
struct NumTraits<lpkit::Rational> : GenericNumTraits<lpkit::Rational> {
  using Real = lpkit::Rational;
  using NonInteger = lpkit::Rational;
  using Literal = lpkit::Rational;
  using Nested = lpkit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<lpkit::ModP> : GenericNumTraits<lpkit::ModP> {
  using Real = lpkit::ModP;
  using NonInteger = lpkit::ModP;
  using Literal = lpkit::ModP;
  using Nested = lpkit::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 6
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LPKIT_FIELD_HPP
