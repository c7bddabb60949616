#include "lpkit/field.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <regex>

namespace lpkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::NotMultiplicityFree: return "NotMultiplicityFree";
    case ErrorKind::HintInvalid: return "HintInvalid";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EqualIndices: return "EqualIndices";
    case ErrorKind::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorKind::ZeroTarget: return "ZeroTarget";
    case ErrorKind::CosineVanishes: return "CosineVanishes";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotConstant: return "NotConstant";
    case ErrorKind::RouteUnavailable: return "RouteUnavailable";
    case ErrorKind::NotQPolynomial: return "NotQPolynomial";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr u64 kMaxModulus = u64{1} << 62;

const std::regex& scalar_pattern() {
  static const std::regex re(R"(^([+-]?[0-9]+)(?:/([0-9]+))?$)");
  return re;
}

struct ScalarParts {
  std::string num;
  std::string den;  // empty when absent
};

ScalarParts split_scalar(std::string_view text) {
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, scalar_pattern())) {
    if (s.find_first_of(".eE") != std::string::npos)
      throw Error(ErrorKind::ParseError,
                  "floating-point literal '" + s + "' not allowed; write exact values as num/den");
    throw Error(ErrorKind::ParseError, "malformed scalar '" + s + "'");
  }
  return {m[1].str(), m[2].matched ? m[2].str() : std::string()};
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(u64 p) {
  if (p >= kMaxModulus) throw Error(ErrorKind::InvalidField, "modulus must be below 2^62");
  if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
  return {FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s == "Q" || s == "QQ" || s == "rationals") return rationals();
  static const std::regex gf(R"(^(?:GF\(([0-9]+)\)|([0-9]+))$)");
  std::smatch m;
  if (!std::regex_match(s, m, gf)) throw Error(ErrorKind::InvalidField, "unrecognized field '" + s + "'");
  std::string digits = m[1].matched ? m[1].str() : m[2].str();
  if (digits.size() > 19) throw Error(ErrorKind::InvalidField, "modulus too large");
  return prime(std::stoull(digits));
}

std::string FieldSpec::str() const {
  return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(modulus) + ")";
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational ScalarTraits<Rational>::from_int(std::int64_t v, const FieldSpec& field) {
  check_field(field);
  return Rational(static_cast<long>(v));
}

Rational ScalarTraits<Rational>::parse(std::string_view text, const FieldSpec& field) {
  check_field(field);
  auto parts = split_scalar(text);
  mpz_class num(parts.num[0] == '+' ? parts.num.substr(1) : parts.num, 10);
  mpz_class den(parts.den.empty() ? std::string("1") : parts.den, 10);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool ScalarTraits<Rational>::canonical_less(const Rational& x, const Rational& y) {
  int c = cmp(x.value().get_num(), y.value().get_num());
  if (c != 0) return c < 0;
  return x.value().get_den() < y.value().get_den();
}

void ScalarTraits<Rational>::check_field(const FieldSpec& field) {
  if (field.kind != FieldKind::Rationals)
    throw Error(ErrorKind::FieldMismatch, "rational scalar requested for " + field.str());
}

// --- ModP -------------------------------------------------------------------

ModP::ModP(std::int64_t v, u64 modulus) : modulus_(modulus) {
  if (modulus == 0) throw Error(ErrorKind::InvalidField, "modulus 0");
  std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t r = v % m;
  raw_ = r < 0 ? r + m : r;
}

u64 ModP::residue() const {
  if (!bound() && raw_ < 0) throw Error(ErrorKind::FieldMismatch, "unbound negative residue");
  return static_cast<u64>(raw_);
}

FieldSpec ModP::field() const {
  if (!bound()) throw Error(ErrorKind::FieldMismatch, "unbound residue has no field");
  return {FieldKind::PrimeField, modulus_};
}

u64 ModP::common_modulus(const ModP& x, const ModP& y) {
  if (x.modulus_ && y.modulus_ && x.modulus_ != y.modulus_)
    throw Error(ErrorKind::FieldMismatch, "GF(" + std::to_string(x.modulus_) + ") vs GF(" +
                                              std::to_string(y.modulus_) + ")");
  return x.modulus_ ? x.modulus_ : y.modulus_;
}

ModP ModP::bound_to(u64 m) const { return bound() ? *this : ModP(raw_, m); }

ModP& ModP::operator+=(const ModP& o) {
  u64 m = common_modulus(*this, o);
  if (m == 0) {
    if (__builtin_add_overflow(raw_, o.raw_, &raw_)) throw Error(ErrorKind::Unsupported, "unbound overflow");
    return *this;
  }
  u64 s = bound_to(m).residue() + o.bound_to(m).residue();
  if (s >= m) s -= m;
  raw_ = static_cast<std::int64_t>(s);
  modulus_ = m;
  return *this;
}

ModP& ModP::operator-=(const ModP& o) { return *this += -o; }

ModP& ModP::operator*=(const ModP& o) {
  u64 m = common_modulus(*this, o);
  if (m == 0) {
    if (__builtin_mul_overflow(raw_, o.raw_, &raw_)) throw Error(ErrorKind::Unsupported, "unbound overflow");
    return *this;
  }
  raw_ = static_cast<std::int64_t>(mul_mod(bound_to(m).residue(), o.bound_to(m).residue(), m));
  modulus_ = m;
  return *this;
}

ModP& ModP::operator/=(const ModP& o) {
  u64 m = common_modulus(*this, o);
  if (o.is_zero() || (m != 0 && o.bound_to(m).is_zero()))
    throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (m == 0) {
    if (raw_ % o.raw_ != 0) throw Error(ErrorKind::FieldMismatch, "inexact division of unbound residues");
    raw_ /= o.raw_;
    return *this;
  }
  return *this *= o.bound_to(m).inverse();
}

ModP operator-(const ModP& x) {
  if (!x.bound()) return ModP(static_cast<long>(-x.raw_));
  return ModP(x.raw_ == 0 ? 0 : static_cast<std::int64_t>(x.modulus_) - x.raw_, x.modulus_);
}

bool operator==(const ModP& x, const ModP& y) {
  u64 m = ModP::common_modulus(x, y);
  if (m == 0) return x.raw_ == y.raw_;
  return x.bound_to(m).raw_ == y.bound_to(m).raw_;
}

ModP ModP::inverse() const {
  if (!bound()) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw Error(ErrorKind::FieldMismatch, "inverse of unbound residue");
  }
  if (raw_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // p is prime, so a^(p-2) is the inverse.
  return ModP(static_cast<std::int64_t>(pow_mod(static_cast<u64>(raw_), modulus_ - 2, modulus_)), modulus_);
}

std::string ModP::str() const { return std::to_string(raw_); }

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

ModP ScalarTraits<ModP>::from_int(std::int64_t v, const FieldSpec& field) {
  check_field(field);
  return ModP(v, field.modulus);
}

ModP ScalarTraits<ModP>::parse(std::string_view text, const FieldSpec& field) {
  check_field(field);
  auto parts = split_scalar(text);
  auto reduce = [&](const std::string& digits) {
    mpz_class z(digits[0] == '+' ? digits.substr(1) : digits, 10);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), field.modulus);
    return ModP(static_cast<std::int64_t>(r.get_ui()), field.modulus);
  };
  ModP num = reduce(parts.num);
  if (parts.den.empty()) return num;
  ModP den = reduce(parts.den);
  if (den.is_zero())
    throw Error(ErrorKind::ParseError, "denominator of '" + std::string(text) + "' vanishes in " + field.str());
  return num / den;
}

void ScalarTraits<ModP>::check_field(const FieldSpec& field) {
  if (field.kind != FieldKind::PrimeField)
    throw Error(ErrorKind::FieldMismatch, "prime-field scalar requested for " + field.str());
}

}  // namespace lpkit
