#ifndef LPKIT_POLY_HPP
#define LPKIT_POLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lpkit/field.hpp"

namespace lpkit {

/// Dense univariate polynomial, coefficients stored low degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const S& value) { return Poly(std::vector<S>{value}); }

  /// The indeterminate λ over `field`.
  static Poly lambda(const FieldSpec& field) {
    return Poly(std::vector<S>{scalar<S>(0, field), scalar<S>(1, field)});
  }

  /// λ - root
  static Poly linear(const S& root, const FieldSpec& field) {
    return Poly(std::vector<S>{-root, scalar<S>(1, field)});
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : S(0); }
  const S& leading() const { return c_.back(); }

  S operator()(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  Poly& operator*=(const S& k) {
    for (auto& x : c_) x *= k;
    trim();
    return *this;
  }

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator-(Poly x) {
    for (auto& v : x.c_) v = -v;
    return x;
  }
  friend Poly operator*(Poly x, const S& k) { return x *= k; }
  friend Poly operator*(const S& k, Poly x) { return x *= k; }
  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    std::vector<S> out(x.c_.size() + y.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

 private:
  std::vector<S> c_;

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

/// Euclidean division: num = q * den + r with deg r < deg den.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& num, const Poly<S>& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<S> rem = num.coeffs();
  int dd = den.degree();
  if (num.degree() < dd) return {Poly<S>(), num};
  std::vector<S> quot(num.degree() - dd + 1, S(0));
  S lead_inv = den.leading().inverse();
  for (int k = num.degree() - dd; k >= 0; --k) {
    S q = rem[k + dd] * lead_inv;
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * den.coeffs()[j];
  }
  rem.resize(dd);
  return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

template <class S>
std::string to_string(const Poly<S>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const S& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || cs != "1") out += cs;
    if (i > 0) {
      if (cs != "1") out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

template <class S>
struct Root {
  S value;
  int multiplicity = 1;
};

/// All roots of `p` lying in the ground field, sorted in canonical order.
/// Over Q: rational-root candidates from the integer-scaled polynomial, each
/// verified exactly. Over GF(p): exhaustive evaluation (p < 2^22).
template <class S>
std::vector<Root<S>> roots_in_field(const Poly<S>& p, const FieldSpec& field);

template <>
std::vector<Root<Rational>> roots_in_field(const Poly<Rational>& p, const FieldSpec& field);
template <>
std::vector<Root<ModP>> roots_in_field(const Poly<ModP>& p, const FieldSpec& field);

}  // namespace lpkit

#endif  // LPKIT_POLY_HPP
