#include "lpkit/cosine.hpp"

namespace lpkit {

template <class S>
PolynomialSequence<S> u_polys(const TridiagonalSystem<S>& sys) {
  require_valid(sys);
  const int d = sys.d();
  const auto& F = sys.field;
  const Poly<S> lambda = Poly<S>::lambda(F);
  PolynomialSequence<S> seq;
  seq.u.push_back(Poly<S>::constant(scalar<S>(1, F)));
  Poly<S> prev = Poly<S>::constant(scalar<S>(0, F));
  for (int i = 0; i < d; ++i) {
    Poly<S> next = (lambda - Poly<S>::constant(sys.a[i])) * seq.u[i] - sys.sub(i) * prev;
    prev = seq.u[i];
    seq.u.push_back(sys.b[i].inverse() * next);
  }
  S scale = scalar<S>(1, F);
  for (const auto& b : sys.b) scale *= b;
  Poly<S> last = (lambda - Poly<S>::constant(sys.a[d])) * seq.u[d] - sys.sub(d) * prev;
  seq.u.push_back(scale * last);
  return seq;
}

template <class S>
PolynomialSequence<S> p_polys(const TridiagonalSystem<S>& sys) {
  require_valid(sys);
  const int d = sys.d();
  const auto& F = sys.field;
  const Poly<S> lambda = Poly<S>::lambda(F);
  PolynomialSequence<S> seq;
  seq.u.push_back(Poly<S>::constant(scalar<S>(1, F)));
  seq.u.push_back(lambda - Poly<S>::constant(sys.a[0]));
  for (int i = 1; i <= d; ++i)
    seq.u.push_back((lambda - Poly<S>::constant(sys.a[i])) * seq.u[i] - (sys.b[i - 1] * sys.c[i - 1]) * seq.u[i - 1]);

  auto u = u_polys(sys);
  S prod = scalar<S>(1, F);
  for (int i = 0; i <= d; ++i) {
    ensure(prod * u[i] == seq.u[i], "p_i differs from b_0..b_{i-1} u_i");
    if (i < d) prod *= sys.b[i];
  }
  ensure(seq.u[d + 1] == u[d + 1], "p_{d+1} differs from u_{d+1}");
  return seq;
}

template <class S>
Poly<S> char_poly(const TridiagonalSystem<S>& sys) {
  Poly<S> chi = u_polys(sys)[sys.d() + 1];
  ensure(chi == char_poly_oracle(realize_matrices(sys).A, sys.field), "u_{d+1} is not the characteristic polynomial");
  return chi;
}

template <class S>
CosineSequence<S> cosine_sequence(const TridiagonalSystem<S>& sys, const S& theta) {
  auto u = u_polys(sys);
  const int d = sys.d();
  if (!u[d + 1](theta).is_zero())
    throw Error(ErrorKind::NotAnEigenvalue, to_string(theta) + " is not an eigenvalue of A");
  CosineSequence<S> out{{}, theta};
  for (int i = 0; i <= d; ++i) out.alpha.push_back(u[i](theta));
  return out;
}

template <class S>
TridiagonalSystem<S> rescale_superdiagonal(const TridiagonalSystem<S>& sys, const std::vector<S>& targets) {
  require_valid(sys);
  if (static_cast<int>(targets.size()) != sys.d())
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(sys.d()) + " superdiagonal targets");
  TridiagonalSystem<S> out = sys;
  for (int i = 0; i < sys.d(); ++i) {
    if (targets[i].is_zero()) throw Error(ErrorKind::ZeroTarget, "superdiagonal target " + std::to_string(i) + " is zero", i);
    out.b[i] = targets[i];
    out.c[i] = sys.b[i] * sys.c[i] / targets[i];
  }
  return out;
}

template <class S>
TridiagonalSystem<S> normalize(const TridiagonalSystem<S>& sys) {
  return rescale_superdiagonal(sys, std::vector<S>(sys.b.size(), scalar<S>(1, sys.field)));
}

template <class S>
std::optional<S> constant_row_sum(const TridiagonalSystem<S>& sys) {
  require_valid(sys);
  const int d = sys.d();
  auto row = [&](int i) { return sys.sub(i) + sys.a[i] + sys.super(i); };
  S theta = row(0);
  for (int i = 1; i <= d; ++i)
    if (row(i) != theta) return std::nullopt;
  auto cos = cosine_sequence(sys, theta);
  for (const auto& x : cos.alpha) ensure(x == scalar<S>(1, sys.field), "constant row sum but a cosine differs from 1");
  return theta;
}

template <class S>
TridiagonalSystem<S> rebase_to_row_sum(const TridiagonalSystem<S>& sys, const S& theta) {
  auto cos = cosine_sequence(sys, theta);
  const int d = sys.d();
  for (int i = 0; i <= d; ++i)
    if (cos.alpha[i].is_zero())
      throw Error(ErrorKind::CosineVanishes, "u_" + std::to_string(i) + "(" + to_string(theta) + ") = 0", i);
  std::vector<S> targets;
  for (int i = 1; i <= d; ++i) targets.push_back(sys.b[i - 1] * cos.alpha[i] / cos.alpha[i - 1]);
  auto out = rescale_superdiagonal(sys, targets);
  auto sum = constant_row_sum(out);
  ensure(sum && *sum == theta, "rebased system does not have the requested row sum");
  return out;
}

#define LPKIT_INSTANTIATE(S)                                                                           \
  template PolynomialSequence<S> u_polys(const TridiagonalSystem<S>&);                                 \
  template PolynomialSequence<S> p_polys(const TridiagonalSystem<S>&);                                 \
  template Poly<S> char_poly(const TridiagonalSystem<S>&);                                             \
  template CosineSequence<S> cosine_sequence(const TridiagonalSystem<S>&, const S&);                   \
  template TridiagonalSystem<S> rescale_superdiagonal(const TridiagonalSystem<S>&, const std::vector<S>&); \
  template TridiagonalSystem<S> normalize(const TridiagonalSystem<S>&);                                \
  template std::optional<S> constant_row_sum(const TridiagonalSystem<S>&);                             \
  template TridiagonalSystem<S> rebase_to_row_sum(const TridiagonalSystem<S>&, const S&);

LPKIT_INSTANTIATE(Rational)
LPKIT_INSTANTIATE(ModP)

}  // namespace lpkit
