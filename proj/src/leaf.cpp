#include "lpkit/leaf.hpp"

#include "lpkit/cosine.hpp"

namespace lpkit {

std::string_view to_string(LeafMethod m) {
  switch (m) {
    case LeafMethod::Subspace: return "subspace";
    case LeafMethod::Recurrence: return "recurrence";
    case LeafMethod::Ratio: return "ratio";
    case LeafMethod::AppendixA: return "appendix-a";
    case LeafMethod::AppendixB: return "appendix-b";
  }
  return "?";
}

LeafMethod parse_leaf_method(std::string_view text) {
  for (LeafMethod m : kAllLeafMethods)
    if (to_string(m) == text) return m;
  throw Error(ErrorKind::ParseError, "unknown leaf method '" + std::string(text) +
                                         "' (expected subspace, recurrence, ratio, appendix-a or appendix-b)");
}

namespace {

template <class S>
void check_pair(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s) {
  const int n = sys.d() + 1;
  if (spec.size() != n) throw Error(ErrorKind::ShapeMismatch, "spectrum size does not match the system");
  if (r < 0 || r >= n) throw Error(ErrorKind::IndexOutOfRange, "r = " + std::to_string(r) + " is out of range", r);
  if (s < 0 || s >= n) throw Error(ErrorKind::IndexOutOfRange, "s = " + std::to_string(s) + " is out of range", s);
  if (r == s) throw Error(ErrorKind::EqualIndices, "r and s must differ", r);
}

template <class S>
LeafVerdict<S> denied(LeafMethod m, std::optional<int> at = std::nullopt) {
  LeafVerdict<S> v;
  v.method = m;
  v.failing_index = at;
  return v;
}

template <class S>
void check_appendix_preconditions(const TridiagonalSystem<S>& sys) {
  if (sys.d() < 2) throw Error(ErrorKind::PreconditionViolated, "appendix algorithms need d >= 2");
  for (int i = 1; i <= sys.d(); ++i)
    if (sys.theta_star[i] == sys.theta_star[0])
      throw Error(ErrorKind::PreconditionViolated,
                  "appendix algorithms need theta*_i != theta*_0; equality at i = " + std::to_string(i), i);
}

}  // namespace

template <class S>
bool appendix_applicable(const TridiagonalSystem<S>& sys) {
  try {
    check_appendix_preconditions(sys);
    return true;
  } catch (const Error&) {
    return false;
  }
}

template <class S>
LeafVerdict<S> leaf_by_subspace(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s) {
  check_pair(sys, spec, r, s);
  auto [A, Astar] = realize_matrices(sys);
  const Matrix<S>& E = spec.E[r];
  Index col = 0;
  while (col < E.cols() && is_zero(E.col(col))) ++col;
  ensure(col < E.cols(), "primitive idempotent is zero");
  const S kappa = dual_a(sys, spec, r);
  Vector<S> w = Astar * E.col(col) - kappa * E.col(col);
  LeafVerdict<S> v;
  v.method = LeafMethod::Subspace;
  v.kappa = kappa;
  v.confirmed = !is_zero(w) && is_zero((A * w - spec.theta[s] * w).eval());
  return v;
}

template <class S>
LeafVerdict<S> leaf_by_recurrence(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s) {
  check_pair(sys, spec, r, s);
  const int d = sys.d();
  const auto& ts = sys.theta_star;
  const S ar = dual_a(sys, spec, r);
  const S& tr = spec.theta[r];
  const S& tsig = spec.theta[s];
  auto alpha = cosine_sequence(sys, tr).alpha;
  const S zero = scalar<S>(0, sys.field);
  auto at = [&](const std::vector<S>& x, int i) { return i < 0 || i > d ? zero : x[i]; };

  bool some_nonzero = false;
  for (int i = 0; i <= d; ++i) {
    S lhs = sys.sub(i) * at(ts, i - 1) * at(alpha, i - 1) + sys.a[i] * ts[i] * alpha[i] +
            sys.super(i) * at(ts, i + 1) * at(alpha, i + 1) - tr * ts[i] * alpha[i];
    S rhs = (tsig - tr) * (ts[i] - ar) * alpha[i];
    if (lhs != rhs) return denied<S>(LeafMethod::Recurrence, i);
    some_nonzero = some_nonzero || !rhs.is_zero();
  }
  if (!some_nonzero) return denied<S>(LeafMethod::Recurrence);
  LeafVerdict<S> v;
  v.method = LeafMethod::Recurrence;
  v.confirmed = true;
  v.kappa = ar;
  return v;
}

template <class S>
LeafVerdict<S> leaf_by_ratio(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s) {
  check_pair(sys, spec, r, s);
  const auto& ts = sys.theta_star;
  const S ar = dual_a(sys, spec, r);
  if (ar == ts[0]) return denied<S>(LeafMethod::Ratio, 0);
  auto u = u_polys(sys);
  const S denom = ts[0] - ar;
  for (int i = 0; i <= sys.d(); ++i)
    if (u[i](spec.theta[s]) != u[i](spec.theta[r]) * (ts[i] - ar) / denom) return denied<S>(LeafMethod::Ratio, i);
  LeafVerdict<S> v;
  v.method = LeafMethod::Ratio;
  v.confirmed = true;
  v.kappa = ar;
  return v;
}

template <class S>
LeafVerdict<S> appendix_a(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s, bool paranoid) {
  check_pair(sys, spec, r, s);
  check_appendix_preconditions(sys);
  const int d = sys.d();
  const auto& ts = sys.theta_star;
  const S& tr = spec.theta[r];
  const S& tsig = spec.theta[s];
  ensure(tr != tsig, "eigenvalues are not distinct");

  std::vector<S> alpha{scalar<S>(1, sys.field), (tr - sys.a[0]) / sys.b[0]};
  const S kappa = (ts[1] * (tr - sys.a[0]) - ts[0] * (tsig - sys.a[0])) / (tr - tsig);
  auto check = [&](int j, const S& next_ts, const S& next_alpha) {
    S lhs = sys.c[j - 1] * ts[j - 1] * alpha[j - 1] + sys.a[j] * ts[j] * alpha[j] + sys.super(j) * next_ts * next_alpha;
    return lhs == (tsig * ts[j] + kappa * (tr - tsig)) * alpha[j];
  };
  for (int j = 1; j <= d - 1; ++j) {
    alpha.push_back((tr * alpha[j] - sys.c[j - 1] * alpha[j - 1] - sys.a[j] * alpha[j]) / sys.b[j]);
    if (!check(j, ts[j + 1], alpha[j + 1])) return denied<S>(LeafMethod::AppendixA, j);
  }
  if (paranoid) {
    // b_d = 0, so the unknown α_{d+1} drops out.
    ensure(check(d, scalar<S>(0, sys.field), scalar<S>(0, sys.field)), "appendix loop: relation at j = d fails");
  }
  LeafVerdict<S> v;
  v.method = LeafMethod::AppendixA;
  v.confirmed = true;
  v.kappa = kappa;
  return v;
}

template <class S>
LeafVerdict<S> appendix_b(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s) {
  check_pair(sys, spec, r, s);
  check_appendix_preconditions(sys);
  auto sum = constant_row_sum(sys);
  if (!sum) throw Error(ErrorKind::PreconditionViolated, "A does not have constant row sum");
  const S& tr = spec.theta[r];
  const S& tsig = spec.theta[s];
  if (*sum != tr)
    throw Error(ErrorKind::PreconditionViolated,
                "row sum " + to_string(*sum) + " differs from theta_r = " + to_string(tr));
  const auto& ts = sys.theta_star;
  const S kappa = (ts[1] * sys.b[0] - ts[0] * (tsig - sys.a[0])) / (tr - tsig);
  for (int j = 1; j <= sys.d() - 1; ++j) {
    S lhs = sys.c[j - 1] * ts[j - 1] + sys.a[j] * ts[j] + sys.b[j] * ts[j + 1];
    if (lhs != tsig * ts[j] + kappa * (tr - tsig)) return denied<S>(LeafMethod::AppendixB, j);
  }
  LeafVerdict<S> v;
  v.method = LeafMethod::AppendixB;
  v.confirmed = true;
  v.kappa = kappa;
  return v;
}

template <class S>
LeafVerdict<S> decide_leaf(LeafMethod method, const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s,
                           bool paranoid) {
  switch (method) {
    case LeafMethod::Subspace: return leaf_by_subspace(sys, spec, r, s);
    case LeafMethod::Recurrence: return leaf_by_recurrence(sys, spec, r, s);
    case LeafMethod::Ratio: return leaf_by_ratio(sys, spec, r, s);
    case LeafMethod::AppendixA: return appendix_a(sys, spec, r, s, paranoid);
    case LeafMethod::AppendixB: return appendix_b(sys, spec, r, s);
  }
  throw Error(ErrorKind::Unsupported, "unknown leaf method");
}

#define LPKIT_INSTANTIATE(S)                                                                                 \
  template bool appendix_applicable(const TridiagonalSystem<S>&);                                            \
  template LeafVerdict<S> leaf_by_subspace(const TridiagonalSystem<S>&, const Spectrum<S>&, int, int);       \
  template LeafVerdict<S> leaf_by_recurrence(const TridiagonalSystem<S>&, const Spectrum<S>&, int, int);     \
  template LeafVerdict<S> leaf_by_ratio(const TridiagonalSystem<S>&, const Spectrum<S>&, int, int);          \
  template LeafVerdict<S> appendix_a(const TridiagonalSystem<S>&, const Spectrum<S>&, int, int, bool);       \
  template LeafVerdict<S> appendix_b(const TridiagonalSystem<S>&, const Spectrum<S>&, int, int);             \
  template LeafVerdict<S> decide_leaf(LeafMethod, const TridiagonalSystem<S>&, const Spectrum<S>&, int, int, \
                                      bool);

LPKIT_INSTANTIATE(Rational)
LPKIT_INSTANTIATE(ModP)

}  // namespace lpkit
