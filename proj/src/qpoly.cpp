#include "lpkit/qpoly.hpp"

#include <cstdlib>

#include "lpkit/delta.hpp"
#include "lpkit/leaf.hpp"

namespace lpkit {

std::string_view to_string(Route r) { return r == Route::Direct ? "direct" : "theorem"; }

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::III: return "iii";
    case Condition::IV: return "iv";
  }
  return "?";
}

Route parse_route(std::string_view text) {
  if (text == "direct") return Route::Direct;
  if (text == "theorem") return Route::Theorem;
  throw Error(ErrorKind::ParseError, "unknown route '" + std::string(text) + "'");
}

template <class S>
std::optional<AffineSolution<S>> solve_condition_ii(const std::vector<S>& theta_star, const FieldSpec& field) {
  const int d = static_cast<int>(theta_star.size()) - 1;
  const int rows = std::max(d - 1, 0);
  Matrix<S> m = zero_matrix<S>(rows, 2, field);
  Vector<S> rhs = Vector<S>::Constant(rows, scalar<S>(0, field));
  for (int i = 1; i <= d - 1; ++i) {
    m(i - 1, 0) = theta_star[i];
    m(i - 1, 1) = scalar<S>(1, field);
    rhs(i - 1) = theta_star[i - 1] + theta_star[i + 1];
  }
  return solve_affine(m, rhs, field);
}

template <class S>
std::vector<S> extend_dual_eigenvalues(const std::vector<S>& theta_star, const S& beta, const S& gamma_star) {
  const std::size_t n = theta_star.size();
  if (n < 2) throw Error(ErrorKind::ShapeMismatch, "need at least two dual eigenvalues");
  std::vector<S> ext;
  ext.push_back(gamma_star + beta * theta_star[0] - theta_star[1]);
  ext.insert(ext.end(), theta_star.begin(), theta_star.end());
  ext.push_back(gamma_star + beta * theta_star[n - 1] - theta_star[n - 2]);
  return ext;
}

template <class S>
std::optional<AffineSolution<S>> solve_condition_iii(const TridiagonalSystem<S>& sys,
                                                     const std::vector<S>& theta_star_ext) {
  require_valid(sys);
  const int d = sys.d();
  if (static_cast<int>(theta_star_ext.size()) != d + 3)
    throw Error(ErrorKind::ShapeMismatch, "extended dual eigenvalue list must have d+3 entries");
  const auto& F = sys.field;
  Matrix<S> m(d + 1, 3);
  Vector<S> rhs(d + 1);
  for (int i = 0; i <= d; ++i) {
    const S& t = theta_star_ext[i + 1];
    m(i, 0) = t * t;
    m(i, 1) = t;
    m(i, 2) = scalar<S>(1, F);
    rhs(i) = sys.a[i] * (t - theta_star_ext[i]) * (t - theta_star_ext[i + 2]);
  }
  return solve_affine(m, rhs, F);
}

template <class S>
S compute_delta_star(const std::vector<S>& ext, const S& beta, const S& gamma_star) {
  if (ext.size() < 3) throw Error(ErrorKind::ShapeMismatch, "extended dual eigenvalue list too short");
  auto value = [&](std::size_t k) {
    const S& x = ext[k];
    const S& y = ext[k + 1];
    return x * x - beta * x * y + y * y - gamma_star * (x + y);
  };
  const S delta = value(0);
  for (std::size_t k = 1; k + 1 < ext.size(); ++k)
    if (value(k) != delta)
      throw Error(ErrorKind::NotConstant, "delta* differs at i = " + std::to_string(k) + " (" + to_string(value(k)) +
                                              " vs " + to_string(delta) + ")",
                  static_cast<int>(k));
  const S two(2);
  for (std::size_t k = 1; k + 1 < ext.size(); ++k) {
    const S& t = ext[k];
    ensure((t - ext[k - 1]) * (t - ext[k + 1]) == (two - beta) * t * t - two * gamma_star * t - delta,
           "product identity for the dual eigenvalues fails");
  }
  return delta;
}

template <class S>
bool verify_aw2(const TridiagonalSystem<S>& sys, const Spectrum<S>&, const RecurrenceWitness<S>& w) {
  auto [A, As] = realize_matrices(sys);
  const Matrix<S> I = identity_matrix<S>(A.rows(), sys.field);
  const Matrix<S> As2 = As * As;
  Matrix<S> lhs = As2 * A - w.beta * (As * A * As) + A * As2 - w.gamma_star * (A * As + As * A) - w.delta_star * A;
  Matrix<S> rhs = w.gamma * As2 + w.omega * As + w.eta_star * I;
  return lhs == rhs;
}

template <class S>
std::optional<RecurrenceWitness<S>> find_witness(const TridiagonalSystem<S>& sys) {
  require_valid(sys);
  const int d = sys.d();
  const auto& F = sys.field;
  const auto& ts = sys.theta_star;
  const S one = scalar<S>(1, F);
  // Unknowns: β, γ*, γ, ω, η*.
  Matrix<S> m = zero_matrix<S>((d - 1) + (d + 1), 5, F);
  Vector<S> rhs = Vector<S>::Constant(m.rows(), scalar<S>(0, F));
  Index row = 0;
  for (int i = 1; i <= d - 1; ++i, ++row) {
    m(row, 0) = ts[i];
    m(row, 1) = one;
    rhs(row) = ts[i - 1] + ts[i + 1];
  }
  for (int i = 0; i <= d; ++i, ++row) {
    m(row, 2) = ts[i] * ts[i];
    m(row, 3) = ts[i];
    m(row, 4) = one;
    if (i == 0 || i == d) {
      // a_i (θ*_i - θ*_n)(θ*_i - θ*_ext) with θ*_ext = γ* + βθ*_i - θ*_n
      // becomes k (θ*_i + θ*_n) - k θ*_i β - k γ*, k = a_i (θ*_i - θ*_n).
      const S& nb = ts[i == 0 ? 1 : d - 1];
      const S k = sys.a[i] * (ts[i] - nb);
      m(row, 0) = k * ts[i];
      m(row, 1) = k;
      rhs(row) = k * (ts[i] + nb);
    } else {
      rhs(row) = sys.a[i] * (ts[i] - ts[i - 1]) * (ts[i] - ts[i + 1]);
    }
  }
  auto sol = solve_affine(m, rhs, F);
  if (!sol) return std::nullopt;
  const Vector<S>& x = sol->particular;
  RecurrenceWitness<S> w{x(0), x(1), x(2), x(3), x(4), scalar<S>(0, F), {}};
  w.theta_star_ext = extend_dual_eigenvalues(ts, w.beta, w.gamma_star);
  auto iii = solve_condition_iii(sys, w.theta_star_ext);
  ensure(iii.has_value(), "joint solution does not satisfy the diagonal condition");
  w.delta_star = compute_delta_star(w.theta_star_ext, w.beta, w.gamma_star);
  return w;
}

namespace {

template <class S>
bool leaf_exists_by_ratio(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec) {
  for (int r = 0; r < spec.size(); ++r)
    for (int s = 0; s < spec.size(); ++s)
      if (r != s && leaf_by_ratio(sys, spec, r, s).confirmed) return true;
  return false;
}

}  // namespace

template <class S>
QPolyVerdict<S> is_q_polynomial(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, Route route) {
  require_valid(sys);
  QPolyVerdict<S> v;
  v.route = route;
  if (route == Route::Direct) {
    auto order = path_order(build_delta(sys, spec));
    v.qpoly = order.has_value();
    if (v.qpoly) {
      v.leonard_order = leonard_ordering(sys, spec);
      v.witness = find_witness(sys);
    }
    return v;
  }

  if (sys.d() < 3)
    throw Error(ErrorKind::RouteUnavailable, "the theorem route needs d >= 3 (got d = " + std::to_string(sys.d()) + ")");
  auto fail = [&](Condition c) {
    v.failed_condition = c;
    return v;
  };
  if (!leaf_exists_by_ratio(sys, spec)) return fail(Condition::I);
  if (!solve_condition_ii(sys.theta_star, sys.field)) return fail(Condition::II);
  auto w = find_witness(sys);
  if (!w) return fail(Condition::III);
  for (int i = 1; i <= sys.d(); ++i)
    if (sys.theta_star[i] == sys.theta_star[0]) return fail(Condition::IV);
  v.qpoly = true;
  v.witness = std::move(w);
  return v;
}

template <class S>
std::vector<int> leonard_ordering(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec) {
  auto order = path_order(build_delta(sys, spec));
  if (!order) throw Error(ErrorKind::NotQPolynomial, "the graph of the pair is not a path");
  auto ordered = reorder(spec, *order);
  auto [A, As] = realize_matrices(sys);
  const int n = ordered.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int gap = std::abs(i - j);
      if (gap == 0) continue;
      ensure(is_zero((ordered.E[i] * As * ordered.E[j]).eval()) == (gap > 1),
             "relabelled idempotents break the tridiagonal pattern for A*");
      ensure(A(i, j).is_zero() == (gap > 1), "A is not irreducible tridiagonal");
    }
  return *order;
}

#define LPKIT_INSTANTIATE(S)                                                                                   \
  template std::optional<AffineSolution<S>> solve_condition_ii(const std::vector<S>&, const FieldSpec&);       \
  template std::vector<S> extend_dual_eigenvalues(const std::vector<S>&, const S&, const S&);                  \
  template std::optional<AffineSolution<S>> solve_condition_iii(const TridiagonalSystem<S>&,                   \
                                                                const std::vector<S>&);                        \
  template S compute_delta_star(const std::vector<S>&, const S&, const S&);                                    \
  template bool verify_aw2(const TridiagonalSystem<S>&, const Spectrum<S>&, const RecurrenceWitness<S>&);      \
  template std::optional<RecurrenceWitness<S>> find_witness(const TridiagonalSystem<S>&);                      \
  template QPolyVerdict<S> is_q_polynomial(const TridiagonalSystem<S>&, const Spectrum<S>&, Route);            \
  template std::vector<int> leonard_ordering(const TridiagonalSystem<S>&, const Spectrum<S>&);

LPKIT_INSTANTIATE(Rational)
LPKIT_INSTANTIATE(ModP)

}  // namespace lpkit
