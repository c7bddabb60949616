#include "lpkit/system.hpp"

#include <sstream>

namespace lpkit {

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) os << (i ? "; " : "") << violations[i];
  return os.str();
}

namespace {

template <class S>
bool in_field(const S&, const FieldSpec&) {
  return true;
}

template <>
bool in_field(const ModP& x, const FieldSpec& field) {
  return x.bound() && x.modulus() == field.modulus;
}

}  // namespace

template <class S>
ValidationReport validate_system(const TridiagonalSystem<S>& sys) {
  ValidationReport report;
  auto& v = report.violations;
  if (ScalarTraits<S>::kind != sys.field.kind) v.push_back("field kind does not match scalar type");
  const int d = sys.d();
  if (d < 1) v.push_back("length: d must be at least 1 (got " + std::to_string(d) + ")");
  auto check_len = [&](const char* name, std::size_t got, int want) {
    if (static_cast<int>(got) != want)
      v.push_back(std::string("length: ") + name + " has " + std::to_string(got) + " entries, expected " +
                  std::to_string(want));
  };
  check_len("b", sys.b.size(), d);
  check_len("c", sys.c.size(), d);
  check_len("theta_star", sys.theta_star.size(), d + 1);
  for (std::size_t i = 0; i < sys.b.size(); ++i)
    if (sys.b[i].is_zero()) v.push_back("superdiagonal zero at " + std::to_string(i));
  for (std::size_t i = 0; i < sys.c.size(); ++i)
    if (sys.c[i].is_zero()) v.push_back("subdiagonal zero at " + std::to_string(i + 1));
  if (sys.field.kind == ScalarTraits<S>::kind) {
    for (const auto* list : {&sys.a, &sys.b, &sys.c, &sys.theta_star})
      for (const auto& x : *list)
        if (!in_field(x, sys.field)) {
          v.push_back("entry outside " + sys.field.str());
          return report;
        }
  }
  return report;
}

template <class S>
void require_valid(const TridiagonalSystem<S>& sys) {
  auto report = validate_system(sys);
  if (!report.ok()) throw Error(ErrorKind::InvalidSystem, report.str());
}

template <class S>
RealizedPair<S> realize_matrices(const TridiagonalSystem<S>& sys) {
  require_valid(sys);
  const int n = sys.d() + 1;
  RealizedPair<S> out{zero_matrix<S>(n, n, sys.field), diagonal_matrix(sys.theta_star, sys.field)};
  for (int i = 0; i < n; ++i) {
    out.A(i, i) = sys.a[i];
    if (i + 1 < n) {
      out.A(i, i + 1) = sys.b[i];
      out.A(i + 1, i) = sys.c[i];
    }
  }
  return out;
}

template <class S>
Spectrum<S> compute_spectrum(const TridiagonalSystem<S>& sys, const std::optional<std::vector<S>>& theta_hint) {
  auto [A, Astar] = realize_matrices(sys);
  const int n = sys.d() + 1;
  Poly<S> chi = char_poly_oracle(A, sys.field);

  Spectrum<S> spec;
  if (theta_hint) {
    const auto& hint = *theta_hint;
    if (static_cast<int>(hint.size()) != n)
      throw Error(ErrorKind::HintInvalid, "expected " + std::to_string(n) + " eigenvalues, got " +
                                              std::to_string(hint.size()));
    for (int i = 0; i < n; ++i) {
      if (!chi(hint[i]).is_zero())
        throw Error(ErrorKind::HintInvalid, to_string(hint[i]) + " is not a root of " + to_string(chi, "x"), i);
      for (int j = 0; j < i; ++j)
        if (hint[i] == hint[j]) throw Error(ErrorKind::HintInvalid, "duplicate eigenvalue " + to_string(hint[i]), i);
    }
    spec.theta = hint;
  } else {
    for (const auto& root : roots_in_field(chi, sys.field)) {
      if (root.multiplicity != 1)
        throw Error(ErrorKind::NotMultiplicityFree,
                    "eigenvalue " + to_string(root.value) + " has multiplicity " + std::to_string(root.multiplicity));
      spec.theta.push_back(root.value);
    }
    if (spec.size() != n)
      throw Error(ErrorKind::NotMultiplicityFree, "only " + std::to_string(spec.size()) + " of " +
                                                      std::to_string(n) + " eigenvalues lie in " + sys.field.str());
  }

  const Matrix<S> I = identity_matrix<S>(n, sys.field);
  for (int i = 0; i < n; ++i) {
    Matrix<S> prod = I;
    S denom = scalar<S>(1, sys.field);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      prod = (prod * (A - spec.theta[j] * I)).eval();
      denom *= spec.theta[i] - spec.theta[j];
    }
    spec.E.push_back(prod * denom.inverse());
  }
  return spec;
}

template <class S>
Spectrum<S> reorder(const Spectrum<S>& spec, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != spec.size())
    throw Error(ErrorKind::IndexOutOfRange, "reorder: permutation length mismatch");
  Spectrum<S> out;
  for (int k : order) {
    if (k < 0 || k >= spec.size()) throw Error(ErrorKind::IndexOutOfRange, "reorder: bad index", k);
    out.theta.push_back(spec.theta[k]);
    out.E.push_back(spec.E[k]);
  }
  return out;
}

template <class S>
Matrix<S> dual_idempotent(const TridiagonalSystem<S>& sys, int i) {
  const int n = sys.d() + 1;
  if (i < 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "E*_" + std::to_string(i), i);
  Matrix<S> e = zero_matrix<S>(n, n, sys.field);
  e(i, i) = scalar<S>(1, sys.field);
  return e;
}

template <class S>
S intersection_a(const TridiagonalSystem<S>& sys, int i) {
  if (i < 0 || i > sys.d()) throw Error(ErrorKind::IndexOutOfRange, "a_" + std::to_string(i), i);
  auto [A, Astar] = realize_matrices(sys);
  Matrix<S> estar = dual_idempotent(sys, i);
  S t = trace<S>(estar * A);
  ensure(t == A(i, i), "tr(E*_i A) differs from the diagonal entry of A");
  ensure(estar * A * estar == t * estar, "E*_i A E*_i is not a_i E*_i");
  return t;
}

template <class S>
S dual_a(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r) {
  if (r < 0 || r >= spec.size()) throw Error(ErrorKind::IndexOutOfRange, "a*_" + std::to_string(r), r);
  auto [A, Astar] = realize_matrices(sys);
  const Matrix<S>& E = spec.E[r];
  S t = trace<S>(E * Astar);
  ensure(E * Astar * E == t * E, "E_r A* E_r is not a*_r E_r");
  return t;
}

template <class S>
std::vector<S> dagger_conjugator(const TridiagonalSystem<S>& sys) {
  require_valid(sys);
  std::vector<S> k{scalar<S>(1, sys.field)};
  for (int i = 0; i < sys.d(); ++i) k.push_back(k.back() * sys.b[i] / sys.c[i]);
  return k;
}

template <class S>
Matrix<S> dagger(const TridiagonalSystem<S>& sys, const Matrix<S>& x) {
  const Index n = sys.d() + 1;
  if (x.rows() != n || x.cols() != n) throw Error(ErrorKind::ShapeMismatch, "dagger: wrong matrix size");
  auto k = dagger_conjugator(sys);
  Matrix<S> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = x(j, i) * k[j] / k[i];
  return out;
}

#define LPKIT_INSTANTIATE(S)                                                                       \
  template ValidationReport validate_system(const TridiagonalSystem<S>&);                          \
  template void require_valid(const TridiagonalSystem<S>&);                                        \
  template RealizedPair<S> realize_matrices(const TridiagonalSystem<S>&);                          \
  template Spectrum<S> compute_spectrum(const TridiagonalSystem<S>&,                               \
                                        const std::optional<std::vector<S>>&);                     \
  template Spectrum<S> reorder(const Spectrum<S>&, const std::vector<int>&);                       \
  template Matrix<S> dual_idempotent(const TridiagonalSystem<S>&, int);                            \
  template S intersection_a(const TridiagonalSystem<S>&, int);                                     \
  template S dual_a(const TridiagonalSystem<S>&, const Spectrum<S>&, int);                         \
  template std::vector<S> dagger_conjugator(const TridiagonalSystem<S>&);                          \
  template Matrix<S> dagger(const TridiagonalSystem<S>&, const Matrix<S>&);

LPKIT_INSTANTIATE(Rational)
LPKIT_INSTANTIATE(ModP)

}  // namespace lpkit
