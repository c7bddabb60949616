#ifndef LPKIT_SYSTEM_HPP
#define LPKIT_SYSTEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "lpkit/field.hpp"
#include "lpkit/matrix.hpp"

namespace lpkit {

/// A tridiagonal/diagonal pair in a fixed basis of dual eigenvectors:
///
///   A  = tridiag(c, a, b)        row i: (c_i, a_i, b_i)
///   A* = diag(theta_star)
///
/// `b` holds b_0..b_{d-1} and `c` holds c_1..c_d (so c[i-1] is c_i). Use
/// super(i)/sub(i) for the boundary conventions b_d = 0 and c_0 = 0.
template <class S>
struct TridiagonalSystem {
  FieldSpec field;
  std::vector<S> a;
  std::vector<S> b;
  std::vector<S> c;
  std::vector<S> theta_star;

  int d() const { return static_cast<int>(a.size()) - 1; }
  S super(int i) const { return i >= 0 && i < static_cast<int>(b.size()) ? b[i] : scalar<S>(0, field); }
  S sub(int i) const { return i >= 1 && i <= static_cast<int>(c.size()) ? c[i - 1] : scalar<S>(0, field); }

  friend bool operator==(const TridiagonalSystem&, const TridiagonalSystem&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string str() const;
};

template <class S>
ValidationReport validate_system(const TridiagonalSystem<S>& sys);

/// Throws InvalidSystem carrying every violation.
template <class S>
void require_valid(const TridiagonalSystem<S>& sys);

template <class S>
struct RealizedPair {
  Matrix<S> A;
  Matrix<S> Astar;
};

template <class S>
RealizedPair<S> realize_matrices(const TridiagonalSystem<S>& sys);

/// Eigenvalues of A with their primitive idempotents, in a fixed order.
template <class S>
struct Spectrum {
  std::vector<S> theta;
  std::vector<Matrix<S>> E;

  int size() const { return static_cast<int>(theta.size()); }
};

/// Eigenvalues come from `theta_hint` (verified) when given, otherwise from a
/// root search in the ground field, sorted canonically. Each E_i is the
/// Lagrange product over the other eigenvalues.
/// Throws NotMultiplicityFree or HintInvalid.
template <class S>
Spectrum<S> compute_spectrum(const TridiagonalSystem<S>& sys,
                             const std::optional<std::vector<S>>& theta_hint = std::nullopt);

/// Spectrum relabelled so that new index k refers to old index order[k].
template <class S>
Spectrum<S> reorder(const Spectrum<S>& spec, const std::vector<int>& order);

/// The coordinate projector E*_i.
template <class S>
Matrix<S> dual_idempotent(const TridiagonalSystem<S>& sys, int i);

/// a_i = tr(E*_i A); checked against the (i,i) entry of A.
template <class S>
S intersection_a(const TridiagonalSystem<S>& sys, int i);

/// a*_r = tr(E_r A*); checks E_r A* E_r = a*_r E_r.
template <class S>
S dual_a(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r);

/// Diagonal conjugator realizing the antiautomorphism: K_0 = 1 and
/// K_{i+1} = K_i b_i / c_{i+1}.
template <class S>
std::vector<S> dagger_conjugator(const TridiagonalSystem<S>& sys);

/// X -> K^{-1} X^T K. Fixes A and every E*_i, reverses products.
template <class S>
Matrix<S> dagger(const TridiagonalSystem<S>& sys, const Matrix<S>& x);

}  // namespace lpkit

#endif  // LPKIT_SYSTEM_HPP
