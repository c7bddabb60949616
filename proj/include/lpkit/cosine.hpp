#ifndef LPKIT_COSINE_HPP
#define LPKIT_COSINE_HPP

#include <optional>
#include <vector>

#include "lpkit/system.hpp"

namespace lpkit {

enum class BasisTag { AsGiven, Normalized };

/// u_0 .. u_{d+1} (or p_0 .. p_{d+1}); entry i has degree i.
template <class S>
struct PolynomialSequence {
  std::vector<Poly<S>> u;
  BasisTag basis = BasisTag::AsGiven;

  const Poly<S>& operator[](int i) const { return u.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(u.size()); }
};

template <class S>
struct CosineSequence {
  std::vector<S> alpha;
  S theta;
};

/// u_0 = 1, λu_i = c_i u_{i-1} + a_i u_i + b_i u_{i+1} for i < d, and the last
/// step scaled by b_0..b_{d-1} so that u_{d+1} is monic.
template <class S>
PolynomialSequence<S> u_polys(const TridiagonalSystem<S>& sys);

/// Monic p_0 .. p_{d+1}, λp_i = b_{i-1}c_i p_{i-1} + a_i p_i + p_{i+1}.
/// Cross-checked against u_polys (p_i = b_0..b_{i-1} u_i).
template <class S>
PolynomialSequence<S> p_polys(const TridiagonalSystem<S>& sys);

/// u_{d+1}, checked against the Berkowitz oracle.
template <class S>
Poly<S> char_poly(const TridiagonalSystem<S>& sys);

/// alpha_i = u_i(theta). Throws NotAnEigenvalue unless u_{d+1}(theta) = 0.
template <class S>
CosineSequence<S> cosine_sequence(const TridiagonalSystem<S>& sys, const S& theta);

/// Diagonal basis change: b'_i = targets_i and
/// c'_{i+1} = b_i c_{i+1} / targets_i. Throws ZeroTarget.
template <class S>
TridiagonalSystem<S> rescale_superdiagonal(const TridiagonalSystem<S>& sys, const std::vector<S>& targets);

/// All superdiagonal entries set to 1.
template <class S>
TridiagonalSystem<S> normalize(const TridiagonalSystem<S>& sys);

/// The common row sum c_i + a_i + b_i, if there is one.
template <class S>
std::optional<S> constant_row_sum(const TridiagonalSystem<S>& sys);

/// Rescales so that every row sums to theta. Throws NotAnEigenvalue, or
/// CosineVanishes carrying the first i with u_i(theta) = 0.
template <class S>
TridiagonalSystem<S> rebase_to_row_sum(const TridiagonalSystem<S>& sys, const S& theta);

}  // namespace lpkit

#endif  // LPKIT_COSINE_HPP
