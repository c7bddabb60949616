#ifndef LPKIT_LEAF_HPP
#define LPKIT_LEAF_HPP

#include <optional>
#include <string>
#include <string_view>

#include "lpkit/system.hpp"

namespace lpkit {

/// Independent deciders for "vertex r of Δ is adjacent to s and to nothing else".
enum class LeafMethod { Subspace, Recurrence, Ratio, AppendixA, AppendixB };

inline constexpr LeafMethod kAllLeafMethods[] = {LeafMethod::Subspace, LeafMethod::Recurrence, LeafMethod::Ratio,
                                                 LeafMethod::AppendixA, LeafMethod::AppendixB};

std::string_view to_string(LeafMethod m);
/// "subspace", "recurrence", "ratio", "appendix-a", "appendix-b". Throws ParseError.
LeafMethod parse_leaf_method(std::string_view text);

template <class S>
struct LeafVerdict {
  bool confirmed = false;
  LeafMethod method = LeafMethod::Subspace;
  std::optional<S> kappa;
  /// First index whose check failed, for the index-driven methods.
  std::optional<int> failing_index;
};

/// w = (A* - a*_r I) v for a nonzero v in E_r V; confirmed iff w != 0 and
/// A w = θ_s w.
template <class S>
LeafVerdict<S> leaf_by_subspace(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s);

/// The three-term relation on the cosines of θ_r, for every 0 <= i <= d, with
/// at least one nonzero right-hand side.
template <class S>
LeafVerdict<S> leaf_by_recurrence(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s);

/// a*_r != θ*_0 and u_i(θ_s) = u_i(θ_r)(θ*_i - a*_r)/(θ*_0 - a*_r) for all i.
template <class S>
LeafVerdict<S> leaf_by_ratio(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s);

/// The loop of the first appendix algorithm (j = 1..d-1). `paranoid` also
/// checks j = d, which must hold whenever θ_s is an eigenvalue; a failure there
/// is reported as InvariantViolated. Requires d >= 2 and θ*_i != θ*_0 (i >= 1).
template <class S>
LeafVerdict<S> appendix_a(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s,
                          bool paranoid = false);

/// The constant-row-sum specialization; additionally requires every row of A
/// to sum to θ_r.
template <class S>
LeafVerdict<S> appendix_b(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s);

template <class S>
LeafVerdict<S> decide_leaf(LeafMethod method, const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, int r, int s,
                           bool paranoid = false);

/// Whether the appendix preconditions (d >= 2, θ*_i != θ*_0) hold.
template <class S>
bool appendix_applicable(const TridiagonalSystem<S>& sys);

}  // namespace lpkit

#endif  // LPKIT_LEAF_HPP
