#ifndef LPKIT_QPOLY_HPP
#define LPKIT_QPOLY_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "lpkit/system.hpp"

namespace lpkit {

/// Scalars of the three-term recurrence and the cubic relation between A and
/// A*. theta_star_ext[k] is θ*_{k-1}, so it runs over θ*_{-1} .. θ*_{d+1}.
template <class S>
struct RecurrenceWitness {
  S beta, gamma_star, gamma, omega, eta_star, delta_star;
  std::vector<S> theta_star_ext;
};

enum class Route { Direct, Theorem };
/// The four conditions of the characterization, in order.
enum class Condition { I, II, III, IV };

std::string_view to_string(Route r);
std::string_view to_string(Condition c);
Route parse_route(std::string_view text);

template <class S>
struct QPolyVerdict {
  bool qpoly = false;
  Route route = Route::Direct;
  std::optional<RecurrenceWitness<S>> witness;
  std::optional<std::vector<int>> leonard_order;
  std::optional<Condition> failed_condition;
};

/// Solution set of γ* = θ*_{i-1} - βθ*_i + θ*_{i+1} (1 <= i <= d-1) in the
/// unknowns (β, γ*); std::nullopt when inconsistent.
template <class S>
std::optional<AffineSolution<S>> solve_condition_ii(const std::vector<S>& theta_star, const FieldSpec& field);

/// θ*_{-1} and θ*_{d+1} from the recurrence at i = 0 and i = d.
template <class S>
std::vector<S> extend_dual_eigenvalues(const std::vector<S>& theta_star, const S& beta, const S& gamma_star);

/// Solution set of a_i(θ*_i - θ*_{i-1})(θ*_i - θ*_{i+1}) = γθ*_i² + ωθ*_i + η*
/// (0 <= i <= d) in the unknowns (γ, ω, η*).
template <class S>
std::optional<AffineSolution<S>> solve_condition_iii(const TridiagonalSystem<S>& sys,
                                                     const std::vector<S>& theta_star_ext);

/// The common value of θ*²_{i-1} - βθ*_{i-1}θ*_i + θ*²_i - γ*(θ*_{i-1} + θ*_i)
/// over 0 <= i <= d+1. Throws NotConstant if the values differ.
template <class S>
S compute_delta_star(const std::vector<S>& theta_star_ext, const S& beta, const S& gamma_star);

/// Exact check of
///   A*²A - βA*AA* + AA*² - γ*(AA* + A*A) - δ*A = γA*² + ωA* + η*I.
template <class S>
bool verify_aw2(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, const RecurrenceWitness<S>& w);

/// Conditions (ii) and (iii) together. Because θ*_{-1} and θ*_{d+1} are affine
/// in (β, γ*), both are linear in (β, γ*, γ, ω, η*) and are solved as one
/// system. Returns the particular solution (free parameters set to zero).
template <class S>
std::optional<RecurrenceWitness<S>> find_witness(const TridiagonalSystem<S>& sys);

/// Direct route: Δ is a path. Theorem route (d >= 3): a leaf found by the
/// ratio test, solvable (ii)+(iii), and θ*_i != θ*_0 for i >= 1.
template <class S>
QPolyVerdict<S> is_q_polynomial(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, Route route);

/// Path order of Δ, after checking that the relabelled idempotents give the
/// tridiagonal zero pattern. Throws NotQPolynomial.
template <class S>
std::vector<int> leonard_ordering(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec);

}  // namespace lpkit

#endif  // LPKIT_QPOLY_HPP
